#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace su2ca {

// A lowering equation d-u = f with f touching the top-weight line has no
// solution; the offending coefficients are reported as doubled (l, m, n).
struct NotInRangeError : std::runtime_error {
  struct Coord {
    int two_l, two_m, two_n;
  };
  std::vector<Coord> offenders;

  explicit NotInRangeError(std::vector<Coord> where)
      : std::runtime_error(describe(where)), offenders(std::move(where)) {}

private:
  static std::string describe(const std::vector<Coord>& where) {
    std::string s = "right-hand side is not in the range of the lowering operator; "
                    "obstructed coefficients (two_l, two_m, two_n):";
    for (const auto& c : where)
      s += " (" + std::to_string(c.two_l) + "," + std::to_string(c.two_m) + "," +
           std::to_string(c.two_n) + ")";
    return s;
  }
};

// Corank-1 frames need span{L1, L2} closed under the bracket.
struct NotSubalgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Frame vectors must span the complexified algebra.
struct DegenerateFrameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace su2ca
