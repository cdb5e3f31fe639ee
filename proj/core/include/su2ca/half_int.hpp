#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace su2ca {

// Half-integer stored as its doubled value, so 3/2 is HalfInt::from_doubled(3).
// Representation levels, weights and weight shifts are all half-integers; sums
// and differences that land on whole integers (l+n, l-n, ...) are exposed as
// exact ints to keep index arithmetic away from floating point.
class HalfInt {
public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : doubled_(2 * whole) {}

  static constexpr HalfInt from_doubled(int d) {
    HalfInt h;
    h.doubled_ = d;
    return h;
  }

  constexpr int doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  constexpr double value() const { return 0.5 * doubled_; }

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_doubled(doubled_ + o.doubled_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_doubled(doubled_ - o.doubled_); }

  // Exact integer value of this + o; throws if the sum is not a whole integer.
  constexpr int plus_as_int(HalfInt o) const {
    int d = doubled_ + o.doubled_;
    if (d % 2 != 0) throw std::invalid_argument("HalfInt sum is not an integer");
    return d / 2;
  }
  constexpr int minus_as_int(HalfInt o) const { return plus_as_int(-o); }

  constexpr auto operator<=>(const HalfInt&) const = default;

  std::string str() const {
    if (is_integer()) return std::to_string(doubled_ / 2);
    return std::to_string(doubled_) + "/2";
  }

private:
  int doubled_ = 0;
};

inline constexpr HalfInt half() { return HalfInt::from_doubled(1); }

}  // namespace su2ca
