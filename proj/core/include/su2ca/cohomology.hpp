#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "su2ca/structures.hpp"
#include "su2ca/symbols.hpp"

namespace su2ca {

// Per-level matrix of one complex stage: the scalar-operator entries become
// symbol blocks, acting on stacked coefficient columns for a single row
// weight m (the m index multiplies everything by 2l+1 but never mixes).
Eigen::MatrixXcd block_matrix(const DPrimeOperator& op, RepLevel level);

// Rank decisions use the singular-value threshold 1e-9 * max(1, sigma_max).
int matrix_rank(const Eigen::MatrixXcd& m);
int kernel_dim(const Eigen::MatrixXcd& m);
int range_dim(const Eigen::MatrixXcd& m);
std::optional<double> min_nonzero_singular(const Eigen::MatrixXcd& m);

// Smallest nonzero singular value of the field's symbol at one level;
// nullopt when the symbol vanishes.
std::optional<double> spectral_gap(const AlgebraElement& x, RepLevel level);

struct Rational {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
};
Rational parse_rational(const std::string& text);  // "p", "-p" or "p/q"

struct CertificateRow {
  int two_l;
  double gap;
  double ratio;  // gap / (1 + l(l+1))^s
};

// Finite-range closed-range certificate: c_star is the smallest ratio over
// the tested levels; it passes when the tested minimum is positive. The
// trend flag records a minimum sitting at the end of the range, the honest
// warning that the bound does not extrapolate.
struct ClosedRangeCertificate {
  Rational s;
  int two_l_min = 1, two_l_max = 1;
  std::vector<CertificateRow> rows;
  double c_star = 0.0;
  int argmin_two_l = -1;
  bool passed = false;
  bool min_at_range_end = false;
};

ClosedRangeCertificate closed_range_certificate(const AlgebraElement& x, Rational s,
                                                int two_l_max);

// Explicit kernel pair of the corank-2 example's (1,0) stage at one level:
// (e_{-l}, 0) and ((2/sqrt(2l)) e_{-l+1}, e_{-l}); checks annihilation and
// independence within tol.
bool kernel_basis_check(RepLevel level, double tol = 1e-9);

struct StageDims {
  int p = 0, q = 0;
  int domain_dim = 0;  // full dimension at this level, m multiplicity included
  int ker = 0;
  int ran = 0;
  int quotient = 0;  // ker here minus range of the incoming stage
  std::optional<double> gap;
};

struct LevelReport {
  int two_l = 0;
  std::vector<StageDims> stages;
};

struct CohomologyReport {
  int corank = 1;
  int two_l_max = 0;
  std::vector<LevelReport> levels;
  std::map<std::string, long long> totals;  // bidegree label "p,q" -> sum of quotients
  std::vector<std::string> notes;
};

// Per-level kernel/range/quotient tables. The corank-1 overload also totals
// the cohomology contributions at bidegrees (0,1) and (1,1) and attaches
// closed-range notes for the two injective-type stages. Levels fan out over
// a small thread pool capped by SU2CA_THREADS.
CohomologyReport cohomology_report(const Corank1Frame& f, const Corank1Constants& c,
                                   int two_l_max);
CohomologyReport cohomology_report(const Corank2Frame& f, const Corank2Constants& c,
                                   int two_l_max);

}  // namespace su2ca
