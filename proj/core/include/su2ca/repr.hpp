#pragma once

#include <Eigen/Dense>

#include "su2ca/group.hpp"
#include "su2ca/half_int.hpp"
#include "su2ca/zpoly.hpp"

namespace su2ca {

// A weight is a half-integer m with |m| <= l and m - l integral; levels
// validate them before use.
using Weight = HalfInt;

// Irreducible representation level l (half-integer, >= 0). Weight lines are
// indexed ascending from -l to l, so index_of(-l) = 0 and index_of(l) = 2l.
class RepLevel {
public:
  explicit RepLevel(HalfInt l) : ell_(l) {
    if (l.doubled() < 0) throw std::invalid_argument("RepLevel: l must be >= 0");
  }
  static RepLevel from_doubled(int d) { return RepLevel(HalfInt::from_doubled(d)); }

  HalfInt l() const { return ell_; }
  int two_l() const { return ell_.doubled(); }
  int dim() const { return ell_.doubled() + 1; }
  double casimir() const { return 0.25 * ell_.doubled() * (ell_.doubled() + 2); }

  bool holds(Weight w) const {
    return std::abs(w.doubled()) <= ell_.doubled() && (w.doubled() - ell_.doubled()) % 2 == 0;
  }
  int index_of(Weight w) const {
    if (!holds(w)) throw std::invalid_argument("RepLevel: weight outside level");
    return (w.doubled() + ell_.doubled()) / 2;
  }
  Weight weight_at(int idx) const {
    if (idx < 0 || idx >= dim()) throw std::invalid_argument("RepLevel: weight index out of range");
    return HalfInt::from_doubled(2 * idx - ell_.doubled());
  }

  auto operator<=>(const RepLevel&) const = default;

private:
  HalfInt ell_;
};

inline int dim_v(RepLevel level) { return level.dim(); }

// Vector in the level-l carrier space, coordinates over the orthonormal
// basis q_{l,k} (k ascending from -l to l).
class PolyVec {
public:
  PolyVec(RepLevel level, Eigen::VectorXcd coeffs);

  static PolyVec q_basis(RepLevel level, Weight k);
  // Monomial z1^i z2^{2l-i}; equals sqrt(i! (2l-i)!) q_{l, l-i}.
  static PolyVec monomial(RepLevel level, int i);

  RepLevel level() const { return level_; }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }

private:
  RepLevel level_;
  Eigen::VectorXcd coeffs_;
};

Complex vl_inner(const PolyVec& f, const PolyVec& g);

// Matrix of coefficients attached to one level, rows indexed by m and
// columns by n, both ascending.
class CoeffMatrix {
public:
  CoeffMatrix(RepLevel level, Eigen::MatrixXcd entries);
  static CoeffMatrix zero(RepLevel level) {
    return CoeffMatrix(level, Eigen::MatrixXcd::Zero(level.dim(), level.dim()));
  }

  RepLevel level() const { return level_; }
  const Eigen::MatrixXcd& entries() const { return m_; }
  Eigen::MatrixXcd& entries() { return m_; }
  Complex at(Weight m, Weight n) const { return m_(level_.index_of(m), level_.index_of(n)); }

private:
  RepLevel level_;
  Eigen::MatrixXcd m_;
};

// Full matrix [t^l_{mn}(x)] of the level-l representation at a group point;
// unitary, and t^{1/2} is theta itself. Entries are assembled from exact
// binomial data and converted to floating point at the end.
CoeffMatrix rep_matrix(RepLevel level, const GroupPoint& x);
Complex matrix_coeff(RepLevel level, Weight m, Weight n, const GroupPoint& x);

// The same coefficient as a polynomial in z1, conj(z1), z2, conj(z2).
ZPolynomial matrix_coeff_poly(RepLevel level, Weight m, Weight n);

// Haar integral of z1^a1 conj(z1)^b1 z2^a2 conj(z2)^b2 over the sphere:
// zero unless a1 = b1 and a2 = b2, else a1! a2! / (a1+a2+1)!.
double haar_monomial_integral(int a1, int b1, int a2, int b2);

// L^2 pairing of polynomial functions: integral of p * conj(q) dHaar.
Complex haar_pair(const ZPolynomial& p, const ZPolynomial& q);

// Exact binomial coefficient for n <= 62 (fits in int64).
long long binomial(int n, int k);

}  // namespace su2ca
