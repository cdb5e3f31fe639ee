#pragma once

#include <Eigen/Dense>
#include <complex>

#include "su2ca/errors.hpp"

namespace su2ca {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

// Point of the unit sphere in C^2, identified with a 2x2 special unitary
// matrix through theta(). The pair is the canonical representation; the
// matrix is a derived view.
struct GroupPoint {
  Complex z1{1.0, 0.0};
  Complex z2{0.0, 0.0};

  double sphere_defect() const;  // | |z1|^2 + |z2|^2 - 1 |
};

// Element of the complexified Lie algebra, stored as coefficients over the
// orthonormal real frame (Y1, Y2, Y3). Real coefficients give the compact
// real form; complex ones cover fields such as the raising/lowering pair.
struct AlgebraElement {
  Complex c1{0.0, 0.0};
  Complex c2{0.0, 0.0};
  Complex c3{0.0, 0.0};

  bool is_real(double tol = 1e-12) const;
  AlgebraElement conjugate() const { return {std::conj(c1), std::conj(c2), std::conj(c3)}; }
  Matrix2 matrix() const;

  AlgebraElement operator+(const AlgebraElement& o) const {
    return {c1 + o.c1, c2 + o.c2, c3 + o.c3};
  }
  AlgebraElement operator-(const AlgebraElement& o) const {
    return {c1 - o.c1, c2 - o.c2, c3 - o.c3};
  }
  AlgebraElement operator-() const { return {-c1, -c2, -c3}; }
  friend AlgebraElement operator*(Complex s, const AlgebraElement& x) {
    return {s * x.c1, s * x.c2, s * x.c3};
  }
  double norm() const { return std::sqrt(std::norm(c1) + std::norm(c2) + std::norm(c3)); }
};

// The orthonormal frame and the raising/lowering/neutral combinations
// d_plus = i Y1 - Y2, d_minus = i Y1 + Y2, d_zero = i Y3.
AlgebraElement frame_y1();
AlgebraElement frame_y2();
AlgebraElement frame_y3();
AlgebraElement field_raise();
AlgebraElement field_lower();
AlgebraElement field_neutral();

// Unitary matrix [[z1, -conj(z2)], [z2, conj(z1)]] of a sphere point.
Matrix2 theta(const GroupPoint& x);
GroupPoint theta_inv(const Matrix2& u);

// Group law pulled back to the sphere; rejects inputs off the sphere by
// more than 1e-9.
GroupPoint group_mul(const GroupPoint& w, const GroupPoint& z);

// exp(t X) as a sphere point, for real X. Scaling-and-squaring matrix
// exponential at relative tolerance 1e-13.
GroupPoint exp_curve(const AlgebraElement& x, double t);
Matrix2 expm2(const Matrix2& a);

// Lie bracket, complex-bilinear over the (Y1, Y2, Y3) coefficients.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

// Inverse of AlgebraElement::matrix(); the input must be traceless.
AlgebraElement element_from_matrix(const Matrix2& m);

// Adjoint action of a group point on an algebra element.
AlgebraElement adjoint(const GroupPoint& g, const AlgebraElement& x);

// Bi-invariant metric (A, B) = 2 tr(A B*) on real elements; (Y_i, Y_j) = delta_ij.
double frame_inner(const AlgebraElement& a, const AlgebraElement& b);

}  // namespace su2ca
