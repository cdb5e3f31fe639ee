#include "su2ca/group.hpp"

#include <cmath>

namespace su2ca {

namespace {
const Complex I{0.0, 1.0};
}

double GroupPoint::sphere_defect() const {
  return std::abs(std::norm(z1) + std::norm(z2) - 1.0);
}

bool AlgebraElement::is_real(double tol) const {
  return std::abs(c1.imag()) <= tol && std::abs(c2.imag()) <= tol && std::abs(c3.imag()) <= tol;
}

Matrix2 AlgebraElement::matrix() const {
  // Y1 = [[0, i/2], [i/2, 0]], Y2 = [[0, -1/2], [1/2, 0]], Y3 = [[i/2, 0], [0, -i/2]]
  Matrix2 m;
  m(0, 0) = 0.5 * I * c3;
  m(0, 1) = 0.5 * I * c1 - 0.5 * c2;
  m(1, 0) = 0.5 * I * c1 + 0.5 * c2;
  m(1, 1) = -0.5 * I * c3;
  return m;
}

AlgebraElement frame_y1() { return {1.0, 0.0, 0.0}; }
AlgebraElement frame_y2() { return {0.0, 1.0, 0.0}; }
AlgebraElement frame_y3() { return {0.0, 0.0, 1.0}; }
AlgebraElement field_raise() { return {I, -1.0, 0.0}; }
AlgebraElement field_lower() { return {I, 1.0, 0.0}; }
AlgebraElement field_neutral() { return {0.0, 0.0, I}; }

Matrix2 theta(const GroupPoint& x) {
  Matrix2 m;
  m(0, 0) = x.z1;
  m(0, 1) = -std::conj(x.z2);
  m(1, 0) = x.z2;
  m(1, 1) = std::conj(x.z1);
  return m;
}

GroupPoint theta_inv(const Matrix2& u) { return {u(0, 0), u(1, 0)}; }

GroupPoint group_mul(const GroupPoint& w, const GroupPoint& z) {
  if (w.sphere_defect() > 1e-9 || z.sphere_defect() > 1e-9)
    throw std::domain_error("group_mul: input point is off the unit sphere");
  return {w.z1 * z.z1 - std::conj(w.z2) * z.z2, w.z2 * z.z1 + std::conj(w.z1) * z.z2};
}

Matrix2 expm2(const Matrix2& a) {
  // Scale so the Taylor series converges fast, sum to relative 1e-13, square back.
  double nrm = a.norm();
  int squarings = 0;
  Matrix2 b = a;
  if (nrm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
    b = a / std::pow(2.0, squarings);
  }
  Matrix2 result = Matrix2::Identity();
  Matrix2 term = Matrix2::Identity();
  for (int k = 1; k <= 60; ++k) {
    term = (term * b) / static_cast<double>(k);
    result += term;
    if (term.norm() <= 1e-13 * result.norm()) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

GroupPoint exp_curve(const AlgebraElement& x, double t) {
  if (!x.is_real())
    throw std::domain_error("exp_curve: direction must lie in the real algebra");
  return theta_inv(expm2(t * x.matrix()));
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  // [Y1,Y2]=Y3 cyclically, extended bilinearly: the complex cross product.
  return {x.c2 * y.c3 - x.c3 * y.c2, x.c3 * y.c1 - x.c1 * y.c3, x.c1 * y.c2 - x.c2 * y.c1};
}

AlgebraElement element_from_matrix(const Matrix2& m) {
  if (std::abs(m(0, 0) + m(1, 1)) > 1e-10 * (1.0 + m.norm()))
    throw std::domain_error("element_from_matrix: matrix is not traceless");
  return {-I * (m(0, 1) + m(1, 0)), m(1, 0) - m(0, 1), -2.0 * I * m(0, 0)};
}

AlgebraElement adjoint(const GroupPoint& g, const AlgebraElement& x) {
  const Matrix2 u = theta(g);
  return element_from_matrix(u * x.matrix() * u.adjoint());
}

double frame_inner(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.is_real() || !b.is_real())
    throw std::domain_error("frame_inner: metric is defined on real elements");
  Complex v = 2.0 * (a.matrix() * b.matrix().adjoint()).trace();
  return v.real();
}

}  // namespace su2ca
