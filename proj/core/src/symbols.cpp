#include "su2ca/symbols.hpp"

#include <cmath>

namespace su2ca {

namespace {

const Complex I{0.0, 1.0};

// sqrt((l-n)(l+n+1)) and sqrt((l+n)(l-n+1)), the raising/lowering weights.
double lam_up(RepLevel level, Weight n) {
  const int dl = level.two_l(), dn = n.doubled();
  return std::sqrt(0.25 * (dl - dn) * (dl + dn + 2));
}
double lam_down(RepLevel level, Weight n) {
  const int dl = level.two_l(), dn = n.doubled();
  return std::sqrt(0.25 * (dl + dn) * (dl - dn + 2));
}

}  // namespace

Symbol::Symbol(RepLevel level, Eigen::MatrixXcd entries) : level_(level), m_(std::move(entries)) {
  if (m_.rows() != level_.dim() || m_.cols() != level_.dim())
    throw std::invalid_argument("Symbol: shape does not match level dimension");
}

Symbol Symbol::operator+(const Symbol& o) const {
  if (level_ != o.level_) throw std::invalid_argument("Symbol: level mismatch");
  return Symbol(level_, m_ + o.m_);
}

Symbol Symbol::operator*(const Symbol& o) const {
  if (level_ != o.level_) throw std::invalid_argument("Symbol: level mismatch");
  return Symbol(level_, m_ * o.m_);
}

Symbol operator*(Complex s, const Symbol& x) { return Symbol(x.level_, s * x.m_); }

AlgebraElement field_element(FrameField f) {
  switch (f) {
    case FrameField::Y1: return frame_y1();
    case FrameField::Y2: return frame_y2();
    case FrameField::Y3: return frame_y3();
    case FrameField::Raise: return field_raise();
    case FrameField::Lower: return field_lower();
    case FrameField::Neutral: return field_neutral();
  }
  throw std::invalid_argument("field_element: unknown field");
}

Symbol ladder_symbol(FrameField f, RepLevel level) {
  const int d = level.dim();
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d, d);
  for (int ni = 0; ni < d; ++ni) {
    const Weight n = level.weight_at(ni);
    const double up = lam_up(level, n), down = lam_down(level, n);
    switch (f) {
      case FrameField::Y1:
        if (ni + 1 < d) s(ni + 1, ni) = 0.5 * I * up;
        if (ni - 1 >= 0) s(ni - 1, ni) = 0.5 * I * down;
        break;
      case FrameField::Y2:
        if (ni + 1 < d) s(ni + 1, ni) = 0.5 * up;
        if (ni - 1 >= 0) s(ni - 1, ni) = -0.5 * down;
        break;
      case FrameField::Y3:
        s(ni, ni) = -I * n.value();
        break;
      case FrameField::Raise:
        if (ni + 1 < d) s(ni + 1, ni) = -up;
        break;
      case FrameField::Lower:
        if (ni - 1 >= 0) s(ni - 1, ni) = -down;
        break;
      case FrameField::Neutral:
        s(ni, ni) = n.value();
        break;
    }
  }
  return Symbol(level, std::move(s));
}

Symbol algebra_symbol(const AlgebraElement& x, RepLevel level) {
  Eigen::MatrixXcd s = x.c1 * ladder_symbol(FrameField::Y1, level).entries() +
                       x.c2 * ladder_symbol(FrameField::Y2, level).entries() +
                       x.c3 * ladder_symbol(FrameField::Y3, level).entries();
  return Symbol(level, std::move(s));
}

Symbol laplace_symbol(RepLevel level) {
  return Symbol(level, level.casimir() * Eigen::MatrixXcd::Identity(level.dim(), level.dim()));
}

Complex derivative_oracle(const AlgebraElement& x, RepLevel level, Weight m, Weight n,
                          const GroupPoint& at) {
  constexpr double h = 1e-5;
  const AlgebraElement re{x.c1.real(), x.c2.real(), x.c3.real()};
  const AlgebraElement im{x.c1.imag(), x.c2.imag(), x.c3.imag()};
  auto along = [&](const AlgebraElement& dir) -> Complex {
    if (dir.norm() == 0.0) return {};
    const Complex fp = matrix_coeff(level, m, n, group_mul(at, exp_curve(dir, h)));
    const Complex fm = matrix_coeff(level, m, n, group_mul(at, exp_curve(dir, -h)));
    return (fp - fm) / (2.0 * h);
  };
  return along(re) + I * along(im);
}

}  // namespace su2ca
