#include "su2ca/fourier.hpp"

#include <cmath>

#include "su2ca/errors.hpp"

namespace su2ca {

const Eigen::MatrixXcd& FourierSeries::block(int two_l) const {
  auto it = blocks_.find(two_l);
  if (it == blocks_.end()) throw std::invalid_argument("FourierSeries: level not present");
  return it->second;
}

void FourierSeries::set_block(RepLevel level, Eigen::MatrixXcd b) {
  if (b.rows() != level.dim() || b.cols() != level.dim())
    throw std::invalid_argument("FourierSeries: block shape does not match level");
  blocks_[level.two_l()] = std::move(b);
}

void FourierSeries::set_coeff(RepLevel level, Weight m, Weight n, Complex c) {
  auto it = blocks_.find(level.two_l());
  if (it == blocks_.end())
    it = blocks_.emplace(level.two_l(), Eigen::MatrixXcd::Zero(level.dim(), level.dim())).first;
  it->second(level.index_of(m), level.index_of(n)) = c;
}

Complex FourierSeries::coeff(int two_l, Weight m, Weight n) const {
  auto it = blocks_.find(two_l);
  if (it == blocks_.end()) return {};
  RepLevel level = RepLevel::from_doubled(two_l);
  return it->second(level.index_of(m), level.index_of(n));
}

void FourierSeries::prune(double tol) {
  for (auto it = blocks_.begin(); it != blocks_.end();) {
    if (it->second.cwiseAbs().maxCoeff() <= tol)
      it = blocks_.erase(it);
    else
      ++it;
  }
}

Complex synthesize(const FourierSeries& f, const GroupPoint& x) {
  Complex sum{};
  for (const auto& [two_l, c] : f.blocks()) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    const CoeffMatrix t = rep_matrix(level, x);
    sum += std::sqrt(static_cast<double>(level.dim())) * c.cwiseProduct(t.entries()).sum();
  }
  return sum;
}

FourierSeries analyze_poly(const ZPolynomial& p) {
  const int deg = p.total_degree();
  if (deg > 12) throw std::invalid_argument("analyze_poly: total degree exceeds 12");
  FourierSeries out;
  if (deg < 0) return out;
  double scale = 1.0;
  for (const auto& [k, c] : p.terms()) scale = std::max(scale, std::abs(c));
  for (int two_l = 0; two_l <= deg; ++two_l) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    const double root_dim = std::sqrt(static_cast<double>(level.dim()));
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(level.dim(), level.dim());
    for (int mi = 0; mi < level.dim(); ++mi)
      for (int ni = 0; ni < level.dim(); ++ni)
        block(mi, ni) = root_dim * haar_pair(p, matrix_coeff_poly(level, level.weight_at(mi),
                                                                  level.weight_at(ni)));
    if (block.cwiseAbs().maxCoeff() > 1e-12 * scale) out.set_block(level, std::move(block));
  }
  return out;
}

FourierSeries apply_symbol(const AlgebraElement& x, const FourierSeries& f) {
  FourierSeries out;
  for (const auto& [two_l, c] : f.blocks()) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    out.set_block(level, c * algebra_symbol(x, level).entries().transpose());
  }
  return out;
}

double l2_norm(const FourierSeries& f) {
  double s = 0.0;
  for (const auto& [two_l, c] : f.blocks()) s += c.squaredNorm();
  return std::sqrt(s);
}

FourierSeries solve_lowering(const FourierSeries& f, double tol) {
  std::vector<NotInRangeError::Coord> offenders;
  for (const auto& [two_l, c] : f.blocks()) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    const int top = level.dim() - 1;
    for (int mi = 0; mi < level.dim(); ++mi)
      if (std::abs(c(mi, top)) > tol)
        offenders.push_back({two_l, level.weight_at(mi).doubled(), level.weight_at(top).doubled()});
  }
  if (!offenders.empty()) throw NotInRangeError(std::move(offenders));

  FourierSeries u;
  for (const auto& [two_l, c] : f.blocks()) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    const int d = level.dim();
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(d, d);
    for (int ni = 0; ni + 1 < d; ++ni) {
      // (lowering u) at column ni equals -sqrt((l+n)(l-n+1)) u at column ni+1,
      // with n the weight of column ni+1.
      const int dl = two_l, dn = level.weight_at(ni + 1).doubled();
      const double lam = std::sqrt(0.25 * (dl + dn) * (dl - dn + 2));
      for (int mi = 0; mi < d; ++mi) b(mi, ni + 1) = -c(mi, ni) / lam;
    }
    u.set_block(level, std::move(b));
  }
  u.prune();
  return u;
}

}  // namespace su2ca
