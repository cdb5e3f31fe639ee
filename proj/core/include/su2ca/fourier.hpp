#pragma once

#include <Eigen/Dense>
#include <map>

#include "su2ca/repr.hpp"
#include "su2ca/symbols.hpp"
#include "su2ca/zpoly.hpp"

namespace su2ca {

// Finitely supported family of coefficient blocks, one square block per
// level, keyed by the doubled level. The function it denotes is
// sum over levels of sqrt(2l+1) * sum_{mn} c_{mn} t^l_{mn}; with that
// normalization the L^2 norm is the Frobenius norm over all blocks.
class FourierSeries {
public:
  FourierSeries() = default;

  bool has_level(int two_l) const { return blocks_.count(two_l) != 0; }
  const Eigen::MatrixXcd& block(int two_l) const;
  void set_block(RepLevel level, Eigen::MatrixXcd b);
  void set_coeff(RepLevel level, Weight m, Weight n, Complex c);
  Complex coeff(int two_l, Weight m, Weight n) const;  // zero when absent

  const std::map<int, Eigen::MatrixXcd>& blocks() const { return blocks_; }
  int max_two_l() const { return blocks_.empty() ? -1 : blocks_.rbegin()->first; }
  bool empty() const { return blocks_.empty(); }

  // Drop blocks whose largest entry is at most tol.
  void prune(double tol = 0.0);

private:
  std::map<int, Eigen::MatrixXcd> blocks_;
};

// Pointwise value of the series at a group point.
Complex synthesize(const FourierSeries& f, const GroupPoint& x);

// Coefficients of a polynomial function via Haar pairings against matrix
// coefficients; exact inverse of synthesize on polynomial input. Total
// degree is capped at 12.
FourierSeries analyze_poly(const ZPolynomial& p);

// Apply a left-invariant field blockwise through its symbols.
FourierSeries apply_symbol(const AlgebraElement& x, const FourierSeries& f);

double l2_norm(const FourierSeries& f);

// Minimal-norm solution u of (lowering field) u = f; throws NotInRangeError
// when any top-weight coefficient of f exceeds tol in absolute value.
FourierSeries solve_lowering(const FourierSeries& f, double tol = 1e-9);

}  // namespace su2ca
