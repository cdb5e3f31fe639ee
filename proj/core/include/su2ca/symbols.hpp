#pragma once

#include <Eigen/Dense>

#include "su2ca/group.hpp"
#include "su2ca/repr.hpp"

namespace su2ca {

// Per-level matrix symbol of a left-invariant field X: column n of the
// symbol lists the coefficients of X t^l_{mn} over t^l_{m n'}, so the action
// on a coefficient block C is C . S^T (row index m rides along untouched).
class Symbol {
public:
  Symbol(RepLevel level, Eigen::MatrixXcd entries);
  static Symbol zero(RepLevel level) {
    return Symbol(level, Eigen::MatrixXcd::Zero(level.dim(), level.dim()));
  }

  RepLevel level() const { return level_; }
  const Eigen::MatrixXcd& entries() const { return m_; }
  Complex at(Weight n_out, Weight n_in) const {
    return m_(level_.index_of(n_out), level_.index_of(n_in));
  }

  Symbol operator+(const Symbol& o) const;
  Symbol operator*(const Symbol& o) const;  // composition of actions
  friend Symbol operator*(Complex s, const Symbol& x);

private:
  RepLevel level_;
  Eigen::MatrixXcd m_;
};

enum class FrameField { Y1, Y2, Y3, Raise, Lower, Neutral };

AlgebraElement field_element(FrameField f);

// Closed-form symbol of one named frame field at one level.
Symbol ladder_symbol(FrameField f, RepLevel level);

// Symbol of an arbitrary algebra element, complex-linear in the element.
Symbol algebra_symbol(const AlgebraElement& x, RepLevel level);

// Symbol of the positive Laplacian -(Y1^2 + Y2^2 + Y3^2): l(l+1) times the identity.
Symbol laplace_symbol(RepLevel level);

// Central finite difference of t^l_{mn} along the field, step 1e-5; the
// independent check that symbols really differentiate matrix coefficients.
Complex derivative_oracle(const AlgebraElement& x, RepLevel level, Weight m, Weight n,
                          const GroupPoint& at);

}  // namespace su2ca
