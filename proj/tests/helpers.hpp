#pragma once

#include <random>

#include "su2ca/fourier.hpp"
#include "su2ca/group.hpp"
#include "su2ca/zpoly.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline su2ca::GroupPoint random_point(Rng& rng) {
  std::normal_distribution<double> g;
  const double a = g(rng), b = g(rng), c = g(rng), d = g(rng);
  const double n = std::sqrt(a * a + b * b + c * c + d * d);
  return {{a / n, b / n}, {c / n, d / n}};
}

inline su2ca::AlgebraElement random_element(Rng& rng, bool real_only = false) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto coeff = [&] {
    return real_only ? su2ca::Complex{u(rng), 0.0} : su2ca::Complex{u(rng), u(rng)};
  };
  return {coeff(), coeff(), coeff()};
}

inline su2ca::FourierSeries random_series(Rng& rng, int two_l_max,
                                          bool zero_top_column = false) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  su2ca::FourierSeries f;
  for (int two_l = 0; two_l <= two_l_max; ++two_l) {
    const su2ca::RepLevel level = su2ca::RepLevel::from_doubled(two_l);
    Eigen::MatrixXcd b(level.dim(), level.dim());
    for (int mi = 0; mi < level.dim(); ++mi)
      for (int ni = 0; ni < level.dim(); ++ni) b(mi, ni) = su2ca::Complex{u(rng), u(rng)};
    if (zero_top_column) b.col(level.dim() - 1).setZero();
    f.set_block(level, std::move(b));
  }
  f.prune();
  return f;
}

inline su2ca::ZPolynomial random_poly(Rng& rng, int terms, int max_exp) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<int> e(0, max_exp);
  su2ca::ZPolynomial p;
  for (int k = 0; k < terms; ++k)
    p = p + su2ca::ZPolynomial::monomial(e(rng), e(rng), e(rng), e(rng), {u(rng), u(rng)});
  return p;
}

// The three ladder fields as concrete differential operators on polynomials,
// an oracle that never touches the symbol machinery. The lowering field acts
// as z1 d/d(conj z2) - z2 d/d(conj z1); raising is its conjugate companion;
// the neutral field scales each monomial by half its antiholomorphic-minus-
// holomorphic degree.
inline su2ca::ZPolynomial wirtinger_lower(const su2ca::ZPolynomial& p) {
  using su2ca::ZPolynomial;
  return ZPolynomial::monomial(1, 0, 0, 0) * p.dbar2() -
         ZPolynomial::monomial(0, 0, 1, 0) * p.dbar1();
}

inline su2ca::ZPolynomial wirtinger_raise(const su2ca::ZPolynomial& p) {
  return -1.0 * wirtinger_lower(p.conjugate()).conjugate();
}

inline su2ca::ZPolynomial wirtinger_neutral(const su2ca::ZPolynomial& p) {
  su2ca::ZPolynomial out;
  for (const auto& [key, c] : p.terms()) {
    const double n_weight = 0.5 * ((key[1] + key[3]) - (key[0] + key[2]));
    if (n_weight != 0.0) out.add_term(key, n_weight * c);
  }
  return out;
}

}  // namespace testutil
