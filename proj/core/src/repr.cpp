#include "su2ca/repr.hpp"

#include <cmath>
#include <vector>

namespace su2ca {

namespace {

// p! / q! as a double, exact products of small integers.
double factorial_ratio(int p, int q) {
  double r = 1.0;
  for (int v = q + 1; v <= p; ++v) r *= v;
  for (int v = p + 1; v <= q; ++v) r /= v;
  return r;
}

struct ExpansionTerm {
  int e_z1, e_z1c, e_z2, e_z2c;
  double coeff;
};

// Terms of t^l_{mn} as a polynomial in (w1, conj w1, w2, conj w2): substitute
// the transposed matrix of the point into q_{l,n}, expand both binomials and
// read the q_{l,m} coordinate.
std::vector<ExpansionTerm> coeff_terms(RepLevel level, Weight m, Weight n) {
  const int A = level.l().minus_as_int(n);   // l - n
  const int B = level.l().plus_as_int(n);    // l + n
  const int K = level.l().minus_as_int(m);   // l - m
  const double pref = std::sqrt(factorial_ratio(K, A) * factorial_ratio(level.two_l() - K, B));
  std::vector<ExpansionTerm> out;
  const int lo = std::max(0, K - B), hi = std::min(A, K);
  for (int i = lo; i <= hi; ++i) {
    const int j = K - i;
    double c = pref * static_cast<double>(binomial(A, i)) * static_cast<double>(binomial(B, j));
    if (j % 2 != 0) c = -c;
    out.push_back({i, B - j, A - i, j, c});
  }
  return out;
}

}  // namespace

PolyVec::PolyVec(RepLevel level, Eigen::VectorXcd coeffs) : level_(level), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != level_.dim())
    throw std::invalid_argument("PolyVec: coefficient count does not match level dimension");
}

PolyVec PolyVec::q_basis(RepLevel level, Weight k) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(level.dim());
  v(level.index_of(k)) = 1.0;
  return PolyVec(level, std::move(v));
}

PolyVec PolyVec::monomial(RepLevel level, int i) {
  if (i < 0 || i > level.two_l())
    throw std::invalid_argument("PolyVec: monomial exponent out of range");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(level.dim());
  const int j = level.two_l() - i;
  const Weight k = HalfInt::from_doubled(level.two_l() - 2 * i);  // l - i
  v(level.index_of(k)) = std::sqrt(factorial_ratio(i, 0) * factorial_ratio(j, 0));
  return PolyVec(level, std::move(v));
}

Complex vl_inner(const PolyVec& f, const PolyVec& g) {
  if (f.level() != g.level())
    throw std::invalid_argument("vl_inner: vectors from different levels");
  return f.coeffs().dot(g.coeffs());  // Eigen's dot conjugates the left factor
}

CoeffMatrix::CoeffMatrix(RepLevel level, Eigen::MatrixXcd entries)
    : level_(level), m_(std::move(entries)) {
  if (m_.rows() != level_.dim() || m_.cols() != level_.dim())
    throw std::invalid_argument("CoeffMatrix: shape does not match level dimension");
}

CoeffMatrix rep_matrix(RepLevel level, const GroupPoint& x) {
  const int d = level.dim(), n2l = level.two_l();
  // Power tables for the four generators of the entries.
  std::vector<Complex> p1(n2l + 1), p1c(n2l + 1), p2(n2l + 1), p2c(n2l + 1);
  p1[0] = p1c[0] = p2[0] = p2c[0] = 1.0;
  for (int i = 1; i <= n2l; ++i) {
    p1[i] = p1[i - 1] * x.z1;
    p1c[i] = p1c[i - 1] * std::conj(x.z1);
    p2[i] = p2[i - 1] * x.z2;
    p2c[i] = p2c[i - 1] * std::conj(x.z2);
  }
  Eigen::MatrixXcd t(d, d);
  for (int mi = 0; mi < d; ++mi)
    for (int ni = 0; ni < d; ++ni) {
      Complex sum{};
      for (const auto& term : coeff_terms(level, level.weight_at(mi), level.weight_at(ni)))
        sum += term.coeff * p1[term.e_z1] * p1c[term.e_z1c] * p2[term.e_z2] * p2c[term.e_z2c];
      t(mi, ni) = sum;
    }
  return CoeffMatrix(level, std::move(t));
}

Complex matrix_coeff(RepLevel level, Weight m, Weight n, const GroupPoint& x) {
  Complex sum{};
  for (const auto& term : coeff_terms(level, m, n)) {
    Complex v = term.coeff;
    for (int i = 0; i < term.e_z1; ++i) v *= x.z1;
    for (int i = 0; i < term.e_z1c; ++i) v *= std::conj(x.z1);
    for (int i = 0; i < term.e_z2; ++i) v *= x.z2;
    for (int i = 0; i < term.e_z2c; ++i) v *= std::conj(x.z2);
    sum += v;
  }
  return sum;
}

ZPolynomial matrix_coeff_poly(RepLevel level, Weight m, Weight n) {
  ZPolynomial p;
  for (const auto& term : coeff_terms(level, m, n))
    p.add_term({term.e_z1, term.e_z1c, term.e_z2, term.e_z2c}, term.coeff);
  return p;
}

double haar_monomial_integral(int a1, int b1, int a2, int b2) {
  if (a1 < 0 || b1 < 0 || a2 < 0 || b2 < 0)
    throw std::invalid_argument("haar_monomial_integral: negative exponent");
  if (a1 != b1 || a2 != b2) return 0.0;
  return 1.0 / (static_cast<double>(a1 + a2 + 1) * static_cast<double>(binomial(a1 + a2, a1)));
}

Complex haar_pair(const ZPolynomial& p, const ZPolynomial& q) {
  Complex sum{};
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms()) {
      // conj(q-term) swaps barred and unbarred exponents.
      double w = haar_monomial_integral(kp[0] + kq[1], kp[1] + kq[0], kp[2] + kq[3], kp[3] + kq[2]);
      if (w != 0.0) sum += cp * std::conj(cq) * w;
    }
  return sum;
}

long long binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static const auto table = [] {
    std::vector<std::vector<long long>> t(63);
    for (int i = 0; i < 63; ++i) {
      t[i].resize(i + 1, 1);
      for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  if (n >= 63) throw std::invalid_argument("binomial: n too large");
  return table[n][k];
}

}  // namespace su2ca
