#include "su2ca/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace su2ca {

ZPolynomial ZPolynomial::monomial(int a1, int b1, int a2, int b2, Complex coeff) {
  if (a1 < 0 || b1 < 0 || a2 < 0 || b2 < 0)
    throw std::invalid_argument("ZPolynomial: negative exponent");
  ZPolynomial p;
  p.add_term({a1, b1, a2, b2}, coeff);
  return p;
}

void ZPolynomial::add_term(const Key& k, Complex c) {
  if (c == Complex{}) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

ZPolynomial ZPolynomial::operator+(const ZPolynomial& o) const {
  ZPolynomial r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

ZPolynomial ZPolynomial::operator-(const ZPolynomial& o) const {
  ZPolynomial r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

ZPolynomial ZPolynomial::operator*(const ZPolynomial& o) const {
  ZPolynomial r;
  for (const auto& [k, c] : terms_)
    for (const auto& [k2, c2] : o.terms_)
      r.add_term({k[0] + k2[0], k[1] + k2[1], k[2] + k2[2], k[3] + k2[3]}, c * c2);
  return r;
}

ZPolynomial operator*(Complex s, const ZPolynomial& p) {
  ZPolynomial r;
  for (const auto& [k, c] : p.terms_) r.add_term(k, s * c);
  return r;
}

ZPolynomial ZPolynomial::conjugate() const {
  ZPolynomial r;
  for (const auto& [k, c] : terms_) r.add_term({k[1], k[0], k[3], k[2]}, std::conj(c));
  return r;
}

ZPolynomial ZPolynomial::dbar1() const {
  ZPolynomial r;
  for (const auto& [k, c] : terms_)
    if (k[1] > 0) r.add_term({k[0], k[1] - 1, k[2], k[3]}, static_cast<double>(k[1]) * c);
  return r;
}

ZPolynomial ZPolynomial::dbar2() const {
  ZPolynomial r;
  for (const auto& [k, c] : terms_)
    if (k[3] > 0) r.add_term({k[0], k[1], k[2], k[3] - 1}, static_cast<double>(k[3]) * c);
  return r;
}

Complex ZPolynomial::evaluate(Complex z1, Complex z2) const {
  Complex sum{};
  Complex w1 = std::conj(z1), w2 = std::conj(z2);
  for (const auto& [k, c] : terms_) {
    Complex v = c;
    for (int i = 0; i < k[0]; ++i) v *= z1;
    for (int i = 0; i < k[1]; ++i) v *= w1;
    for (int i = 0; i < k[2]; ++i) v *= z2;
    for (int i = 0; i < k[3]; ++i) v *= w2;
    sum += v;
  }
  return sum;
}

int ZPolynomial::total_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k[0] + k[1] + k[2] + k[3]);
  return d;
}

}  // namespace su2ca
