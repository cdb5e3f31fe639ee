#pragma once

#include <array>
#include <complex>
#include <map>

namespace su2ca {

using Complex = std::complex<double>;

// Polynomial in z1, conj(z1), z2, conj(z2) with complex coefficients; the
// restriction to the unit sphere is the function it denotes. The key packs
// the four exponents (a1, b1, a2, b2) for z1^a1 conj(z1)^b1 z2^a2 conj(z2)^b2.
class ZPolynomial {
public:
  using Key = std::array<int, 4>;

  ZPolynomial() = default;

  static ZPolynomial monomial(int a1, int b1, int a2, int b2, Complex coeff = 1.0);
  static ZPolynomial constant(Complex c) { return monomial(0, 0, 0, 0, c); }

  void add_term(const Key& k, Complex c);

  ZPolynomial operator+(const ZPolynomial& o) const;
  ZPolynomial operator-(const ZPolynomial& o) const;
  ZPolynomial operator*(const ZPolynomial& o) const;
  friend ZPolynomial operator*(Complex s, const ZPolynomial& p);

  ZPolynomial conjugate() const;

  // Formal Wirtinger derivatives in conj(z1) and conj(z2).
  ZPolynomial dbar1() const;
  ZPolynomial dbar2() const;

  Complex evaluate(Complex z1, Complex z2) const;
  int total_degree() const;  // max over terms of a1+b1+a2+b2; -1 when zero
  bool is_zero() const { return terms_.empty(); }

  const std::map<Key, Complex>& terms() const { return terms_; }

private:
  std::map<Key, Complex> terms_;
};

}  // namespace su2ca
