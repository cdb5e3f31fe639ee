#include <doctest.h>

#include "helpers.hpp"
#include "su2ca/repr.hpp"

using namespace su2ca;

TEST_CASE("levels index their weight ladder") {
  const RepLevel level = RepLevel::from_doubled(3);
  CHECK(level.dim() == 4);
  CHECK(level.weight_at(0).doubled() == -3);
  CHECK(level.weight_at(3).doubled() == 3);
  CHECK(level.index_of(HalfInt::from_doubled(1)) == 2);
  CHECK(level.casimir() == doctest::Approx(15.0 / 4.0));
  CHECK_FALSE(level.holds(HalfInt::from_doubled(2)));  // wrong parity
  CHECK_THROWS_AS(level.index_of(HalfInt::from_doubled(5)), std::invalid_argument);
  CHECK_THROWS_AS(RepLevel::from_doubled(-1), std::invalid_argument);
}

TEST_CASE("the defining level reproduces theta") {
  testutil::Rng rng(21);
  const RepLevel half = RepLevel::from_doubled(1);
  for (int i = 0; i < 10; ++i) {
    const GroupPoint w = testutil::random_point(rng);
    const Eigen::MatrixXcd t = rep_matrix(half, w).entries();
    CHECK(std::abs(t(0, 0) - w.z1) < 1e-14);
    CHECK(std::abs(t(1, 0) - w.z2) < 1e-14);
    CHECK(std::abs(t(0, 1) + std::conj(w.z2)) < 1e-14);
    CHECK(std::abs(t(1, 1) - std::conj(w.z1)) < 1e-14);
  }
}

TEST_CASE("representation matrices are unitary homomorphisms at the identity") {
  testutil::Rng rng(22);
  const GroupPoint e{{1.0, 0.0}, {0.0, 0.0}};
  for (int two_l = 0; two_l <= 5; ++two_l) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    CHECK((rep_matrix(level, e).entries() -
           Eigen::MatrixXcd::Identity(level.dim(), level.dim()))
              .norm() < 1e-13);
    const GroupPoint w = testutil::random_point(rng), z = testutil::random_point(rng);
    const Eigen::MatrixXcd tw = rep_matrix(level, w).entries(),
                           tz = rep_matrix(level, z).entries();
    CHECK((tw.adjoint() * tw - Eigen::MatrixXcd::Identity(level.dim(), level.dim())).norm() <
          1e-12);
    CHECK((rep_matrix(level, group_mul(w, z)).entries() - tw * tz).norm() < 1e-12);
  }
}

TEST_CASE("matrix coefficient polynomials evaluate to the matrix entries") {
  testutil::Rng rng(23);
  for (int two_l = 0; two_l <= 4; ++two_l) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    const GroupPoint w = testutil::random_point(rng);
    for (int mi = 0; mi < level.dim(); ++mi)
      for (int ni = 0; ni < level.dim(); ++ni) {
        const Weight m = level.weight_at(mi), n = level.weight_at(ni);
        const Complex via_poly = matrix_coeff_poly(level, m, n).evaluate(w.z1, w.z2);
        CHECK(std::abs(via_poly - matrix_coeff(level, m, n, w)) < 1e-12);
      }
  }
}

TEST_CASE("haar integrals of monomials") {
  CHECK(haar_monomial_integral(0, 0, 0, 0) == doctest::Approx(1.0));
  CHECK(haar_monomial_integral(1, 1, 0, 0) == doctest::Approx(0.5));
  CHECK(haar_monomial_integral(2, 2, 0, 0) == doctest::Approx(1.0 / 3.0));
  CHECK(haar_monomial_integral(1, 1, 1, 1) == doctest::Approx(1.0 / 6.0));
  CHECK(haar_monomial_integral(1, 0, 0, 1) == doctest::Approx(0.0));
  CHECK(haar_monomial_integral(3, 3, 2, 2) == doctest::Approx(6.0 * 2.0 / 720.0));
}

TEST_CASE("matrix coefficients are orthogonal across low levels") {
  const RepLevel one = RepLevel::from_doubled(2);
  const ZPolynomial t01 = matrix_coeff_poly(one, HalfInt::from_doubled(0),
                                            HalfInt::from_doubled(2));
  CHECK(std::abs(haar_pair(t01, t01) - Complex{1.0 / 3.0, 0.0}) < 1e-12);

  const RepLevel half = RepLevel::from_doubled(1);
  const ZPolynomial s = matrix_coeff_poly(half, HalfInt::from_doubled(-1),
                                          HalfInt::from_doubled(1));
  CHECK(std::abs(haar_pair(t01, s)) < 1e-12);
}
