#include <doctest.h>

#include "helpers.hpp"
#include "su2ca/fourier.hpp"
#include "su2ca/symbols.hpp"

using namespace su2ca;

TEST_CASE("ladder symbols at the defining level") {
  const RepLevel half = RepLevel::from_doubled(1);
  const Eigen::MatrixXcd sm = ladder_symbol(FrameField::Lower, half).entries();
  const Eigen::MatrixXcd sp = ladder_symbol(FrameField::Raise, half).entries();
  const Eigen::MatrixXcd s0 = ladder_symbol(FrameField::Neutral, half).entries();
  CHECK(std::abs(sm(0, 1) + 1.0) < 1e-14);
  CHECK(std::abs(sm(0, 0)) + std::abs(sm(1, 0)) + std::abs(sm(1, 1)) < 1e-14);
  CHECK(std::abs(sp(1, 0) + 1.0) < 1e-14);
  CHECK(std::abs(s0(0, 0) + 0.5) < 1e-14);
  CHECK(std::abs(s0(1, 1) - 0.5) < 1e-14);

  const Eigen::MatrixXcd y3 = ladder_symbol(FrameField::Y3, half).entries();
  CHECK(std::abs(y3(0, 0) - Complex{0.0, 0.5}) < 1e-14);
  CHECK(std::abs(y3(1, 1) - Complex{0.0, -0.5}) < 1e-14);
}

TEST_CASE("algebra symbols are linear over the frame") {
  testutil::Rng rng(31);
  const RepLevel level = RepLevel::from_doubled(4);
  const AlgebraElement x = testutil::random_element(rng);
  const Eigen::MatrixXcd got = algebra_symbol(x, level).entries();
  const Eigen::MatrixXcd want = x.c1 * ladder_symbol(FrameField::Y1, level).entries() +
                                x.c2 * ladder_symbol(FrameField::Y2, level).entries() +
                                x.c3 * ladder_symbol(FrameField::Y3, level).entries();
  CHECK((got - want).norm() < 1e-13);

  // The ladder combinations agree with their defining frame combinations.
  const Complex i{0.0, 1.0};
  CHECK((algebra_symbol(field_raise(), level).entries() -
         (i * ladder_symbol(FrameField::Y1, level).entries() -
          ladder_symbol(FrameField::Y2, level).entries()))
            .norm() < 1e-13);
}

TEST_CASE("symbols represent the bracket at one level") {
  const RepLevel level = RepLevel::from_doubled(5);
  const Eigen::MatrixXcd sp = ladder_symbol(FrameField::Raise, level).entries();
  const Eigen::MatrixXcd sm = ladder_symbol(FrameField::Lower, level).entries();
  const Eigen::MatrixXcd s0 = ladder_symbol(FrameField::Neutral, level).entries();
  CHECK((sp * sm - sm * sp - 2.0 * s0).norm() < 1e-12);
  CHECK((sp * s0 - s0 * sp + sp).norm() < 1e-12);
}

TEST_CASE("laplace symbol is the casimir multiple of the identity") {
  for (int two_l : {0, 1, 4, 9}) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    const Eigen::MatrixXcd s = laplace_symbol(level).entries();
    CHECK((s - level.casimir() * Eigen::MatrixXcd::Identity(level.dim(), level.dim())).norm() <
          1e-12);
  }
}

TEST_CASE("finite differences confirm the symbol action") {
  testutil::Rng rng(32);
  const RepLevel level = RepLevel::from_doubled(2);
  for (const FrameField field : {FrameField::Lower, FrameField::Y2}) {
    const AlgebraElement x = field_element(field);
    for (int trial = 0; trial < 3; ++trial) {
      const GroupPoint w = testutil::random_point(rng);
      const Eigen::MatrixXcd expected =
          rep_matrix(level, w).entries() * ladder_symbol(field, level).entries();
      for (int mi = 0; mi < level.dim(); ++mi)
        for (int ni = 0; ni < level.dim(); ++ni) {
          const Complex fd =
              derivative_oracle(x, level, level.weight_at(mi), level.weight_at(ni), w);
          CHECK(std::abs(fd - expected(mi, ni)) < 1e-7);
        }
    }
  }
}

TEST_CASE("symbol calculus matches the wirtinger operators on polynomials") {
  testutil::Rng rng(33);
  for (int trial = 0; trial < 5; ++trial) {
    const ZPolynomial p = testutil::random_poly(rng, 8, 1);
    const FourierSeries coeffs = analyze_poly(p);

    struct Route {
      AlgebraElement field;
      ZPolynomial direct;
    };
    const Route routes[3] = {{field_lower(), testutil::wirtinger_lower(p)},
                             {field_raise(), testutil::wirtinger_raise(p)},
                             {field_neutral(), testutil::wirtinger_neutral(p)}};
    for (const auto& r : routes) {
      const FourierSeries applied = apply_symbol(r.field, coeffs);
      for (int i = 0; i < 6; ++i) {
        const GroupPoint x = testutil::random_point(rng);
        CHECK(std::abs(synthesize(applied, x) - r.direct.evaluate(x.z1, x.z2)) < 1e-9);
      }
    }
  }
}
