#include <doctest.h>

#include "helpers.hpp"
#include "su2ca/errors.hpp"
#include "su2ca/fourier.hpp"

using namespace su2ca;

TEST_CASE("series storage validates weights") {
  FourierSeries f;
  const RepLevel one = RepLevel::from_doubled(2);
  f.set_coeff(one, HalfInt::from_doubled(0), HalfInt::from_doubled(2), {1.0, 0.0});
  CHECK(f.coeff(2, HalfInt::from_doubled(0), HalfInt::from_doubled(2)) == Complex{1.0, 0.0});
  CHECK(f.coeff(2, HalfInt::from_doubled(2), HalfInt::from_doubled(0)) == Complex{});
  CHECK(f.coeff(4, HalfInt::from_doubled(0), HalfInt::from_doubled(0)) == Complex{});
  CHECK_THROWS_AS(
      f.set_coeff(one, HalfInt::from_doubled(1), HalfInt::from_doubled(0), {1.0, 0.0}),
      std::invalid_argument);
}

TEST_CASE("a single coefficient synthesizes one matrix coefficient") {
  testutil::Rng rng(41);
  const RepLevel level = RepLevel::from_doubled(3);
  FourierSeries f;
  f.set_coeff(level, HalfInt::from_doubled(-1), HalfInt::from_doubled(3), {0.0, 2.0});
  for (int i = 0; i < 5; ++i) {
    const GroupPoint x = testutil::random_point(rng);
    const Complex want = Complex{0.0, 2.0} * 2.0 *
                         matrix_coeff(level, HalfInt::from_doubled(-1),
                                      HalfInt::from_doubled(3), x);
    CHECK(std::abs(synthesize(f, x) - want) < 1e-12);
  }
}

TEST_CASE("analyze recovers simple polynomials") {
  const FourierSeries c = analyze_poly(ZPolynomial::constant({3.0, -1.0}));
  CHECK(c.blocks().size() == 1);
  CHECK(std::abs(c.coeff(0, HalfInt::from_doubled(0), HalfInt::from_doubled(0)) -
                 Complex{3.0, -1.0}) < 1e-12);

  const FourierSeries z1 = analyze_poly(ZPolynomial::monomial(1, 0, 0, 0));
  CHECK(z1.blocks().size() == 1);
  CHECK(z1.has_level(1));
  CHECK(std::abs(z1.coeff(1, HalfInt::from_doubled(-1), HalfInt::from_doubled(-1)) -
                 Complex{1.0 / std::sqrt(2.0), 0.0}) < 1e-12);
}

TEST_CASE("analyze rejects high-degree input") {
  CHECK_THROWS_AS(analyze_poly(ZPolynomial::monomial(7, 6, 0, 0)), std::invalid_argument);
}

TEST_CASE("the series norm satisfies parseval against haar pairing") {
  testutil::Rng rng(42);
  const FourierSeries f = testutil::random_series(rng, 3);
  ZPolynomial p;
  for (const auto& [two_l, block] : f.blocks()) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    const double root_dim = std::sqrt(static_cast<double>(level.dim()));
    for (int mi = 0; mi < level.dim(); ++mi)
      for (int ni = 0; ni < level.dim(); ++ni)
        p = p + (root_dim * block(mi, ni)) *
                    matrix_coeff_poly(level, level.weight_at(mi), level.weight_at(ni));
  }
  const Complex pairing = haar_pair(p, p);
  CHECK(std::abs(pairing.imag()) < 1e-10);
  CHECK(std::abs(pairing.real() - l2_norm(f) * l2_norm(f)) < 1e-9);

  const FourierSeries back = analyze_poly(p);
  for (const auto& [two_l, block] : f.blocks())
    CHECK((back.block(two_l) - block).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("the laplacian assembled from frame fields scales each level") {
  testutil::Rng rng(43);
  const FourierSeries f = testutil::random_series(rng, 4);
  FourierSeries delta;
  for (const AlgebraElement& y : {frame_y1(), frame_y2(), frame_y3()}) {
    const FourierSeries yyf = apply_symbol(y, apply_symbol(y, f));
    for (const auto& [two_l, block] : yyf.blocks()) {
      const RepLevel level = RepLevel::from_doubled(two_l);
      if (delta.has_level(two_l))
        delta.set_block(level, delta.block(two_l) - block);
      else
        delta.set_block(level, -block);
    }
  }
  for (const auto& [two_l, block] : f.blocks()) {
    const RepLevel level = RepLevel::from_doubled(two_l);
    if (two_l == 0) {
      if (delta.has_level(0)) CHECK(delta.block(0).cwiseAbs().maxCoeff() < 1e-12);
      continue;
    }
    CHECK((delta.block(two_l) - level.casimir() * block).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("lowering solve inverts in-range data and reports obstructions") {
  testutil::Rng rng(44);
  const FourierSeries f = testutil::random_series(rng, 6, true);
  const FourierSeries u = solve_lowering(f);
  const FourierSeries back = apply_symbol(field_lower(), u);
  for (const auto& [two_l, block] : f.blocks())
    CHECK((back.block(two_l) - block).cwiseAbs().maxCoeff() < 1e-12);
  for (const auto& [two_l, block] : u.blocks())
    CHECK(block.col(0).cwiseAbs().maxCoeff() == 0.0);  // no kernel component

  FourierSeries g = testutil::random_series(rng, 2, true);
  g.set_coeff(RepLevel::from_doubled(2), HalfInt::from_doubled(0), HalfInt::from_doubled(2),
              {1e-3, 0.0});
  g.set_coeff(RepLevel::from_doubled(0), HalfInt::from_doubled(0), HalfInt::from_doubled(0),
              {0.5, 0.0});
  try {
    solve_lowering(g);
    CHECK(false);
  } catch (const NotInRangeError& e) {
    REQUIRE(e.offenders.size() == 2);
    CHECK(e.offenders[0].two_l == 0);
    CHECK(e.offenders[1].two_l == 2);
    CHECK(e.offenders[1].two_n == 2);
  }

  // Obstructions below the tolerance are treated as zero.
  FourierSeries h;
  h.set_coeff(RepLevel::from_doubled(1), HalfInt::from_doubled(1), HalfInt::from_doubled(-1),
              {1.0, 0.0});
  h.set_coeff(RepLevel::from_doubled(1), HalfInt::from_doubled(1), HalfInt::from_doubled(1),
              {1e-12, 0.0});
  CHECK_NOTHROW(solve_lowering(h));
}
