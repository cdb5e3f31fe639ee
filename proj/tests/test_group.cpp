#include <doctest.h>

#include "helpers.hpp"
#include "su2ca/group.hpp"

using namespace su2ca;

TEST_CASE("theta lands in the special unitary group") {
  testutil::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const Matrix2 u = theta(testutil::random_point(rng));
    CHECK((u.adjoint() * u - Matrix2::Identity()).norm() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(u.determinant() - 1.0) < 1e-12);
  }
}

TEST_CASE("group law matches matrix multiplication and is associative") {
  testutil::Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const GroupPoint w = testutil::random_point(rng), z = testutil::random_point(rng),
                     v = testutil::random_point(rng);
    CHECK((theta(group_mul(w, z)) - theta(w) * theta(z)).norm() < 1e-12);
    const GroupPoint a = group_mul(group_mul(w, z), v), b = group_mul(w, group_mul(z, v));
    CHECK(std::abs(a.z1 - b.z1) + std::abs(a.z2 - b.z2) < 1e-12);
  }
}

TEST_CASE("group law rejects points off the sphere") {
  const GroupPoint bad{{2.0, 0.0}, {0.0, 0.0}};
  const GroupPoint ok{{1.0, 0.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(group_mul(bad, ok), std::domain_error);
}

TEST_CASE("exponential of the neutral direction is the diagonal torus") {
  for (const double t : {0.0, 0.3, -1.7, 3.1}) {
    const GroupPoint p = exp_curve(frame_y3(), t);
    CHECK(std::abs(p.z1 - std::polar(1.0, t / 2)) < 1e-12);
    CHECK(std::abs(p.z2) < 1e-12);
  }
}

TEST_CASE("exponential rejects complex elements") {
  CHECK_THROWS_AS(exp_curve(field_raise(), 1.0), std::domain_error);
}

TEST_CASE("bracket tables for both bases") {
  auto close = [](const AlgebraElement& a, const AlgebraElement& b) {
    return (a - b).norm() < 1e-14;
  };
  CHECK(close(bracket(frame_y1(), frame_y2()), frame_y3()));
  CHECK(close(bracket(frame_y2(), frame_y3()), frame_y1()));
  CHECK(close(bracket(frame_y3(), frame_y1()), frame_y2()));
  CHECK(close(bracket(field_raise(), field_lower()), 2.0 * field_neutral()));
  CHECK(close(bracket(field_raise(), field_neutral()), -1.0 * field_raise()));
  CHECK(close(bracket(field_lower(), field_neutral()), field_lower()));
}

TEST_CASE("adjoint action preserves brackets and the metric") {
  testutil::Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    const GroupPoint g = testutil::random_point(rng);
    const AlgebraElement x = testutil::random_element(rng), y = testutil::random_element(rng);
    CHECK((adjoint(g, bracket(x, y)) - bracket(adjoint(g, x), adjoint(g, y))).norm() < 1e-12);
    const AlgebraElement xr = testutil::random_element(rng, true),
                         yr = testutil::random_element(rng, true);
    CHECK(frame_inner(adjoint(g, xr), adjoint(g, yr)) ==
          doctest::Approx(frame_inner(xr, yr)).epsilon(1e-12));
  }
}

TEST_CASE("element_from_matrix inverts the matrix form") {
  testutil::Rng rng(14);
  for (int i = 0; i < 10; ++i) {
    const AlgebraElement x = testutil::random_element(rng);
    CHECK((element_from_matrix(x.matrix()) - x).norm() < 1e-13);
  }
  CHECK_THROWS_AS(element_from_matrix(Matrix2::Identity()), std::domain_error);
}
