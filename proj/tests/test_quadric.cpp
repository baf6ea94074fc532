#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "quadharm/parse.hpp"
#include "quadharm/quadric.hpp"

using namespace quadharm;

namespace {

std::vector<Rational> R(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

NonhyperbolicQuadratic ellipsoid234() { return make_quadric(R({2, 3, 4}), R({0, 0, 0}), -1); }
NonhyperbolicQuadratic paraboloid() { return make_quadric(R({0, 1, 0}), R({1, 0, -1}), 0); }

}  // namespace

TEST_CASE("make_quadric validation") {
  CHECK(ellipsoid234().dim() == 3);
  CHECK(paraboloid().norm_b_squared() == 1);
  CHECK_THROWS_AS(make_quadric(R({0, 0}), R({1, 1}), 0), std::invalid_argument);
  CHECK_THROWS_AS(make_quadric(R({1, -3}), R({0, 0}), -1), std::invalid_argument);
  CHECK_THROWS_AS(make_quadric(R({1}), R({0}), -1), std::invalid_argument);
  CHECK_THROWS_AS(make_quadric(R({1, 1}), R({0}), -1), std::invalid_argument);
}

TEST_CASE("parts") {
  auto [q2, q1, q0] = parts<Rational>(ellipsoid234());
  CHECK(q2 == parse_polynomial("2x1^2+3x2^2+4x3^2", 3));
  CHECK(q1.is_zero());
  CHECK(q0 == parse_polynomial("-1", 3));

  auto pp = parts<Rational>(paraboloid());
  CHECK(pp.q2 == parse_polynomial("x2^2", 3));
  CHECK(pp.q1 == parse_polynomial("x1 - x3", 3));
  CHECK(pp.q0.is_zero());

  auto circle = parts<Rational>(make_quadric(R({1, 1}), R({0, 0}), -1));
  CHECK(circle.q2 == parse_polynomial("x1^2+x2^2", 2));
  CHECK(circle.q2 + circle.q1 + circle.q0 == parse_polynomial("x1^2+x2^2-1", 2));
}

TEST_CASE("is_nondegenerate_zero_set") {
  CHECK(is_nondegenerate_zero_set(ellipsoid234()));
  CHECK(is_nondegenerate_zero_set(paraboloid()));
  CHECK_FALSE(is_nondegenerate_zero_set(make_quadric(R({1, 1}), R({0, 0}), 0)));
  // d < c^2 / 4a: x1^2 + 2 x1 + x2^2 + 1/2 = (x1 + 1)^2 + x2^2 - 1/2
  CHECK(is_nondegenerate_zero_set(make_quadric(R({1, 1}), R({2, 0}), Rational(1, 2))));
  CHECK_FALSE(is_nondegenerate_zero_set(make_quadric(R({1, 1}), R({2, 0}), 1)));
}

TEST_CASE("classify") {
  CHECK(classify(ellipsoid234()) == SurfaceKind::Ellipsoid);
  CHECK(classify(make_quadric(R({1, 2, 0}), R({0, 0, 0}), -1)) == SurfaceKind::EllipticCylinderLike);
  CHECK(classify(paraboloid()) == SurfaceKind::ParaboloidLike);
  CHECK(classify(make_quadric(R({1, 1}), R({0, 0}), 1)) == SurfaceKind::DegenerateOrEmpty);
  CHECK(to_string(SurfaceKind::ParaboloidLike) == "paraboloid-like");
}

TEST_CASE("quadric_from_poly") {
  CHECK(quadric_from_poly(parse_polynomial("2x1^2+3x2^2+4x3^2-1")) == ellipsoid234());
  CHECK_THROWS_AS(quadric_from_poly(parse_polynomial("x1*x2 - 1")), std::invalid_argument);
  CHECK_THROWS_AS(quadric_from_poly(parse_polynomial("x1^3 + x2^2")), std::invalid_argument);
  CHECK_THROWS_AS(quadric_from_poly(parse_polynomial("x1^2 - 3x2^2 - 1")), std::invalid_argument);
}

TEST_CASE("property: polynomial form evaluates like the coefficient form") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 2 + iter % 4;
    const auto q = quadharm::testing::random_quadric(rng, n);
    std::vector<Rational> x(n);
    for (auto& v : x) v = quadharm::testing::random_rational(rng);
    Rational expected = q.d();
    for (std::size_t j = 0; j < n; ++j) expected += q.a()[j] * x[j] * x[j] + q.c()[j] * x[j];
    CHECK(evaluate(q.to_polynomial<Rational>(), std::span<const Rational>(x)) == expected);
    // Delta q is the positive constant 2 sum a_j
    CHECK(laplacian(q.to_polynomial<Rational>()) == Poly<Rational>::constant(n, 2 * q.norm_b_squared()));
    CHECK(q.norm_b_squared() > 0);
  }
}
