#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "quadharm/parse.hpp"
#include "quadharm/poly.hpp"

using namespace quadharm;
using quadharm::testing::random_homogeneous;
using quadharm::testing::random_index;
using quadharm::testing::random_poly;

namespace {

Poly<Rational> P(const char* text, std::size_t n = 3) { return parse_polynomial(text, n); }

}  // namespace

TEST_CASE("multi-index basics") {
  MultiIndex a{4, 3, 0};
  CHECK(a.order() == 7);
  CHECK(a.factorial_string() == "144");
  CHECK(MultiIndex::unit(3, 1) == MultiIndex{0, 1, 0});
  CHECK_FALSE(a.minus(MultiIndex{0, 5, 0}).has_value());
  CHECK(*a.minus(MultiIndex{1, 1, 0}) == MultiIndex{3, 2, 0});
  CHECK(a.parity() == MultiIndex{0, 1, 0});
  CHECK(count_of_order(3, 10) == 66);
  CHECK(multi_indices_of_order(3, 10).size() == 66);
  CHECK(multi_indices_up_to(3, 2).size() == 10);

  const auto order2 = multi_indices_of_order(2, 2);
  REQUIRE(order2.size() == 3);
  CHECK(order2[0] == MultiIndex{2, 0});
  CHECK(order2[2] == MultiIndex{0, 2});
}

TEST_CASE("add") {
  CHECK((P("x1") + P("-x1")).is_zero());
  CHECK(P("x1^2") + P("x2^2") == P("x1^2 + x2^2"));
  CHECK(P("1/2x1") + P("1/3x1") == P("5/6x1"));
  CHECK_THROWS_AS(P("x1", 2) + P("x1", 3), DimensionMismatch);
}

TEST_CASE("mul") {
  CHECK(P("x1 + x2") * P("x1 - x2") == P("x1^2 - x2^2"));
  const auto q = P("2x1^2 + 3x2^2 + 4x3^2 - 1");
  CHECK(q * P("1") == q);
  CHECK(P("x1^2 - 3x2^2") * P("x1") == P("x1^3 - 3x1*x2^2"));
  CHECK_THROWS_AS(P("x1", 2) * P("x1", 3), DimensionMismatch);
}

TEST_CASE("partial") {
  CHECK(partial(P("x1^3"), 0) == P("3x1^2"));
  CHECK(partial(P("x1^2*x2"), 1) == P("x1^2"));
  CHECK(partial(P("7"), 2).is_zero());
}

TEST_CASE("d_alpha") {
  CHECK(d_alpha(P("x1^4*x2^3"), MultiIndex{4, 3, 0}) == P("144"));
  CHECK(d_alpha(P("x1^2*x2"), MultiIndex{2, 0, 0}) == P("2x2"));
  CHECK(d_alpha(P("x1^4*x2^3"), MultiIndex{0, 5, 0}).is_zero());
}

TEST_CASE("gradient") {
  auto g = gradient(P("x1^2 + x2^2", 2));
  REQUIRE(g.size() == 2);
  CHECK(g[0] == P("2x1", 2));
  CHECK(g[1] == P("2x2", 2));
  g = gradient(P("5", 2));
  CHECK(g[0].is_zero());
  CHECK(g[1].is_zero());
  g = gradient(P("x1*x2", 2));
  CHECK(g[0] == P("x2", 2));
  CHECK(g[1] == P("x1", 2));
}

TEST_CASE("laplacian") {
  CHECK(laplacian(P("x1^20*x2^7")) == P("42x1^20*x2^5 + 380x1^18*x2^7"));
  CHECK(laplacian(P("(x1^2 - 3x2^2)x1")).is_zero());
  CHECK(laplacian(P("x1^2 + x2^2")) == P("4"));
}

TEST_CASE("laplacian_product") {
  CHECK(laplacian_product(P("x1^2"), P("x1")) == P("6x1"));
  const auto q = P("2x1^2 + x2 - 5");
  CHECK(laplacian_product(q, P("1")) == laplacian(q));
  // Direct differentiation of (x1^2 + x2^2) x1 x2 gives 12 x1 x2.
  const auto q2 = P("x1^2 + x2^2", 2);
  const auto p2 = P("x1*x2", 2);
  CHECK(laplacian(q2 * p2) == P("12x1*x2", 2));
  CHECK(laplacian_product(q2, p2) == P("12x1*x2", 2));
}

TEST_CASE("homogeneous_components") {
  const auto parts = homogeneous_components(P("x1^2 + x1 + 3", 1));
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].first == 0);
  CHECK(parts[0].second == P("3", 1));
  CHECK(parts[1].first == 1);
  CHECK(parts[2].second == P("x1^2", 1));
  const auto single = homogeneous_components(P("x1^4*x2^3"));
  REQUIRE(single.size() == 1);
  CHECK(single[0].first == 7);
  CHECK(homogeneous_components(Poly<Rational>(3)).empty());
}

TEST_CASE("degree of zero is the sentinel") {
  CHECK(Poly<Rational>(2).degree() == kZeroDegree);
  CHECK(P("x1^2*x2 + 1").degree() == 3);
}

TEST_CASE("taylor_reconstruct") {
  std::map<MultiIndex, Rational, GradedLex> v;
  v[MultiIndex{2, 0}] = 2;
  CHECK(taylor_reconstruct<Rational>(2, 2, v) == P("x1^2", 2));
  v.clear();
  v[MultiIndex{1, 1}] = 1;
  CHECK(taylor_reconstruct<Rational>(2, 2, v) == P("x1*x2", 2));
  v.clear();
  v[MultiIndex{0, 0}] = Rational(1, 5);
  CHECK(taylor_reconstruct<Rational>(2, 0, v) == P("1/5", 2));
  v[MultiIndex{1, 0}] = 1;
  CHECK_THROWS_AS(taylor_reconstruct<Rational>(2, 0, v), std::invalid_argument);
}

TEST_CASE("product_diff_linear") {
  CHECK(product_diff_linear(P("x1", 1), P("x1", 1), MultiIndex{2}) == P("2", 1));
  CHECK(product_diff_linear(P("x2", 2), P("x1^2", 2), MultiIndex{2, 0}) == P("2x2", 2));
  const auto g = P("3x1 + 1", 2);
  const auto f = P("x1*x2", 2);
  CHECK(product_diff_linear(g, f, MultiIndex{1, 1}) == d_alpha(g * f, MultiIndex{1, 1}));
  CHECK(product_diff_linear(g, f, MultiIndex{1, 1}) == P("6x1 + 1", 2));
  CHECK_THROWS_AS(product_diff_linear(P("x1^2", 2), f, MultiIndex{1, 0}), std::invalid_argument);
}

TEST_CASE("product_diff_quadratic") {
  CHECK(product_diff_quadratic(P("x1^2", 2), P("x1^2", 2), MultiIndex{2, 0}) == P("12x1^2", 2));
  const auto q = P("2x1^2 + 3x2^2 - x1 + 4", 2);
  const auto f = P("x1^3*x2 - x2^2", 2);
  CHECK(product_diff_quadratic(q, f, MultiIndex{0, 0}) == q * f);
  CHECK(product_diff_quadratic(P("x1^2", 2), P("5", 2), MultiIndex{1, 0}) == P("10x1", 2));
  CHECK_THROWS_AS(product_diff_quadratic(P("x1*x2", 2), f, MultiIndex{1, 0}), std::invalid_argument);
}

TEST_CASE("evaluate") {
  const auto q = P("2x1^2 + 3x2^2 + 4x3^2 - 1");
  const std::vector<Rational> x{Rational(1, 2), Rational(-1), Rational(1, 3)};
  CHECK(evaluate(q, std::span<const Rational>(x)) == Rational(53, 18));
}

TEST_CASE("float polynomials prune exact zeros only") {
  Poly<double> p(2);
  p.add_term(MultiIndex{1, 0}, 1e-300);
  CHECK(p.term_count() == 1);
  p.add_term(MultiIndex{1, 0}, -1e-300);
  CHECK(p.is_zero());
}

TEST_CASE("property: d_alpha is linear and composes") {
  std::mt19937 rng(20240611);
  for (int iter = 0; iter < 250; ++iter) {
    const std::size_t n = 1 + iter % 4;
    const auto p = random_poly(rng, n, 6);
    const auto r = random_poly(rng, n, 6);
    const auto a = random_index(rng, n, 4);
    const auto b = random_index(rng, n, 4);
    const Rational s = quadharm::testing::random_nonzero_rational(rng);
    CHECK(d_alpha(p + r * s, a) == d_alpha(p, a) + d_alpha(r, a) * s);
    CHECK(d_alpha(d_alpha(p, b), a) == d_alpha(p, a + b));
    // one partial at a time, in reverse axis order
    Poly<Rational> step = p;
    for (std::size_t j = n; j-- > 0;) {
      for (unsigned k = 0; k < a[j]; ++k) step = partial(step, j);
    }
    CHECK(step == d_alpha(p, a));
  }
}

TEST_CASE("property: laplacian_product matches direct laplacian") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 2 + iter % 3;
    const auto q = quadharm::testing::random_quadric(rng, n).to_polynomial<Rational>();
    const auto p = random_poly(rng, n, 6);
    CHECK(laplacian_product(q, p) == laplacian(q * p));
  }
}

TEST_CASE("property: taylor_reconstruct inverts D^alpha on H_m") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t n = 1 + iter % 4;
    const unsigned m = iter % 7;
    const auto f = random_homogeneous(rng, n, m);
    std::map<MultiIndex, Rational, GradedLex> vals;
    for (const auto& a : multi_indices_of_order(n, m)) vals[a] = d_alpha(f, a).coeff(MultiIndex(n));
    CHECK(taylor_reconstruct(n, m, vals) == f);
  }
}

TEST_CASE("property: results independent of accumulation order") {
  std::mt19937 rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    const auto p = random_poly(rng, 3, 5, 10);
    Poly<Rational> forward(3), backward(3);
    std::vector<std::pair<MultiIndex, Rational>> terms(p.terms().begin(), p.terms().end());
    for (const auto& [a, c] : terms) forward.add_term(a, c);
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) backward.add_term(it->first, it->second);
    CHECK(forward == backward);
    CHECK(to_string(forward) == to_string(backward));
  }
}

TEST_CASE("property: product rule closed forms match direct differentiation") {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = 1 + iter % 4;
    const auto f = random_poly(rng, n, 5);
    const auto alpha = random_index(rng, n, 6);
    auto g = random_poly(rng, n, 1);
    CHECK(product_diff_linear(g, f, alpha) == d_alpha(g * f, alpha));
    Poly<Rational> q(n);
    for (std::size_t j = 0; j < n; ++j) {
      MultiIndex sq(n);
      sq[j] = 2;
      q.add_term(sq, quadharm::testing::random_rational(rng));
      q.add_term(MultiIndex::unit(n, j), quadharm::testing::random_rational(rng));
    }
    q.add_term(MultiIndex(n), quadharm::testing::random_rational(rng));
    CHECK(product_diff_quadratic(q, f, alpha) == d_alpha(q * f, alpha));
  }
}
