#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "quadharm/parse.hpp"
#include "quadharm/verify.hpp"

using namespace quadharm;

namespace {

Poly<Rational> P(const char* text, std::size_t n = 3) { return parse_polynomial(text, n); }

// Reference cofactor for x1^4 x2^3 on 2x1^2 + 3x2^2 + 4x3^2 = 1, in the form
// h = p + q F.
Poly<Rational> published_quartic_cubic_cofactor() {
  return P("97950/20144813 x2^5 - 2524856930/100139865423 x1^2 x2 - 3423451/60434439 x1^4 x2"
           " - 148091/33379955141 x2^3 - 2306686/20144813 x1^2 x2^3 - 701980831/500699327115 x2"
           " + 32326712/7703066571 x2 x3^2 + 3712712/60434439 x1^2 x2 x3^2"
           " + 53836/20144813 x2^3 x3^2 - 236464/60434439 x2 x3^4");
}

}  // namespace

TEST_CASE("verify_solution") {
  const auto q = parse_surface("2x1^2+3x2^2+4x3^2-1");
  const auto p = P("x1^4*x2^3");
  const auto qp = q.to_polynomial<Rational>();
  const Poly<Rational> f = -published_quartic_cubic_cofactor();
  FischerDecomposition<Rational> printed{p - qp * f, f};

  auto report = verify_solution(p, q, printed);
  CHECK(report.harmonic_ok);
  CHECK(report.residual_ok);
  CHECK(report.surface_nondegenerate);
  CHECK(report.ok());

  auto tampered = printed;
  tampered.h += P("x1^2");
  report = verify_solution(p, q, tampered);
  CHECK_FALSE(report.harmonic_ok);

  tampered = printed;
  tampered.f += P("1");
  report = verify_solution(p, q, tampered);
  CHECK_FALSE(report.residual_ok);
  CHECK(report.residual == -qp);
}

TEST_CASE("verify_solution: float mode reports against tolerance") {
  const auto q = parse_surface("2x1^2+3x2^2+4x3^2-1");
  const auto p = convert<double>(P("x1^4*x2^3"));
  const auto dec = solve_dirichlet(p, q);
  const auto report = verify_solution(p, q, dec);
  CHECK(report.harmonic_ok);
  CHECK(report.residual_ok);
  REQUIRE_FALSE(report.notes.empty());
  CHECK(report.notes.back().find("max |residual|") != std::string::npos);
}

TEST_CASE("oracle_full_system") {
  const auto q2 = P("2x1^2 + 3x2^2", 2);
  CHECK(oracle_full_system(P("x1^2", 2), q2, 0) == P("1/5", 2));
  CHECK(oracle_full_system(P("x1^3 - 3x1*x2^2", 2), q2, 1).is_zero());

  std::mt19937 rng(8);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = 2 + iter % 3;
    const unsigned m = iter % 6;
    const auto q = quadharm::testing::random_quadric(rng, n);
    const auto pH = quadharm::testing::random_homogeneous(rng, n, m + 2);
    CHECK(oracle_full_system(pH, q.q2<Rational>(), m) == solve_homogeneous(pH, q.q2<Rational>()));
  }
}

TEST_CASE("oracle_L_matrix") {
  const auto ell = parse_surface("2x1^2+3x2^2+4x3^2-1");
  const auto p = P("x1^4*x2^3");
  const auto ref = oracle_L_matrix(p, ell);
  const auto dec = solve_dirichlet(p, ell);
  CHECK(ref.h == dec.h);
  CHECK(ref.f == dec.f);
  CHECK(ref.f == -published_quartic_cubic_cofactor());

  const auto full = oracle_L_matrix(ell.to_polynomial<Rational>(), ell);
  CHECK(full.h.is_zero());
  CHECK(full.f == P("1"));

  const auto para = parse_surface("x2^2 + x1 - x3");
  const auto pr = oracle_L_matrix(P("x2^2"), para);
  CHECK(pr.h == P("x3 - x1"));
  CHECK(pr.f == P("1"));
}

TEST_CASE("check_L_bijective") {
  const auto ell = parse_surface("2x1^2+3x2^2+4x3^2-1");
  for (unsigned m = 0; m <= 6; ++m) CHECK(check_L_bijective(ell, m));
  CHECK(check_L_bijective(parse_surface("x2^2 + x1 - x3"), 0));

  // x1^2 - 3x2^2 is hyperbolic and (x1^2 - 3x2^2) x1 is harmonic
  const auto hyper = P("x1^2 - 3x2^2", 2);
  CHECK_FALSE(check_L_bijective(hyper, 1));
  const auto witness = l_kernel_witness(hyper, 1);
  REQUIRE(witness.has_value());
  CHECK(laplacian(hyper * *witness).is_zero());
  CHECK(witness->term_count() == 1);
  CHECK(witness->coeff(MultiIndex{1, 0}) != 0);

  CHECK(check_L_bijective(hyper, 0));
  CHECK_FALSE(l_kernel_witness(P("x1^2 + x2^2 - 1", 2), 3).has_value());
}

TEST_CASE("uniqueness: a harmonic perturbation of h is rejected") {
  std::mt19937 rng(12);
  for (int iter = 0; iter < 20; ++iter) {
    const std::size_t n = 2 + iter % 3;
    const auto q = quadharm::testing::random_quadric(rng, n);
    const auto p = quadharm::testing::random_poly(rng, n, 5);
    const auto dec = solve_dirichlet(p, q);
    // a nonzero harmonic perturbation taken from another problem's solution
    Poly<Rational> g = solve_dirichlet(quadharm::testing::random_poly(rng, n, 4), q).h;
    if (g.is_zero()) g = Poly<Rational>::variable(n, 0);
    const auto h2 = dec.h + g;
    // the cofactor that would be forced for h2 is the same f, since Delta(p - h2) = Delta p
    const auto forced = oracle_L_matrix(p - g, q);
    CHECK(forced.h != h2);
    const auto report = verify_solution(p, q, FischerDecomposition<Rational>{h2, dec.f});
    CHECK(report.harmonic_ok);
    CHECK_FALSE(report.residual_ok);
  }
}
