#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadharm/fischer.hpp"
#include "quadharm/linsolve.hpp"
#include "quadharm/poly.hpp"
#include "quadharm/quadric.hpp"

namespace quadharm {

inline constexpr double kFloatResidualTolerance = 1e-9;

template <typename S>
struct VerificationReport {
  bool harmonic_ok = false;     // laplacian(h) == 0
  bool residual_ok = false;     // p - h - q f == 0
  Poly<S> residual;
  std::optional<bool> oracle_match;
  bool surface_nondegenerate = false;
  std::vector<std::string> notes;

  bool ok() const { return harmonic_ok && residual_ok && oracle_match.value_or(true); }
};

/// Checks both decomposition identities. Exact mode demands exact zeros; float
/// mode accepts a max-abs coefficient up to kFloatResidualTolerance and records
/// the measured values in notes.
template <typename S>
VerificationReport<S> verify_solution(const Poly<S>& p, const NonhyperbolicQuadratic& q,
                                      const FischerDecomposition<S>& dec);

/// Solves Delta(q2 f) = Delta pH for homogeneous f of degree m as one dense
/// system over every order-m multi-index, without the parity partition.
template <typename S>
Poly<S> oracle_full_system(const Poly<S>& pH, const Poly<S>& q2, unsigned m);

/// solve_dirichlet driven by oracle_full_system at every cascade level.
template <typename S>
FischerDecomposition<S> solve_dirichlet_full(const Poly<S>& p, const NonhyperbolicQuadratic& q);

/// Matrix of f -> Delta(q f) on the monomial basis of P_m (all monomials of
/// degree <= m, graded-lex). Works for any quadratic q, hyperbolic included.
DenseMatrix<Rational> l_operator_matrix(const Poly<Rational>& q, unsigned m);

/// Solves Delta(q f) = Delta p directly on P_{deg p - 2} with the full
/// quadric (no cascade, no partition, no derivative formulas) and returns
/// (p - q f, f). Throws SingularSystem if L is not invertible.
FischerDecomposition<Rational> oracle_L_matrix(const Poly<Rational>& p,
                                               const NonhyperbolicQuadratic& q);

/// True iff f -> Delta(q f) is invertible on P_m.
bool check_L_bijective(const NonhyperbolicQuadratic& q, unsigned m);
bool check_L_bijective(const Poly<Rational>& q, unsigned m);

/// A nonzero f in P_m with Delta(q f) = 0, if one exists.
std::optional<Poly<Rational>> l_kernel_witness(const Poly<Rational>& q, unsigned m);

}  // namespace quadharm
