#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "quadharm/fischer.hpp"
#include "quadharm/poly.hpp"
#include "quadharm/verify.hpp"

namespace quadharm {

/// Terms as [{"e": [exponents], "c": coefficient}], graded-lex. Exact
/// coefficients are "num/den" strings; float coefficients are JSON numbers.
template <typename S>
nlohmann::json poly_to_json(const Poly<S>& p);

/// Inverse of poly_to_json for exact polynomials. Accepts "num/den" strings,
/// integer strings and JSON integers.
Poly<Rational> poly_from_json(const nlohmann::json& terms, std::size_t n);

/// Solver output:
///   {"n", "mode", "boundary", "surface", "surface_kind",
///    "h": [...], "f": [...], "verify": {"harmonic", "residual_zero"}, "timing_ms"}
template <typename S>
struct SolutionDocument {
  std::size_t n = 0;
  std::string boundary;
  std::string surface;
  std::string surface_kind;
  FischerDecomposition<S> decomposition;
  std::optional<VerificationReport<S>> report;
  double timing_ms = 0.0;
};

template <typename S>
nlohmann::json to_json(const SolutionDocument<S>& doc);

/// Reads h and f back from an exact-mode document.
FischerDecomposition<Rational> decomposition_from_json(const nlohmann::json& doc);

}  // namespace quadharm
