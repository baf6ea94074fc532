#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadharm/poly.hpp"
#include "quadharm/quadric.hpp"

namespace quadharm {

/// Elimination cost model (2/3) s^3 for one dense system of s = binom(m+n-1, m)
/// unknowns.
Rational predicted_full_ops(unsigned m, unsigned n);

/// Same model for 2^{n-1} classes of s / 2^{n-1} unknowns each:
/// 2^{n-1} * 2 s^3 / (3 (2^{n-1})^3). Ratio to the full count is 2^{2n-2}.
Rational predicted_partitioned_ops(unsigned m, unsigned n);

/// Monomial boundary with q1 = 0: only one class per level needs elimination,
/// another factor 2^{n-1} (total 2^{3n-3}).
Rational predicted_monomial_ops(unsigned m, unsigned n);

/// Sizes of the inhabited parity classes of order-m multi-indices in n
/// variables, in class-key order.
std::vector<std::size_t> class_census(std::size_t n, unsigned m);

enum class BoundaryKind { Monomial, Dense };

std::string to_string(BoundaryKind kind);

/// Homogeneous boundary of the given degree: a single monomial with the degree
/// spread over all variables, or every monomial of that degree with fixed
/// pseudo-random coefficients in 1..9.
Poly<Rational> make_boundary(BoundaryKind kind, std::size_t n, unsigned degree,
                             std::uint32_t seed = 1);

struct BenchRecord {
  std::size_t n = 0;
  unsigned m = 0;
  std::string kind;
  std::string mode;
  std::size_t class_count = 0;
  std::vector<std::size_t> class_sizes;
  Rational predicted_full_ops;
  Rational predicted_partitioned_ops;
  Rational predicted_ratio;
  std::optional<double> measured_full_ms;
  double measured_partitioned_ms = 0.0;
  double assembly_ms = 0.0;  // partitioned path, summed over levels
  double solve_ms = 0.0;
  std::size_t nonzero_rhs_classes = 0;  // at the top level
  std::vector<std::size_t> nonzero_rhs_per_level;
};

struct BenchOptions {
  int repetitions = 5;
  bool compare_full = true;
  bool parallel = false;
  bool exact = true;
  std::string kind = "custom";
};

/// Times the partitioned solver (and optionally the unpartitioned one) on
/// (p, q), recording medians and the class census of the top level. Throws
/// std::logic_error if the two paths disagree.
BenchRecord run_comparison(const Poly<Rational>& p, const NonhyperbolicQuadratic& q,
                           const BenchOptions& opts);

/// "n,m,kind,classes,full_ms,part_ms,ratio_pred,ratio_meas,nonzero_rhs_classes"
std::string csv_header();
std::string to_csv_row(const BenchRecord& r);
std::string to_text(const BenchRecord& r);

}  // namespace quadharm
