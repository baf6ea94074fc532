#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "quadharm/linsolve.hpp"
#include "quadharm/poly.hpp"
#include "quadharm/quadric.hpp"

namespace quadharm {

/// p = h + q f with Delta h = 0, deg h <= deg p, deg f <= deg p - 2.
template <typename S>
struct FischerDecomposition {
  Poly<S> h;
  Poly<S> f;
};

/// Coordinate-wise parities shared by every member of a class.
struct ParityClass {
  MultiIndex bits;
  bool operator==(const ParityClass&) const = default;
};

/// One parity class's block of the linear system in the unknowns D^alpha f.
/// Row and column i both belong to members[i].
template <typename S>
struct ClassSystem {
  ParityClass key;
  std::vector<MultiIndex> members;
  DenseMatrix<S> matrix;
  std::vector<S> rhs;

  bool rhs_is_zero() const;
};

/// Per cascade level bookkeeping, filled in when SolveOptions::trace is set.
struct LevelTrace {
  int degree = 0;  // degree of the carried polynomial at this level
  unsigned m = 0;  // order of the unknowns D^alpha f
  std::vector<std::size_t> class_sizes;
  std::size_t nonzero_rhs_classes = 0;
  std::size_t eliminated_classes = 0;
  double assembly_ms = 0.0;
  double solve_ms = 0.0;
};

struct SolveTrace {
  std::vector<LevelTrace> levels;
};

struct SolveOptions {
  /// Solve the independent parity classes of one level concurrently.
  bool parallel = false;
  SolveTrace* trace = nullptr;
};

/// Maps a homogeneous pH of degree m+2 and q2 to the unique homogeneous f of
/// degree m with Delta(q2 f) = Delta pH.
template <typename S>
using HomogeneousSolver = std::function<Poly<S>(const Poly<S>& pH, const Poly<S>& q2)>;

/// The a_j of q2 = sum a_j x_j^2. Throws std::invalid_argument if q2 has any
/// other kind of term or no positive coefficient.
template <typename S>
std::vector<S> square_coefficients(const Poly<S>& q2);

/// One system per inhabited parity class of order-m multi-indices, ordered by
/// class key (graded-lex). Row alpha reads
///   D^alpha(rhs_source) = (2||b||^2 + 4 sum_j alpha_j a_j) D^alpha f
///                         + sum_j alpha_j (alpha_j - 1) a_j sum_k D^{alpha + 2e_k - 2e_j} f
/// with the inner sum taken over every k, including k = j.
template <typename S>
std::vector<ClassSystem<S>> assemble_class_systems(const Poly<S>& rhs_source, std::span<const S> a,
                                                   unsigned m);

/// Solution of one class system keyed by member. An all-zero right-hand side
/// returns zeros without elimination.
template <typename S>
std::map<MultiIndex, S, GradedLex> solve_class(const ClassSystem<S>& sys);

template <typename S>
Poly<S> solve_homogeneous(const Poly<S>& pH, const Poly<S>& q2, const SolveOptions& opts = {});

/// Degree-descending cascade for a homogeneous pH on the full quadric.
template <typename S>
FischerDecomposition<S> cascade(const Poly<S>& pH, const NonhyperbolicQuadratic& q,
                                const SolveOptions& opts = {});
template <typename S>
FischerDecomposition<S> cascade(const Poly<S>& pH, const NonhyperbolicQuadratic& q,
                                const HomogeneousSolver<S>& solver);

/// The harmonic h equal to p on {q = 0}, with its cofactor f.
template <typename S>
FischerDecomposition<S> solve_dirichlet(const Poly<S>& p, const NonhyperbolicQuadratic& q,
                                        const SolveOptions& opts = {});
template <typename S>
FischerDecomposition<S> solve_dirichlet(const Poly<S>& p, const NonhyperbolicQuadratic& q,
                                        const HomogeneousSolver<S>& solver);

}  // namespace quadharm
