#include "quadharm/fischer.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

namespace quadharm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

mpz_class factorial(const MultiIndex& a) {
  mpz_class r = 1;
  for (std::size_t j = 0; j < a.size(); ++j) {
    mpz_class t;
    mpz_fac_ui(t.get_mpz_t(), a[j]);
    r *= t;
  }
  return r;
}

template <typename S>
Poly<S> solve_level(const Poly<S>& s, std::span<const S> a, unsigned m, const SolveOptions& opts) {
  const std::size_t n = s.dim();
  LevelTrace level;
  level.degree = static_cast<int>(m) + 2;
  level.m = m;

  auto t0 = Clock::now();
  const Poly<S> rhs_source = laplacian(s);
  auto systems = assemble_class_systems(rhs_source, a, m);
  level.assembly_ms = ms_since(t0);

  t0 = Clock::now();
  std::vector<std::map<MultiIndex, S, GradedLex>> solutions(systems.size());
  if (opts.parallel) {
    std::vector<std::future<std::map<MultiIndex, S, GradedLex>>> pending(systems.size());
    for (std::size_t i = 0; i < systems.size(); ++i) {
      if (!systems[i].rhs_is_zero()) {
        pending[i] = std::async(std::launch::async, [&sys = systems[i]] { return solve_class(sys); });
      }
    }
    for (std::size_t i = 0; i < systems.size(); ++i) {
      solutions[i] = pending[i].valid() ? pending[i].get() : solve_class(systems[i]);
    }
  } else {
    for (std::size_t i = 0; i < systems.size(); ++i) solutions[i] = solve_class(systems[i]);
  }
  level.solve_ms = ms_since(t0);

  std::map<MultiIndex, S, GradedLex> values;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    level.class_sizes.push_back(systems[i].members.size());
    if (!systems[i].rhs_is_zero()) {
      ++level.nonzero_rhs_classes;
      ++level.eliminated_classes;
    }
    values.merge(solutions[i]);
  }
  if (opts.trace) opts.trace->levels.push_back(std::move(level));
  return taylor_reconstruct(n, m, values);
}

// Runs the cascade; level_solve(s, m) returns f_m for the homogeneous s of
// degree m + 2.
template <typename S, typename LevelSolve>
FischerDecomposition<S> run_cascade(const Poly<S>& pH, const NonhyperbolicQuadratic& q,
                                    LevelSolve&& level_solve) {
  const std::size_t n = q.dim();
  if (pH.dim() != n) throw DimensionMismatch("cascade: boundary and surface dimensions differ");
  if (!pH.is_homogeneous()) throw std::invalid_argument("cascade: boundary part is not homogeneous");

  const Poly<S> q2 = q.q2<S>();
  const Poly<S> q1 = q.q1<S>();
  const Poly<S> q0 = q.q0<S>();

  FischerDecomposition<S> out{Poly<S>(n), Poly<S>(n)};
  if (pH.is_zero()) return out;

  const int top = pH.degree();
  Poly<S> s = pH;
  Poly<S> f_above(n);  // f_{k-1} from the previous level
  for (int k = top; k >= 2; --k) {
    Poly<S> f_k2(n);
    if (!s.is_zero()) f_k2 = level_solve(s, static_cast<unsigned>(k - 2));
    out.h += s - q2 * f_k2;
    out.f += f_k2;
    s = -(q1 * f_k2) - q0 * f_above;
    f_above = std::move(f_k2);
  }
  // s is now the degree-min(top,1) remainder; the last two equations read
  // h_1 = -q1 f_0 - q0 f_1 and h_0 = -q0 f_0.
  if (top >= 1) {
    out.h += s;
    s = -(q0 * f_above);
  }
  out.h += s;
  return out;
}

}  // namespace

template <typename S>
bool ClassSystem<S>::rhs_is_zero() const {
  return std::all_of(rhs.begin(), rhs.end(), [](const S& v) { return ScalarTraits<S>::is_zero(v); });
}

template <typename S>
std::vector<S> square_coefficients(const Poly<S>& q2) {
  std::vector<S> a(q2.dim(), ScalarTraits<S>::from_int(0));
  bool any_positive = false;
  for (const auto& [e, c] : q2.terms()) {
    std::size_t axis = q2.dim();
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 2 && e.order() == 2) axis = j;
    }
    if (axis == q2.dim()) {
      throw std::invalid_argument("square_coefficients: term " + e.to_string() +
                                  " is not a pure square");
    }
    if (c < 0) throw std::invalid_argument("square_coefficients: negative square coefficient");
    any_positive = true;
    a[axis] = c;
  }
  if (!any_positive) throw std::invalid_argument("square_coefficients: all square coefficients are zero");
  return a;
}

template <typename S>
std::vector<ClassSystem<S>> assemble_class_systems(const Poly<S>& rhs_source, std::span<const S> a,
                                                   unsigned m) {
  using T = ScalarTraits<S>;
  const std::size_t n = a.size();
  if (rhs_source.dim() != n) throw DimensionMismatch("assemble_class_systems: dimension mismatch");

  std::map<MultiIndex, std::vector<MultiIndex>, GradedLex> groups;
  for (auto& alpha : multi_indices_of_order(n, m)) groups[alpha.parity()].push_back(std::move(alpha));

  S norm_b = T::from_int(0);
  for (const auto& v : a) norm_b += v;

  std::vector<ClassSystem<S>> systems;
  systems.reserve(groups.size());
  for (auto& [bits, members] : groups) {
    const std::size_t size = members.size();
    std::map<MultiIndex, std::size_t, GradedLex> position;
    for (std::size_t i = 0; i < size; ++i) position.emplace(members[i], i);

    ClassSystem<S> sys{ParityClass{bits}, std::move(members), DenseMatrix<S>(size, size),
                       std::vector<S>(size, T::from_int(0))};
    for (std::size_t row = 0; row < size; ++row) {
      const MultiIndex& alpha = sys.members[row];

      S diag = 2 * norm_b;
      for (std::size_t j = 0; j < n; ++j) diag += 4 * T::from_int(alpha[j]) * a[j];
      sys.matrix(row, row) += diag;

      for (std::size_t j = 0; j < n; ++j) {
        if (alpha[j] < 2 || T::is_zero(a[j])) continue;
        const S w = T::from_int(static_cast<long>(alpha[j]) * (alpha[j] - 1)) * a[j];
        for (std::size_t k = 0; k < n; ++k) {
          MultiIndex beta(alpha);
          beta[j] -= 2;
          beta[k] += 2;
          sys.matrix(row, position.at(beta)) += w;
        }
      }

      // D^alpha of a degree-m polynomial is alpha! times its x^alpha coefficient.
      const S c = rhs_source.coeff(alpha);
      if (!T::is_zero(c)) sys.rhs[row] = c * T::from_integer(factorial(alpha));
    }
    systems.push_back(std::move(sys));
  }
  return systems;
}

template <typename S>
std::map<MultiIndex, S, GradedLex> solve_class(const ClassSystem<S>& sys) {
  std::map<MultiIndex, S, GradedLex> out;
  if (sys.rhs_is_zero()) {
    for (const auto& alpha : sys.members) out.emplace(alpha, ScalarTraits<S>::from_int(0));
    return out;
  }
  auto x = solve_dense(sys.matrix, sys.rhs);
  for (std::size_t i = 0; i < sys.members.size(); ++i) out.emplace(sys.members[i], std::move(x[i]));
  return out;
}

template <typename S>
Poly<S> solve_homogeneous(const Poly<S>& pH, const Poly<S>& q2, const SolveOptions& opts) {
  if (pH.dim() != q2.dim()) throw DimensionMismatch("solve_homogeneous: dimension mismatch");
  if (!pH.is_homogeneous()) throw std::invalid_argument("solve_homogeneous: pH is not homogeneous");
  const auto a = square_coefficients(q2);
  if (pH.degree() < 2) return Poly<S>(pH.dim());
  return solve_level(pH, std::span<const S>(a), static_cast<unsigned>(pH.degree() - 2), opts);
}

template <typename S>
FischerDecomposition<S> cascade(const Poly<S>& pH, const NonhyperbolicQuadratic& q,
                                const SolveOptions& opts) {
  std::vector<S> a;
  for (const auto& v : q.a()) a.push_back(ScalarTraits<S>::from_rational(v));
  return run_cascade(pH, q, [&](const Poly<S>& s, unsigned m) {
    return solve_level(s, std::span<const S>(a), m, opts);
  });
}

template <typename S>
FischerDecomposition<S> cascade(const Poly<S>& pH, const NonhyperbolicQuadratic& q,
                                const HomogeneousSolver<S>& solver) {
  const Poly<S> q2 = q.q2<S>();
  return run_cascade(pH, q, [&](const Poly<S>& s, unsigned) { return solver(s, q2); });
}

namespace {

template <typename S, typename Cascade>
FischerDecomposition<S> solve_by_components(const Poly<S>& p, const NonhyperbolicQuadratic& q,
                                            Cascade&& run) {
  if (p.dim() != q.dim()) {
    throw DimensionMismatch("solve_dirichlet: boundary has dimension " + std::to_string(p.dim()) +
                            ", surface has " + std::to_string(q.dim()));
  }
  FischerDecomposition<S> out{Poly<S>(p.dim()), Poly<S>(p.dim())};
  // Highest degree first so trace levels come out in cascade order.
  auto components = homogeneous_components(p);
  for (auto it = components.rbegin(); it != components.rend(); ++it) {
    auto part = run(it->second);
    out.h += part.h;
    out.f += part.f;
  }
  return out;
}

}  // namespace

template <typename S>
FischerDecomposition<S> solve_dirichlet(const Poly<S>& p, const NonhyperbolicQuadratic& q,
                                        const SolveOptions& opts) {
  return solve_by_components(p, q, [&](const Poly<S>& pH) { return cascade(pH, q, opts); });
}

template <typename S>
FischerDecomposition<S> solve_dirichlet(const Poly<S>& p, const NonhyperbolicQuadratic& q,
                                        const HomogeneousSolver<S>& solver) {
  return solve_by_components(p, q, [&](const Poly<S>& pH) { return cascade(pH, q, solver); });
}

#define QUADHARM_INSTANTIATE(S)                                                                   \
  template struct ClassSystem<S>;                                                                 \
  template std::vector<S> square_coefficients(const Poly<S>&);                                    \
  template std::vector<ClassSystem<S>> assemble_class_systems(const Poly<S>&, std::span<const S>, \
                                                              unsigned);                          \
  template std::map<MultiIndex, S, GradedLex> solve_class(const ClassSystem<S>&);                 \
  template Poly<S> solve_homogeneous(const Poly<S>&, const Poly<S>&, const SolveOptions&);        \
  template FischerDecomposition<S> cascade(const Poly<S>&, const NonhyperbolicQuadratic&,         \
                                           const SolveOptions&);                                  \
  template FischerDecomposition<S> cascade(const Poly<S>&, const NonhyperbolicQuadratic&,         \
                                           const HomogeneousSolver<S>&);                          \
  template FischerDecomposition<S> solve_dirichlet(const Poly<S>&, const NonhyperbolicQuadratic&, \
                                                   const SolveOptions&);                          \
  template FischerDecomposition<S> solve_dirichlet(const Poly<S>&, const NonhyperbolicQuadratic&, \
                                                   const HomogeneousSolver<S>&);

QUADHARM_INSTANTIATE(Rational)
QUADHARM_INSTANTIATE(double)

#undef QUADHARM_INSTANTIATE

}  // namespace quadharm
