#include "quadharm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace quadharm {

template <typename S>
VerificationReport<S> verify_solution(const Poly<S>& p, const NonhyperbolicQuadratic& q,
                                      const FischerDecomposition<S>& dec) {
  if (p.dim() != q.dim() || dec.h.dim() != p.dim() || dec.f.dim() != p.dim()) {
    throw DimensionMismatch("verify_solution: dimension mismatch");
  }
  VerificationReport<S> report;
  const Poly<S> lap = laplacian(dec.h);
  report.residual = p - dec.h - q.to_polynomial<S>() * dec.f;
  report.surface_nondegenerate = is_nondegenerate_zero_set(q);
  if (!report.surface_nondegenerate) {
    report.notes.push_back("zero set of q may be empty or degenerate (sufficient condition fails)");
  }

  if constexpr (ScalarTraits<S>::exact) {
    report.harmonic_ok = lap.is_zero();
    report.residual_ok = report.residual.is_zero();
  } else {
    auto max_abs = [](const Poly<S>& r) {
      double m = 0.0;
      for (const auto& [e, c] : r.terms()) m = std::max(m, std::fabs(c));
      return m;
    };
    const double lap_max = max_abs(lap);
    const double res_max = max_abs(report.residual);
    report.harmonic_ok = lap_max <= kFloatResidualTolerance;
    report.residual_ok = res_max <= kFloatResidualTolerance;
    char buf[160];
    std::snprintf(buf, sizeof buf, "max |laplacian(h)| coefficient %.3e, max |residual| coefficient %.3e (tol %.0e)",
                  lap_max, res_max, kFloatResidualTolerance);
    report.notes.emplace_back(buf);
  }
  return report;
}

template <typename S>
Poly<S> oracle_full_system(const Poly<S>& pH, const Poly<S>& q2, unsigned m) {
  using T = ScalarTraits<S>;
  const std::size_t n = pH.dim();
  if (q2.dim() != n) throw DimensionMismatch("oracle_full_system: dimension mismatch");
  const auto a = square_coefficients(q2);
  const Poly<S> lap = laplacian(pH);
  if (lap.is_zero()) return Poly<S>(n);

  const auto indices = multi_indices_of_order(n, m);
  const std::size_t size = indices.size();
  std::map<MultiIndex, std::size_t, GradedLex> position;
  for (std::size_t i = 0; i < size; ++i) position.emplace(indices[i], i);

  S norm_b = T::from_int(0);
  for (const auto& v : a) norm_b += v;

  DenseMatrix<S> mat(size, size);
  std::vector<S> rhs(size, T::from_int(0));
  for (std::size_t row = 0; row < size; ++row) {
    const MultiIndex& alpha = indices[row];
    S diag = 2 * norm_b;
    for (std::size_t j = 0; j < n; ++j) diag += 4 * T::from_int(alpha[j]) * a[j];
    mat(row, row) += diag;
    for (std::size_t j = 0; j < n; ++j) {
      if (alpha[j] < 2) continue;
      const S w = T::from_int(static_cast<long>(alpha[j]) * (alpha[j] - 1)) * a[j];
      for (std::size_t k = 0; k < n; ++k) {
        MultiIndex beta(alpha);
        beta[j] -= 2;
        beta[k] += 2;
        mat(row, position.at(beta)) += w;
      }
    }
    // Constant D^alpha(Delta pH), by differentiation.
    rhs[row] = d_alpha(lap, alpha).coeff(MultiIndex(n));
  }

  const auto x = solve_dense(std::move(mat), std::move(rhs));
  std::map<MultiIndex, S, GradedLex> vals;
  for (std::size_t i = 0; i < size; ++i) vals.emplace(indices[i], x[i]);
  return taylor_reconstruct(n, m, vals);
}

template <typename S>
FischerDecomposition<S> solve_dirichlet_full(const Poly<S>& p, const NonhyperbolicQuadratic& q) {
  HomogeneousSolver<S> full = [](const Poly<S>& pH, const Poly<S>& q2) {
    if (pH.degree() < 2) return Poly<S>(pH.dim());
    return oracle_full_system(pH, q2, static_cast<unsigned>(pH.degree() - 2));
  };
  return solve_dirichlet(p, q, full);
}

DenseMatrix<Rational> l_operator_matrix(const Poly<Rational>& q, unsigned m) {
  const std::size_t n = q.dim();
  const auto basis = multi_indices_up_to(n, m);
  std::map<MultiIndex, std::size_t, GradedLex> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position.emplace(basis[i], i);

  DenseMatrix<Rational> mat(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Poly<Rational> image = laplacian(q * Poly<Rational>::monomial(basis[col], Rational(1)));
    for (const auto& [e, c] : image.terms()) {
      auto it = position.find(e);
      if (it == position.end()) {
        throw std::invalid_argument("l_operator_matrix: q has degree > 2");
      }
      mat(it->second, col) = c;
    }
  }
  return mat;
}

FischerDecomposition<Rational> oracle_L_matrix(const Poly<Rational>& p,
                                               const NonhyperbolicQuadratic& q) {
  const std::size_t n = q.dim();
  if (p.dim() != n) throw DimensionMismatch("oracle_L_matrix: dimension mismatch");
  if (p.degree() < 2) return {p, Poly<Rational>(n)};

  const unsigned m = static_cast<unsigned>(p.degree() - 2);
  const Poly<Rational> qfull = q.to_polynomial<Rational>();
  const auto basis = multi_indices_up_to(n, m);
  const Poly<Rational> lap = laplacian(p);
  std::vector<Rational> rhs(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) rhs[i] = lap.coeff(basis[i]);

  const auto x = solve_dense(l_operator_matrix(qfull, m), std::move(rhs));
  Poly<Rational> f(n);
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], x[i]);
  return {p - qfull * f, f};
}

bool check_L_bijective(const Poly<Rational>& q, unsigned m) {
  const auto mat = l_operator_matrix(q, m);
  return rank(mat) == mat.cols();
}

bool check_L_bijective(const NonhyperbolicQuadratic& q, unsigned m) {
  return check_L_bijective(q.to_polynomial<Rational>(), m);
}

std::optional<Poly<Rational>> l_kernel_witness(const Poly<Rational>& q, unsigned m) {
  auto v = kernel_vector(l_operator_matrix(q, m));
  if (!v) return std::nullopt;
  const auto basis = multi_indices_up_to(q.dim(), m);
  Poly<Rational> f(q.dim());
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], (*v)[i]);
  return f;
}

template VerificationReport<Rational> verify_solution(const Poly<Rational>&,
                                                      const NonhyperbolicQuadratic&,
                                                      const FischerDecomposition<Rational>&);
template VerificationReport<double> verify_solution(const Poly<double>&,
                                                    const NonhyperbolicQuadratic&,
                                                    const FischerDecomposition<double>&);
template Poly<Rational> oracle_full_system(const Poly<Rational>&, const Poly<Rational>&, unsigned);
template Poly<double> oracle_full_system(const Poly<double>&, const Poly<double>&, unsigned);
template FischerDecomposition<Rational> solve_dirichlet_full(const Poly<Rational>&,
                                                             const NonhyperbolicQuadratic&);
template FischerDecomposition<double> solve_dirichlet_full(const Poly<double>&,
                                                           const NonhyperbolicQuadratic&);

}  // namespace quadharm
