#include "quadharm/linsolve.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace quadharm {

namespace {

template <typename S>
void swap_rows(DenseMatrix<S>& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

std::optional<std::size_t> choose_pivot(const DenseMatrix<Rational>& a, std::size_t col,
                                        std::size_t from) {
  std::optional<std::size_t> best;
  std::size_t best_bits = 0;
  for (std::size_t i = from; i < a.rows(); ++i) {
    if (sgn(a(i, col)) == 0) continue;
    const std::size_t bits = ScalarTraits<Rational>::bit_size(a(i, col));
    if (!best || bits < best_bits) {
      best = i;
      best_bits = bits;
    }
  }
  return best;
}

}  // namespace

std::vector<Rational> solve_dense(DenseMatrix<Rational> a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_dense: shape mismatch");

  for (std::size_t k = 0; k < n; ++k) {
    auto piv = choose_pivot(a, k, k);
    if (!piv) throw SingularSystem("solve_dense: singular matrix at column " + std::to_string(k));
    swap_rows(a, k, *piv);
    std::swap(b[k], b[*piv]);

    const Rational inv = 1 / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      const Rational factor = a(i, k) * inv;
      a(i, k) = 0;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (sgn(a(k, j)) != 0) a(i, j) -= factor * a(k, j);
      }
      if (sgn(b[k]) != 0) b[i] -= factor * b[k];
    }
  }

  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sgn(a(i, j)) != 0) s -= a(i, j) * x[j];
    }
    x[i] = s / a(i, i);
  }
  return x;
}

std::vector<double> solve_dense(DenseMatrix<double> a, std::vector<double> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve_dense: shape mismatch");

  // scale of each row before elimination, so cancellation shows up
  std::vector<double> row_scale(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_scale[i] = std::max(row_scale[i], std::fabs(a(i, j)));
  }

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::fabs(a(i, k)) > std::fabs(a(piv, k))) piv = i;
    }
    swap_rows(a, k, piv);
    std::swap(b[k], b[piv]);
    std::swap(row_scale[k], row_scale[piv]);

    if (row_scale[k] == 0.0 || std::fabs(a(k, k)) < kIllConditionedRatio * row_scale[k]) {
      throw IllConditioned("solve_dense: pivot " + std::to_string(a(k, k)) + " at column " +
                           std::to_string(k) + " is below tolerance");
    }

    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0.0) continue;
      const double factor = a(i, k) / a(k, k);
      a(i, k) = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= factor * a(k, j);
      b[i] -= factor * b[k];
    }
  }

  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(DenseMatrix<Rational>& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    auto piv = choose_pivot(a, col, row);
    if (!piv) continue;
    swap_rows(a, row, *piv);
    const Rational inv = 1 / a(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      const Rational factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(DenseMatrix<Rational> a) { return rref(a).size(); }

std::optional<std::vector<Rational>> kernel_vector(DenseMatrix<Rational> a) {
  const auto pivots = rref(a);
  if (pivots.size() == a.cols()) return std::nullopt;

  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;

  std::vector<Rational> x(a.cols(), Rational(0));
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a(r, free_col);
  return x;
}

}  // namespace quadharm
