#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quadharm/scalar.hpp"

namespace quadharm {

/// Exact elimination hit a zero column. For the systems this library builds
/// that contradicts the bijectivity of f -> Delta(qf) and means an assembly bug.
class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Float elimination found a pivot below kIllConditionedRatio times the
/// largest entry of its row.
class IllConditioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kIllConditionedRatio = 1e-12;

/// Row-major dense matrix.
template <typename S>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, ScalarTraits<S>::from_int(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Solves the square system A x = b by Gaussian elimination.
///
/// Exact mode picks, within each column, the nonzero pivot with the smallest
/// numerator+denominator bit length (ties by row order) and throws
/// SingularSystem when no pivot exists. Float mode uses partial pivoting by
/// magnitude and throws IllConditioned on a relatively tiny pivot.
std::vector<Rational> solve_dense(DenseMatrix<Rational> a, std::vector<Rational> b);
std::vector<double> solve_dense(DenseMatrix<double> a, std::vector<double> b);

/// Rank by exact elimination.
std::size_t rank(DenseMatrix<Rational> a);

/// A nonzero vector x with A x = 0, or nullopt when A has full column rank.
std::optional<std::vector<Rational>> kernel_vector(DenseMatrix<Rational> a);

}  // namespace quadharm
