#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace quadharm {

/// Exponent vector alpha = (alpha_1, ..., alpha_n). Keys monomials x^alpha and
/// differentiation orders D^alpha.
class MultiIndex {
 public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}
  MultiIndex(std::initializer_list<value_type> e) : e_(e) {}
  explicit MultiIndex(std::vector<value_type> e) : e_(std::move(e)) {}

  /// The unit multi-index e_j (zero-based axis).
  static MultiIndex unit(std::size_t n, std::size_t j);

  std::size_t size() const { return e_.size(); }
  value_type operator[](std::size_t j) const { return e_[j]; }
  value_type& operator[](std::size_t j) { return e_[j]; }
  const std::vector<value_type>& exponents() const { return e_; }

  /// |alpha|
  std::uint64_t order() const;

  /// alpha! = alpha_1! ... alpha_n!, exact.
  std::string factorial_string() const;

  MultiIndex operator+(const MultiIndex& o) const;
  /// alpha - beta, or nullopt if some entry would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& o) const;

  /// Coordinate-wise parity bits alpha_j mod 2.
  MultiIndex parity() const;

  bool operator==(const MultiIndex&) const = default;

  std::string to_string() const;

 private:
  std::vector<value_type> e_;
};

/// Graded-lex order, highest total degree first; within a degree, larger
/// leading exponents first. This is the canonical term order everywhere.
struct GradedLex {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All multi-indices of length n and order m, in graded-lex order.
std::vector<MultiIndex> multi_indices_of_order(std::size_t n, std::uint32_t m);

/// All multi-indices of length n with order <= m (the monomial basis of P_m),
/// in graded-lex order.
std::vector<MultiIndex> multi_indices_up_to(std::size_t n, std::uint32_t m);

/// binom(m + n - 1, m), the number of multi-indices of order m in n variables.
std::uint64_t count_of_order(std::size_t n, std::uint32_t m);

}  // namespace quadharm
