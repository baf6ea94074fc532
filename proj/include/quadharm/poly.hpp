#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "quadharm/multi_index.hpp"
#include "quadharm/scalar.hpp"

namespace quadharm {

/// Degree of the zero polynomial ("minus infinity").
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse polynomial in n variables. No stored coefficient is zero and terms
/// iterate in graded-lex order, so equal polynomials compare and print equal.
template <typename S>
class Poly {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;
  using TermMap = std::map<MultiIndex, S, GradedLex>;

  Poly() = default;
  explicit Poly(std::size_t n) : n_(n) {}

  static Poly constant(std::size_t n, const S& c) {
    Poly p(n);
    p.add_term(MultiIndex(n), c);
    return p;
  }
  static Poly monomial(const MultiIndex& alpha, const S& c) {
    Poly p(alpha.size());
    p.add_term(alpha, c);
    return p;
  }
  /// x_j, zero-based axis.
  static Poly variable(std::size_t n, std::size_t j) {
    return monomial(MultiIndex::unit(n, j), Traits::from_int(1));
  }

  std::size_t dim() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; kZeroDegree for the zero polynomial.
  int degree() const {
    return terms_.empty() ? kZeroDegree : static_cast<int>(terms_.begin()->first.order());
  }
  bool is_homogeneous() const {
    return terms_.empty() || terms_.begin()->first.order() == terms_.rbegin()->first.order();
  }

  S coeff(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Traits::from_int(0) : it->second;
  }

  /// Adds c x^alpha, pruning a resulting zero.
  void add_term(const MultiIndex& alpha, const S& c) {
    if (alpha.size() != n_) throw DimensionMismatch("Poly::add_term: exponent length != dimension");
    if (Traits::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (Traits::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// The same polynomial viewed in a space of dimension n >= dim().
  Poly lifted(std::size_t n) const;

  Poly operator-() const {
    Poly r(*this);
    for (auto& [a, c] : r.terms_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const S& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const S& s) { return a *= s; }
  friend Poly operator*(const S& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  static Poly mul(const Poly& a, const Poly& b);

 private:
  std::size_t n_ = 0;
  TermMap terms_;
};

template <typename S>
Poly<S> add(const Poly<S>& p, const Poly<S>& r) { return p + r; }
template <typename S>
Poly<S> mul(const Poly<S>& p, const Poly<S>& r) { return Poly<S>::mul(p, r); }

/// D_j p for zero-based axis j.
template <typename S>
Poly<S> partial(const Poly<S>& p, std::size_t j);

/// D^alpha p = D_1^{alpha_1} ... D_n^{alpha_n} p.
template <typename S>
Poly<S> d_alpha(const Poly<S>& p, const MultiIndex& alpha);

template <typename S>
std::vector<Poly<S>> gradient(const Poly<S>& p);

template <typename S>
Poly<S> laplacian(const Poly<S>& p);

/// Delta(qp) via p Delta q + q Delta p + 2 grad q . grad p.
template <typename S>
Poly<S> laplacian_product(const Poly<S>& q, const Poly<S>& p);

/// Nonzero homogeneous parts of p, by increasing degree.
template <typename S>
std::vector<std::pair<int, Poly<S>>> homogeneous_components(const Poly<S>& p);

/// Homogeneous f of degree m with D^alpha f = vals[alpha] for every alpha of
/// order m, i.e. f = sum vals[alpha] x^alpha / alpha!. Missing keys are zero.
template <typename S>
Poly<S> taylor_reconstruct(std::size_t n, unsigned m,
                           const std::map<MultiIndex, S, GradedLex>& vals);

/// D^alpha(g f) = g D^alpha f + sum_j alpha_j (D_j g)(D^{alpha-e_j} f), deg g <= 1.
template <typename S>
Poly<S> product_diff_linear(const Poly<S>& g, const Poly<S>& f, const MultiIndex& alpha);

/// D^alpha(q f) = q D^alpha f + sum_j alpha_j (D_j q)(D^{alpha-e_j} f)
///              + 1/2 sum_j alpha_j (alpha_j - 1)(D_j^2 q)(D^{alpha-2e_j} f),
/// for q of degree <= 2 with no cross terms.
template <typename S>
Poly<S> product_diff_quadratic(const Poly<S>& q, const Poly<S>& f, const MultiIndex& alpha);

template <typename S>
S evaluate(const Poly<S>& p, std::span<const S> x);

/// Coefficient-wise conversion of an exact polynomial.
template <typename S>
Poly<S> convert(const Poly<Rational>& p);

/// Human/parser-readable form, e.g. "3/4*x1^2*x2 - x3 + 1/5". Variables are
/// 1-based. Zero prints as "0".
template <typename S>
std::string to_string(const Poly<S>& p);

extern template class Poly<Rational>;
extern template class Poly<double>;

}  // namespace quadharm
