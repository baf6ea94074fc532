#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadharm/poly.hpp"

namespace quadharm {

/// q(x) = sum_j a_j x_j^2 + sum_j c_j x_j + d with every a_j >= 0 and at least
/// one a_j > 0. a_j stands for b_j^2, which keeps irrational b_j out of the
/// picture.
class NonhyperbolicQuadratic {
 public:
  /// Validating constructor; throws std::invalid_argument when n < 2, the
  /// lengths differ, some a_j < 0, or every a_j is zero.
  NonhyperbolicQuadratic(std::vector<Rational> a, std::vector<Rational> c, Rational d);

  std::size_t dim() const { return a_.size(); }
  const std::vector<Rational>& a() const { return a_; }
  const std::vector<Rational>& c() const { return c_; }
  const Rational& d() const { return d_; }

  /// ||b||^2 = sum_j a_j
  Rational norm_b_squared() const;

  /// Same surface in a higher dimension (new axes get a_j = c_j = 0).
  NonhyperbolicQuadratic lifted(std::size_t n) const;

  template <typename S>
  Poly<S> q2() const;
  template <typename S>
  Poly<S> q1() const;
  template <typename S>
  Poly<S> q0() const;
  template <typename S>
  Poly<S> to_polynomial() const {
    return q2<S>() + q1<S>() + q0<S>();
  }

  bool operator==(const NonhyperbolicQuadratic&) const = default;

 private:
  std::vector<Rational> a_;
  std::vector<Rational> c_;
  Rational d_;
};

NonhyperbolicQuadratic make_quadric(std::vector<Rational> a, std::vector<Rational> c, Rational d);

/// Reads (a, c, d) off a polynomial of degree <= 2. Throws std::invalid_argument
/// on cross terms, degree > 2, or an invalid square part.
NonhyperbolicQuadratic quadric_from_poly(const Poly<Rational>& q);

template <typename S>
struct QuadricParts {
  Poly<S> q2;
  Poly<S> q1;
  Poly<S> q0;
};

template <typename S>
QuadricParts<S> parts(const NonhyperbolicQuadratic& q) {
  return {q.q2<S>(), q.q1<S>(), q.q0<S>()};
}

/// Sufficient condition for {q = 0} to be a nondegenerate quadratic surface:
/// d < sum_{a_j > 0} c_j^2 / (4 a_j), or c_j != 0 for some j with a_j = 0.
/// Not claimed to be necessary.
bool is_nondegenerate_zero_set(const NonhyperbolicQuadratic& q);

enum class SurfaceKind { Ellipsoid, EllipticCylinderLike, ParaboloidLike, DegenerateOrEmpty };

SurfaceKind classify(const NonhyperbolicQuadratic& q);
std::string to_string(SurfaceKind kind);

}  // namespace quadharm
