#include "quadharm/quadric.hpp"

#include <stdexcept>

namespace quadharm {

NonhyperbolicQuadratic::NonhyperbolicQuadratic(std::vector<Rational> a, std::vector<Rational> c,
                                               Rational d)
    : a_(std::move(a)), c_(std::move(c)), d_(std::move(d)) {
  if (a_.size() < 2) throw std::invalid_argument("quadric: dimension must be >= 2");
  if (c_.size() != a_.size()) throw std::invalid_argument("quadric: a and c lengths differ");
  bool any_positive = false;
  for (std::size_t j = 0; j < a_.size(); ++j) {
    if (sgn(a_[j]) < 0) {
      throw std::invalid_argument("quadric: coefficient of x" + std::to_string(j + 1) +
                                  "^2 is negative (hyperbolic)");
    }
    any_positive = any_positive || sgn(a_[j]) > 0;
  }
  if (!any_positive) throw std::invalid_argument("quadric: all square coefficients are zero");
}

Rational NonhyperbolicQuadratic::norm_b_squared() const {
  Rational s = 0;
  for (const auto& v : a_) s += v;
  return s;
}

NonhyperbolicQuadratic NonhyperbolicQuadratic::lifted(std::size_t n) const {
  if (n < dim()) throw DimensionMismatch("quadric: cannot lower dimension");
  auto a = a_;
  auto c = c_;
  a.resize(n, Rational(0));
  c.resize(n, Rational(0));
  return NonhyperbolicQuadratic(std::move(a), std::move(c), d_);
}

template <typename S>
Poly<S> NonhyperbolicQuadratic::q2() const {
  Poly<S> p(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    MultiIndex e(dim());
    e[j] = 2;
    p.add_term(e, ScalarTraits<S>::from_rational(a_[j]));
  }
  return p;
}

template <typename S>
Poly<S> NonhyperbolicQuadratic::q1() const {
  Poly<S> p(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    p.add_term(MultiIndex::unit(dim(), j), ScalarTraits<S>::from_rational(c_[j]));
  }
  return p;
}

template <typename S>
Poly<S> NonhyperbolicQuadratic::q0() const {
  return Poly<S>::constant(dim(), ScalarTraits<S>::from_rational(d_));
}

template Poly<Rational> NonhyperbolicQuadratic::q2<Rational>() const;
template Poly<Rational> NonhyperbolicQuadratic::q1<Rational>() const;
template Poly<Rational> NonhyperbolicQuadratic::q0<Rational>() const;
template Poly<double> NonhyperbolicQuadratic::q2<double>() const;
template Poly<double> NonhyperbolicQuadratic::q1<double>() const;
template Poly<double> NonhyperbolicQuadratic::q0<double>() const;

NonhyperbolicQuadratic make_quadric(std::vector<Rational> a, std::vector<Rational> c, Rational d) {
  return NonhyperbolicQuadratic(std::move(a), std::move(c), std::move(d));
}

NonhyperbolicQuadratic quadric_from_poly(const Poly<Rational>& q) {
  const std::size_t n = q.dim();
  std::vector<Rational> a(n, Rational(0));
  std::vector<Rational> c(n, Rational(0));
  Rational d = 0;
  for (const auto& [e, coeff] : q.terms()) {
    if (e.order() > 2) throw std::invalid_argument("quadric: degree exceeds 2");
    std::size_t axis = n;
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (e[j] != 0) {
        ++nonzero;
        axis = j;
      }
    }
    if (nonzero > 1) throw std::invalid_argument("quadric: cross term " + e.to_string());
    if (nonzero == 0) {
      d = coeff;
    } else if (e[axis] == 2) {
      a[axis] = coeff;
    } else {
      c[axis] = coeff;
    }
  }
  return NonhyperbolicQuadratic(std::move(a), std::move(c), std::move(d));
}

bool is_nondegenerate_zero_set(const NonhyperbolicQuadratic& q) {
  Rational bound = 0;
  for (std::size_t j = 0; j < q.dim(); ++j) {
    if (sgn(q.a()[j]) == 0) {
      if (sgn(q.c()[j]) != 0) return true;
    } else {
      bound += q.c()[j] * q.c()[j] / (4 * q.a()[j]);
    }
  }
  return q.d() < bound;
}

SurfaceKind classify(const NonhyperbolicQuadratic& q) {
  bool has_flat_axis = false;
  for (std::size_t j = 0; j < q.dim(); ++j) {
    if (sgn(q.a()[j]) == 0) {
      has_flat_axis = true;
      if (sgn(q.c()[j]) != 0) return SurfaceKind::ParaboloidLike;
    }
  }
  if (!is_nondegenerate_zero_set(q)) return SurfaceKind::DegenerateOrEmpty;
  return has_flat_axis ? SurfaceKind::EllipticCylinderLike : SurfaceKind::Ellipsoid;
}

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::Ellipsoid:
      return "ellipsoid";
    case SurfaceKind::EllipticCylinderLike:
      return "elliptic-cylinder-like";
    case SurfaceKind::ParaboloidLike:
      return "paraboloid-like";
    case SurfaceKind::DegenerateOrEmpty:
      return "degenerate-or-empty";
  }
  return "unknown";
}

}  // namespace quadharm
