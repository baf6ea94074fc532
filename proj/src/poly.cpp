#include "quadharm/poly.hpp"

#include <cctype>
#include <cstdio>

namespace quadharm {

namespace {

template <typename S>
void require_same_dim(const Poly<S>& a, const Poly<S>& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" +
                            std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

// e (e-1) ... (e-k+1)
mpz_class falling_factorial(unsigned e, unsigned k) {
  mpz_class r = 1;
  for (unsigned i = 0; i < k; ++i) r *= (e - i);
  return r;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t end = digits(i);
  if (end == i) throw std::invalid_argument("parse_rational: expected digits in '" + text + "'");
  if (end < text.size()) {
    if (text[end] != '/') throw std::invalid_argument("parse_rational: malformed '" + text + "'");
    std::size_t den_end = digits(end + 1);
    if (den_end == end + 1 || den_end != text.size()) {
      throw std::invalid_argument("parse_rational: malformed '" + text + "'");
    }
  }
  std::string body = text[0] == '+' ? text.substr(1) : text;
  mpq_class q;
  if (q.set_str(body, 10) != 0) throw std::invalid_argument("parse_rational: malformed '" + text + "'");
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("parse_rational: zero denominator");
  q.canonicalize();
  return q;
}

template <typename S>
Poly<S> Poly<S>::lifted(std::size_t n) const {
  if (n < n_) throw DimensionMismatch("Poly::lifted: cannot lower dimension");
  if (n == n_) return *this;
  Poly r(n);
  for (const auto& [a, c] : terms_) {
    auto e = a.exponents();
    e.resize(n, 0);
    r.terms_.emplace(MultiIndex(std::move(e)), c);
  }
  return r;
}

template <typename S>
Poly<S>& Poly<S>::operator+=(const Poly& o) {
  require_same_dim(*this, o, "add");
  for (const auto& [a, c] : o.terms_) add_term(a, c);
  return *this;
}

template <typename S>
Poly<S>& Poly<S>::operator-=(const Poly& o) {
  require_same_dim(*this, o, "sub");
  for (const auto& [a, c] : o.terms_) add_term(a, -c);
  return *this;
}

template <typename S>
Poly<S>& Poly<S>::operator*=(const S& s) {
  if (Traits::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= s;
    // double underflow can produce 0
    if (Traits::is_zero(it->second)) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

template <typename S>
Poly<S> Poly<S>::mul(const Poly& a, const Poly& b) {
  require_same_dim(a, b, "mul");
  Poly r(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

template <typename S>
Poly<S> partial(const Poly<S>& p, std::size_t j) {
  if (j >= p.dim()) throw std::out_of_range("partial: axis out of range");
  Poly<S> r(p.dim());
  for (const auto& [a, c] : p.terms()) {
    if (a[j] == 0) continue;
    MultiIndex b(a);
    b[j] -= 1;
    r.add_term(b, c * ScalarTraits<S>::from_int(a[j]));
  }
  return r;
}

template <typename S>
Poly<S> d_alpha(const Poly<S>& p, const MultiIndex& alpha) {
  if (alpha.size() != p.dim()) throw DimensionMismatch("d_alpha: multi-index length != dimension");
  Poly<S> r(p.dim());
  for (const auto& [a, c] : p.terms()) {
    auto b = a.minus(alpha);
    if (!b) continue;
    mpz_class factor = 1;
    for (std::size_t j = 0; j < a.size(); ++j) factor *= falling_factorial(a[j], alpha[j]);
    r.add_term(*b, c * ScalarTraits<S>::from_integer(factor));
  }
  return r;
}

template <typename S>
std::vector<Poly<S>> gradient(const Poly<S>& p) {
  std::vector<Poly<S>> g;
  g.reserve(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) g.push_back(partial(p, j));
  return g;
}

template <typename S>
Poly<S> laplacian(const Poly<S>& p) {
  Poly<S> r(p.dim());
  for (const auto& [a, c] : p.terms()) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] < 2) continue;
      MultiIndex b(a);
      b[j] -= 2;
      r.add_term(b, c * ScalarTraits<S>::from_int(static_cast<long>(a[j]) * (a[j] - 1)));
    }
  }
  return r;
}

template <typename S>
Poly<S> laplacian_product(const Poly<S>& q, const Poly<S>& p) {
  require_same_dim(q, p, "laplacian_product");
  Poly<S> r = p * laplacian(q) + q * laplacian(p);
  const auto gq = gradient(q);
  const auto gp = gradient(p);
  Poly<S> dot(p.dim());
  for (std::size_t j = 0; j < p.dim(); ++j) dot += gq[j] * gp[j];
  r += dot * ScalarTraits<S>::from_int(2);
  return r;
}

template <typename S>
std::vector<std::pair<int, Poly<S>>> homogeneous_components(const Poly<S>& p) {
  std::map<int, Poly<S>> parts;
  for (const auto& [a, c] : p.terms()) {
    const int d = static_cast<int>(a.order());
    auto it = parts.try_emplace(d, Poly<S>(p.dim())).first;
    it->second.add_term(a, c);
  }
  return {parts.begin(), parts.end()};
}

template <typename S>
Poly<S> taylor_reconstruct(std::size_t n, unsigned m,
                           const std::map<MultiIndex, S, GradedLex>& vals) {
  Poly<S> f(n);
  for (const auto& [a, v] : vals) {
    if (a.size() != n) throw DimensionMismatch("taylor_reconstruct: key length != dimension");
    if (a.order() != m) {
      throw std::invalid_argument("taylor_reconstruct: key " + a.to_string() + " has order " +
                                  std::to_string(a.order()) + ", expected " + std::to_string(m));
    }
    mpz_class fact = 1;
    for (std::size_t j = 0; j < n; ++j) fact *= falling_factorial(a[j], a[j]);
    if constexpr (ScalarTraits<S>::exact) {
      f.add_term(a, v / Rational(fact));
    } else {
      f.add_term(a, v / fact.get_d());
    }
  }
  return f;
}

template <typename S>
Poly<S> product_diff_linear(const Poly<S>& g, const Poly<S>& f, const MultiIndex& alpha) {
  require_same_dim(g, f, "product_diff_linear");
  if (g.degree() > 1) throw std::invalid_argument("product_diff_linear: deg g > 1");
  Poly<S> r = g * d_alpha(f, alpha);
  for (std::size_t j = 0; j < f.dim(); ++j) {
    if (alpha[j] == 0) continue;
    const Poly<S> dg = partial(g, j);
    if (dg.is_zero()) continue;
    auto lowered = alpha.minus(MultiIndex::unit(f.dim(), j));
    r += (dg * d_alpha(f, *lowered)) * ScalarTraits<S>::from_int(alpha[j]);
  }
  return r;
}

template <typename S>
Poly<S> product_diff_quadratic(const Poly<S>& q, const Poly<S>& f, const MultiIndex& alpha) {
  require_same_dim(q, f, "product_diff_quadratic");
  if (q.degree() > 2) throw std::invalid_argument("product_diff_quadratic: deg q > 2");
  for (const auto& [a, c] : q.terms()) {
    std::size_t nonzero = 0;
    for (std::size_t j = 0; j < a.size(); ++j) nonzero += a[j] != 0;
    if (nonzero > 1) throw std::invalid_argument("product_diff_quadratic: q has a cross term");
  }
  const std::size_t n = f.dim();
  Poly<S> r = q * d_alpha(f, alpha);
  for (std::size_t j = 0; j < n; ++j) {
    if (alpha[j] == 0) continue;
    const MultiIndex ej = MultiIndex::unit(n, j);
    const Poly<S> dq = partial(q, j);
    r += (dq * d_alpha(f, *alpha.minus(ej))) * ScalarTraits<S>::from_int(alpha[j]);
    if (alpha[j] >= 2) {
      const Poly<S> ddq = partial(dq, j);
      auto lowered = alpha.minus(ej + ej);
      // 1/2 alpha_j (alpha_j - 1) is an integer
      const long w = static_cast<long>(alpha[j]) * (alpha[j] - 1) / 2;
      r += (ddq * d_alpha(f, *lowered)) * ScalarTraits<S>::from_int(w);
    }
  }
  return r;
}

template <typename S>
S evaluate(const Poly<S>& p, std::span<const S> x) {
  if (x.size() != p.dim()) throw DimensionMismatch("evaluate: point dimension mismatch");
  S sum = ScalarTraits<S>::from_int(0);
  for (const auto& [a, c] : p.terms()) {
    S t = c;
    for (std::size_t j = 0; j < a.size(); ++j) {
      for (unsigned k = 0; k < a[j]; ++k) t *= x[j];
    }
    sum += t;
  }
  return sum;
}

template <typename S>
Poly<S> convert(const Poly<Rational>& p) {
  if constexpr (std::is_same_v<S, Rational>) {
    return p;
  } else {
    Poly<S> r(p.dim());
    for (const auto& [a, c] : p.terms()) r.add_term(a, ScalarTraits<S>::from_rational(c));
    return r;
  }
}

namespace {

std::string coeff_text(const Rational& c) {
  return c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
}

std::string coeff_text(double c) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", c);
  return buf;
}

bool is_one(const Rational& c) { return c == 1; }
bool is_one(double c) { return c == 1.0; }

}  // namespace

template <typename S>
std::string to_string(const Poly<S>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [a, c] : p.terms()) {
    const bool negative = c < 0;
    const S mag = negative ? S(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string vars;
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "x" + std::to_string(j + 1);
      if (a[j] > 1) vars += "^" + std::to_string(a[j]);
    }
    if (vars.empty()) {
      out += coeff_text(mag);
    } else if (is_one(mag)) {
      out += vars;
    } else {
      out += coeff_text(mag) + "*" + vars;
    }
  }
  return out;
}

#define QUADHARM_INSTANTIATE(S)                                                                \
  template class Poly<S>;                                                                      \
  template Poly<S> partial(const Poly<S>&, std::size_t);                                       \
  template Poly<S> d_alpha(const Poly<S>&, const MultiIndex&);                                 \
  template std::vector<Poly<S>> gradient(const Poly<S>&);                                      \
  template Poly<S> laplacian(const Poly<S>&);                                                  \
  template Poly<S> laplacian_product(const Poly<S>&, const Poly<S>&);                          \
  template std::vector<std::pair<int, Poly<S>>> homogeneous_components(const Poly<S>&);        \
  template Poly<S> taylor_reconstruct(std::size_t, unsigned,                                   \
                                      const std::map<MultiIndex, S, GradedLex>&);              \
  template Poly<S> product_diff_linear(const Poly<S>&, const Poly<S>&, const MultiIndex&);     \
  template Poly<S> product_diff_quadratic(const Poly<S>&, const Poly<S>&, const MultiIndex&);  \
  template S evaluate(const Poly<S>&, std::span<const S>);                                     \
  template Poly<S> convert<S>(const Poly<Rational>&);                                          \
  template std::string to_string(const Poly<S>&);

QUADHARM_INSTANTIATE(Rational)
QUADHARM_INSTANTIATE(double)

#undef QUADHARM_INSTANTIATE

}  // namespace quadharm
