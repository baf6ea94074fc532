#include "quadharm/parse.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>

namespace quadharm {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

  Poly<Rational> parse() {
    Poly<Rational> p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && is_digit(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly<Rational> expr() {
    Poly<Rational> acc(n_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    Poly<Rational> t = term();
    acc += negate ? -t : t;
    while (peek() == '+' || peek() == '-') {
      negate = s_[pos_] == '-';
      ++pos_;
      t = term();
      acc += negate ? -t : t;
    }
    return acc;
  }

  bool starts_factor(char c) const { return is_digit(c) || c == 'x' || c == '('; }

  Poly<Rational> term() {
    Poly<Rational> acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  unsigned exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '-') fail("negative exponent");
    const std::string d = digits();
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/')) fail("fractional exponent");
    if (d.size() > 6) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(d));
  }

  static Poly<Rational> power(const Poly<Rational>& base, unsigned e) {
    Poly<Rational> r = Poly<Rational>::constant(base.dim(), Rational(1));
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
  }

  Poly<Rational> factor() {
    const char c = peek();
    if (is_digit(c)) {
      const std::size_t start = pos_;
      mpz_class num(digits());
      mpz_class den = 1;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (pos_ >= s_.size() || !is_digit(s_[pos_])) fail("expected denominator");
        den = mpz_class(digits());
        if (den == 0) throw ParseError("zero denominator", start);
      }
      if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal coefficients are not exact; use a/b");
      Rational q(num, den);
      q.canonicalize();
      return Poly<Rational>::constant(n_, q);
    }
    if (c == 'x') {
      const std::size_t start = pos_;
      ++pos_;
      if (pos_ >= s_.size() || !is_digit(s_[pos_])) fail("expected variable index after 'x'");
      const std::string d = digits();
      const unsigned long idx = d.size() > 6 ? 0 : std::stoul(d);
      if (idx == 0 || idx > n_) throw ParseError("invalid variable index x" + d, start);
      MultiIndex e(n_);
      e[idx - 1] = exponent();
      return Poly<Rational>::monomial(e, Rational(1));
    }
    if (c == '(') {
      ++pos_;
      Poly<Rational> inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return power(inner, exponent());
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

// Largest variable index in the text; rejects x0 up front.
std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    while (j < text.size() && is_digit(text[j])) ++j;
    if (j == i + 1) continue;
    const std::string_view d = text.substr(i + 1, j - i - 1);
    if (d.size() > 6) throw ParseError("variable index too large", i);
    const std::size_t idx = std::stoul(std::string(d));
    if (idx == 0) throw ParseError("variable index 0 (variables are x1, x2, ...)", i);
    best = std::max(best, idx);
  }
  return best;
}

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), 0);
    }
  }
  throw ParseError("surface document: coefficients must be integers or \"p/q\" strings", 0);
}

NonhyperbolicQuadratic surface_from_document(std::string_view text, std::size_t min_dim) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("surface document: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("a") || !doc["a"].is_array()) {
    throw ParseError("surface document: missing array \"a\"", 0);
  }
  std::vector<Rational> a, c;
  for (const auto& v : doc["a"]) a.push_back(json_rational(v));
  if (doc.contains("c")) {
    for (const auto& v : doc["c"]) c.push_back(json_rational(v));
  }
  if (c.size() > a.size()) throw ParseError("surface document: \"c\" longer than \"a\"", 0);
  Rational d = doc.contains("d") ? json_rational(doc["d"]) : Rational(0);
  const std::size_t n = std::max(a.size(), min_dim);
  a.resize(n, Rational(0));
  c.resize(n, Rational(0));
  return NonhyperbolicQuadratic(std::move(a), std::move(c), std::move(d));
}

}  // namespace

Poly<Rational> parse_polynomial(std::string_view text, std::size_t min_dim) {
  const std::size_t n = std::max<std::size_t>({max_variable_index(text), min_dim, 1});
  return Parser(text, n).parse();
}

NonhyperbolicQuadratic parse_surface(std::string_view text, std::size_t min_dim) {
  auto first = std::find_if_not(text.begin(), text.end(),
                                [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (first != text.end() && *first == '{') return surface_from_document(text, min_dim);
  const Poly<Rational> q = parse_polynomial(text, std::max<std::size_t>(min_dim, 2));
  return quadric_from_poly(q);
}

}  // namespace quadharm
