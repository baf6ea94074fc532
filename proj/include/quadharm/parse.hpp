#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "quadharm/poly.hpp"
#include "quadharm/quadric.hpp"

namespace quadharm {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses a polynomial in x1, x2, ... with exact rational coefficients.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := rational | var ('^' uint)? | '(' expr ')' ('^' uint)?
///
/// The dimension is the largest variable index, raised to min_dim if smaller.
Poly<Rational> parse_polynomial(std::string_view text, std::size_t min_dim = 0);

/// Accepts either a polynomial expression of degree <= 2 without cross terms,
/// or a JSON document {"a": [...], "c": [...], "d": ...} whose entries are
/// integers or "p/q" strings.
NonhyperbolicQuadratic parse_surface(std::string_view text, std::size_t min_dim = 0);

}  // namespace quadharm
