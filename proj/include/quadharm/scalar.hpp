#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstddef>
#include <string>

namespace quadharm {

/// Exact coefficient type. mpq_class results are always in lowest terms with
/// a positive denominator.
using Rational = mpq_class;

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "exact";

  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static Rational from_rational(const Rational& x) { return x; }
  static Rational from_int(long v) { return Rational(v); }
  static Rational from_integer(const mpz_class& v) { return Rational(v); }
  static double to_double(const Rational& x) { return x.get_d(); }

  /// Combined bit length of numerator and denominator; the pivot cost
  /// measure for exact elimination.
  static std::size_t bit_size(const Rational& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
  }

  /// "num/den" always, even for integers.
  static std::string to_string(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
  }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  // Exact 0.0 test, no tolerance.
  static bool is_zero(double x) { return x == 0.0; }
  static double from_rational(const Rational& x) { return x.get_d(); }
  static double from_int(long v) { return static_cast<double>(v); }
  static double from_integer(const mpz_class& v) { return v.get_d(); }
  static double to_double(double x) { return x; }
  static double magnitude(double x) { return std::fabs(x); }
};

/// Parses "a", "-a" or "a/b" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace quadharm
