#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace singreg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parses "p/q", a decimal ("-3.75", "1e-3") or an integer. Decimals are
/// converted exactly, so "0.1" becomes 1/10 rather than its binary neighbour.
Rational parse_rational(std::string_view text);

/// Exact value of a finite double.
Rational rational_from_double(double value);

/// Nearest rational with the given denominator (round half away from zero).
Rational round_to_denominator(double value, const Integer& denominator);

std::string to_string(const Rational& value);
double to_double(const Rational& value);

inline int sign(const Rational& value) { return sgn(value); }
inline int sign(const Integer& value) { return sgn(value); }

Rational pow(const Rational& base, unsigned exponent);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace singreg
