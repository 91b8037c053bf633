#include "singreg/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace singreg {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw DomainError("malformed integer '" + std::string(s) + "'");
  Integer value(std::string(s), 10);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw DomainError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  bool negative = false;
  std::string_view body = text;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    Integer ex = parse_integer(body.substr(e + 1));
    if (!ex.fits_slong_p() || abs(ex) > 4096) throw DomainError("exponent out of range in '" + std::string(text) + "'");
    exponent = ex.get_si();
    body = body.substr(0, e);
  }
  std::string digits;
  long fraction_digits = 0;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw DomainError("malformed decimal '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      throw DomainError("malformed decimal '" + std::string(text) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    fraction_digits = static_cast<long>(frac.size());
  } else {
    if (!all_digits(body)) throw DomainError("malformed number '" + std::string(text) + "'");
    digits = std::string(body);
  }
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long scale = exponent - fraction_digits;
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational r = scale < 0 ? Rational(mantissa, ten_pow) : Rational(mantissa * ten_pow);
  r.canonicalize();
  return r;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw DomainError("non-finite value cannot be made rational");
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

Rational round_to_denominator(double value, const Integer& denominator) {
  Rational scaled = rational_from_double(value) * denominator;
  Integer q;
  // floor(x + 1/2) for x >= 0, mirrored for negatives.
  Rational half(1, 2);
  Rational shifted = sgn(scaled) >= 0 ? Rational(scaled + half) : Rational(-scaled + half);
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  if (sgn(scaled) < 0) q = -q;
  Rational r(q, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) { return value.get_d(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return r;  // already canonical: gcd is preserved under powers
}


namespace {

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// Continued-fraction search for 0 < lo <= hi.
Rational simplest_positive(const Rational& lo, const Rational& hi) {
  Integer fl = floor_of(lo);
  if (fl == lo) return Rational(fl);
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  Rational inner = simplest_positive(1 / Rational(hi - fl), 1 / Rational(lo - fl));
  Rational r = Rational(fl) + 1 / inner;
  r.canonicalize();
  return r;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (hi < lo) throw DomainError("simplest_between: empty interval");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return Rational(0);
  if (sgn(hi) < 0) return -simplest_positive(-hi, -lo);
  return simplest_positive(lo, hi);
}

}  // namespace singreg
