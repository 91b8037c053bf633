#pragma once

#include "singreg/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace singreg::poly {

/// Dense univariate polynomial with rational coefficients, lowest degree
/// first. The leading coefficient is nonzero unless the polynomial is zero.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::string variable, std::vector<Rational> coefficients);
  UniPoly(std::string variable, std::initializer_list<Rational> coefficients);

  static UniPoly constant(std::string variable, const Rational& value);
  /// (var - root)
  static UniPoly linear_root(std::string variable, const Rational& root);

  const std::string& variable() const { return variable_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Rational& leading() const;
  Rational coefficient(int power) const;

  Rational eval(const Rational& at) const;
  double eval(double at) const;
  UniPoly derivative() const;

  UniPoly operator-() const;
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b);

  /// Quotient and remainder over Q.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
  /// Monic associate (the zero polynomial stays zero).
  UniPoly monic() const;

  std::string to_string() const;

 private:
  void trim();

  std::string variable_ = "t";
  std::vector<Rational> coeffs_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace singreg::poly
