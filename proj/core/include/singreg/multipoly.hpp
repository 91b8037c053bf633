#pragma once

#include "singreg/rational.hpp"
#include "singreg/unipoly.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace singreg::poly {

using Exponents = std::vector<std::uint32_t>;
using Assignment = std::map<std::string, Rational>;

/// Raised by MultiPoly::eval when the assignment leaves a variable unbound.
class MissingVariableError : public DomainError {
 public:
  explicit MissingVariableError(const std::string& var)
      : DomainError("no value assigned to variable '" + var + "'"), variable(var) {}
  std::string variable;
};

/// Sparse multivariate polynomial over Q.
///
/// Variables are kept sorted by name and only variables that actually occur
/// are stored, so two equal polynomials always have identical representations
/// and can be compared coefficient-wise with ==.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& value);  // NOLINT(google-explicit-constructor)
  MultiPoly(int value);              // NOLINT(google-explicit-constructor)

  static MultiPoly variable(const std::string& name);
  static MultiPoly from_terms(std::vector<std::string> variables, Terms terms);
  static MultiPoly from_unipoly(const UniPoly& p);

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_variable(const std::string& name) const;
  std::size_t term_count() const { return terms_.size(); }

  int degree_in(const std::string& var) const;
  int total_degree() const;
  /// Coefficient of var^power, as a polynomial in the remaining variables.
  MultiPoly coefficient_of(const std::string& var, int power) const;
  /// Coefficient of the monomial given as {var: exponent}; missing vars are 0.
  Rational coefficient(const std::map<std::string, std::uint32_t>& monomial) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  MultiPoly pow(unsigned exponent) const;
  MultiPoly derivative(const std::string& var) const;

  /// Exact value; throws MissingVariableError if a variable is unbound.
  Rational eval(const Assignment& assignment) const;
  /// Floating evaluation; variables are matched positionally to variables().
  double eval_double(const std::vector<double>& values) const;

  /// Replaces var by the given polynomial.
  MultiPoly substitute(const std::string& var, const MultiPoly& replacement) const;
  /// Substitutes the bound variables and keeps the rest symbolic.
  MultiPoly partial_eval(const Assignment& assignment) const;
  MultiPoly rename(const std::string& from, const std::string& to) const;

  /// Requires at most one variable; that variable (or `fallback`) names the result.
  UniPoly to_unipoly(const std::string& fallback = "t") const;

  /// Exact quotient; throws DomainError when the division leaves a remainder.
  MultiPoly exact_div(const MultiPoly& divisor) const;

  std::string to_string() const;

 private:
  void normalize();
  Terms aligned_terms(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

}  // namespace singreg::poly
