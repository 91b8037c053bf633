#include "singreg/unipoly.hpp"

#include <sstream>
#include <utility>

namespace singreg::poly {

UniPoly::UniPoly(std::string variable, std::vector<Rational> coefficients)
    : variable_(std::move(variable)), coeffs_(std::move(coefficients)) {
  trim();
}

UniPoly::UniPoly(std::string variable, std::initializer_list<Rational> coefficients)
    : variable_(std::move(variable)), coeffs_(coefficients) {
  trim();
}

UniPoly UniPoly::constant(std::string variable, const Rational& value) {
  return UniPoly(std::move(variable), std::vector<Rational>{value});
}

UniPoly UniPoly::linear_root(std::string variable, const Rational& root) {
  return UniPoly(std::move(variable), std::vector<Rational>{Rational(-root), Rational(1)});
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational UniPoly::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

double UniPoly::eval(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.emplace_back(coeffs_[i] * static_cast<long>(i));
  return UniPoly(variable_, std::move(d));
}

UniPoly UniPoly::operator-() const {
  std::vector<Rational> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
  return UniPoly(variable_, std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPoly(a.variable_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.variable_, {});
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(a.variable_, std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coeffs_[i];
  return UniPoly(a.variable_, std::move(c));
}

bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Rational> rem = coeffs_;
  int dd = divisor.degree();
  std::vector<Rational> quo(degree() >= dd ? static_cast<std::size_t>(degree() - dd + 1) : 0);
  const Rational& lc = divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    Rational q = rem[static_cast<std::size_t>(k)] / lc;
    quo[static_cast<std::size_t>(k - dd)] = q;
    if (sgn(q) == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UniPoly(variable_, std::move(quo)), UniPoly(variable_, std::move(rem))};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading();
  return inv * *this;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << "-";
    Rational mag = abs(c);
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k > 0) {
      if (mag != 1) out << "*";
      out << variable_;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

}  // namespace singreg::poly
