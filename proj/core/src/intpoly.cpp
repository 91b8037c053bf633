#include "detail/intpoly.hpp"

#include <algorithm>

namespace singreg::poly::detail {

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::operator-() const {
  std::vector<Integer> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  const auto& big = a.c_.size() >= b.c_.size() ? a.c_ : b.c_;
  const auto& small = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
  std::vector<Integer> c = big;
  for (std::size_t i = 0; i < small.size(); ++i) c[i] += small[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Integer> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(c));
}

IntPoly operator*(const Integer& s, const IntPoly& a) {
  if (s == 0) return IntPoly();
  std::vector<Integer> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c_[i];
  return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.emplace_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g(0);
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (g == 1) return *this;
  return divexact(g);
}

IntPoly IntPoly::divexact(const Integer& s) const {
  std::vector<Integer> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) mpz_divexact(c[i].get_mpz_t(), c_[i].get_mpz_t(), s.get_mpz_t());
  return IntPoly(std::move(c));
}

int IntPoly::sign_at(const Integer& num, const Integer& den) const {
  if (c_.empty()) return 0;
  // den^deg * p(num/den) by Horner on the homogenised form.
  Integer acc = c_.back();
  Integer den_pow(1);
  for (std::size_t k = c_.size() - 1; k-- > 0;) {
    den_pow *= den;
    acc *= num;
    mpz_addmul(acc.get_mpz_t(), c_[k].get_mpz_t(), den_pow.get_mpz_t());
  }
  return sgn(acc);
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double IntPoly::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

bool is_zero(const IntPoly& p) { return p.is_zero(); }

IntPoly exact_quo(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("exact_quo by zero polynomial");
  if (a.is_zero()) return IntPoly();
  int da = a.degree(), db = b.degree();
  if (da < db) throw DomainError("exact_quo: divisor does not divide dividend");
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> quo(static_cast<std::size_t>(da - db + 1));
  const Integer& lb = b.lc();
  Integer q, r;
  for (int k = da; k >= db; --k) {
    Integer& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    if (r != 0) throw DomainError("exact_quo: divisor does not divide dividend");
    quo[static_cast<std::size_t>(k - db)] = q;
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(k - db + j)].get_mpz_t(), q.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  for (int k = 0; k < db; ++k) {
    if (rem[static_cast<std::size_t>(k)] != 0) throw DomainError("exact_quo: divisor does not divide dividend");
  }
  return IntPoly(std::move(quo));
}

IntPoly prem(const IntPoly& a, const IntPoly& b) { return IntPoly(prem_over<Integer>(a.coeffs(), b.coeffs())); }

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return IntPoly();
  if (a.is_zero()) return b.lc() < 0 ? -b.primitive() : b.primitive();
  if (b.is_zero()) return a.lc() < 0 ? -a.primitive() : a.primitive();
  Integer cont;
  Integer ca = a.content(), cb = b.content();
  mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPoly x = a.primitive(), y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero() && y.degree() > 0) {
    IntPoly r = prem(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  IntPoly g = y.is_zero() ? x : IntPoly(Integer(1));
  g = g.primitive();
  if (g.lc() < 0) g = -g;
  return cont * g;
}

IntPoly squarefree(const IntPoly& a) {
  if (a.is_zero()) throw DomainError("square-free part of the zero polynomial");
  IntPoly p = a.primitive();
  if (p.lc() < 0) p = -p;
  if (p.degree() <= 0) return IntPoly(Integer(1));
  IntPoly g = gcd(p, p.derivative()).primitive();
  if (g.degree() == 0) return p;
  IntPoly q = exact_quo(p, g);
  // p and g are primitive, so the quotient is integral (Gauss) and primitive.
  q = q.primitive();
  if (q.lc() < 0) q = -q;
  return q;
}

IntPoly to_int(const UniPoly& p) {
  Integer lcm(1);
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> c(p.coefficients().size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Rational& v = p.coefficients()[i];
    c[i] = v.get_num() * (lcm / v.get_den());
  }
  return IntPoly(std::move(c)).primitive();
}

UniPoly to_uni(const IntPoly& p, const std::string& var) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  return UniPoly(var, std::move(c));
}

std::pair<BiPoly, Integer> to_bipoly(const MultiPoly& p, const std::string& x, const std::string& y) {
  for (const auto& v : p.variables()) {
    if (v != x && v != y) throw DomainError("to_bipoly: unexpected variable '" + v + "'");
  }
  Integer lcm(1);
  for (const auto& [e, c] : p.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  const auto& vars = p.variables();
  int xi = -1, yi = -1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == x) xi = static_cast<int>(i);
    if (vars[i] == y) yi = static_cast<int>(i);
  }
  std::vector<std::vector<Integer>> grid(static_cast<std::size_t>(std::max(p.degree_in(y), 0) + 1));
  for (const auto& [e, c] : p.terms()) {
    std::size_t ey = yi >= 0 ? e[static_cast<std::size_t>(yi)] : 0;
    std::size_t ex = xi >= 0 ? e[static_cast<std::size_t>(xi)] : 0;
    auto& row = grid[ey];
    if (row.size() <= ex) row.resize(ex + 1);
    row[ex] = c.get_num() * (lcm / c.get_den());
  }
  BiPoly out;
  out.reserve(grid.size());
  for (auto& row : grid) out.emplace_back(std::move(row));
  trim(out);
  return {out, lcm};
}

UniPoly restrict_to_line(const MultiPoly& p, const std::string& xv, const std::string& yv, const Rational& x0,
                         const Rational& dx, const Rational& y0, const Rational& dy, const std::string& t) {
  for (const auto& v : p.variables()) {
    if (v != xv && v != yv) throw DomainError("restrict_to_line: unexpected variable '" + v + "'");
  }
  const auto& vars = p.variables();
  int xi = -1, yi = -1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i] == xv) xi = static_cast<int>(i);
    if (vars[i] == yv) yi = static_cast<int>(i);
  }
  int deg = std::max(p.total_degree(), 0);
  // Powers of the two linear forms.
  std::vector<UniPoly> xp{UniPoly::constant(t, 1)}, yp{UniPoly::constant(t, 1)};
  UniPoly xl(t, {x0, dx}), yl(t, {y0, dy});
  for (int k = 1; k <= deg; ++k) {
    xp.push_back(xp.back() * xl);
    yp.push_back(yp.back() * yl);
  }
  std::vector<Rational> acc(static_cast<std::size_t>(deg + 1));
  for (const auto& [e, c] : p.terms()) {
    std::size_t ex = xi >= 0 ? e[static_cast<std::size_t>(xi)] : 0;
    std::size_t ey = yi >= 0 ? e[static_cast<std::size_t>(yi)] : 0;
    UniPoly term = c * (xp[ex] * yp[ey]);
    for (int k = 0; k <= term.degree(); ++k) acc[static_cast<std::size_t>(k)] += term.coefficients()[static_cast<std::size_t>(k)];
  }
  return UniPoly(t, std::move(acc));
}

}  // namespace singreg::poly::detail
