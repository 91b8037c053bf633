#pragma once

// Dense integer polynomials and polynomials over them. These back the
// certified paths (Sturm sequences, subresultants) where mpq arithmetic
// would spend most of its time in gcd normalisation.

#include "singreg/multipoly.hpp"
#include "singreg/rational.hpp"
#include "singreg/unipoly.hpp"

#include <string>
#include <utility>
#include <vector>

namespace singreg::poly::detail {

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> c) : c_(std::move(c)) { trim(); }
  explicit IntPoly(const Integer& constant) {
    if (constant != 0) c_.push_back(constant);
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Integer& lc() const { return c_.back(); }
  const std::vector<Integer>& coeffs() const { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Integer& s, const IntPoly& a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

  IntPoly derivative() const;
  Integer content() const;
  /// Positive content removed; sign of the leading coefficient preserved.
  IntPoly primitive() const;
  IntPoly divexact(const Integer& s) const;

  /// Sign of p(num/den) for den > 0, exact.
  int sign_at(const Integer& num, const Integer& den) const;
  int sign_at(const Rational& r) const { return sign_at(r.get_num(), r.get_den()); }
  Integer eval(const Integer& x) const;
  double eval(double x) const;

  void trim();

 private:
  std::vector<Integer> c_;
};

IntPoly exact_quo(const IntPoly& a, const IntPoly& b);
bool is_zero(const IntPoly& p);
inline bool is_zero(const Integer& v) { return v == 0; }
inline Integer exact_quo(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <class R>
R ring_one();
template <>
inline Integer ring_one<Integer>() { return Integer(1); }
template <>
inline IntPoly ring_one<IntPoly>() { return IntPoly(Integer(1)); }
template <>
inline MultiPoly ring_one<MultiPoly>() { return MultiPoly(1); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline MultiPoly exact_quo(const MultiPoly& a, const MultiPoly& b) { return a.exact_div(b); }

/// Primitive-part gcd in Z[x]; result has positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// a / gcd(a, a'), primitive, positive leading coefficient.
IntPoly squarefree(const IntPoly& a);
/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly prem(const IntPoly& a, const IntPoly& b);

/// Scales a rational polynomial to a primitive integer one (positive factor).
IntPoly to_int(const UniPoly& p);
UniPoly to_uni(const IntPoly& p, const std::string& var);

// ---------------------------------------------------------------------------
// Polynomials over an integral domain R with exact division.

template <class R>
using PolyOver = std::vector<R>;  // lowest degree first, no trailing zeros

template <class R>
int degree(const PolyOver<R>& p) {
  return static_cast<int>(p.size()) - 1;
}

template <class R>
void trim(PolyOver<R>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class R>
PolyOver<R> scale(const PolyOver<R>& p, const R& s) {
  PolyOver<R> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = s * p[i];
  trim(out);
  return out;
}

template <class R>
PolyOver<R> quo_scalar(const PolyOver<R>& p, const R& s) {
  PolyOver<R> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = exact_quo(p[i], s);
  trim(out);
  return out;
}

template <class R>
R ring_pow(R base, unsigned e) {
  R result = ring_one<R>();
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

template <class R>
PolyOver<R> prem_over(PolyOver<R> a, const PolyOver<R>& b) {
  int db = degree(b);
  if (db < 0) throw DomainError("pseudo-remainder by zero polynomial");
  int e = degree(a) - db + 1;
  if (e <= 0) return a;
  const R& lb = b.back();
  while (degree(a) >= db) {
    int shift = degree(a) - db;
    R la = a.back();
    for (auto& coeff : a) coeff = lb * coeff;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(shift + j)] = a[static_cast<std::size_t>(shift + j)] - la * b[static_cast<std::size_t>(j)];
    a.pop_back();  // leading term cancelled
    trim(a);
    --e;
  }
  if (e > 0) a = scale(a, ring_pow(lb, static_cast<unsigned>(e)));
  return a;
}

/// Subresultant polynomial remainder sequence of f, g (deg f >= deg g) with
/// the principal subresultant coefficient of each member.
///
/// prs[0] = f, prs[1] = g, prs[i] for i >= 2 is the subresultant of degree
/// deg(prs[i-1]) - 1 (which may be defective). psc[i] is the principal
/// subresultant coefficient of degree deg(prs[i]); psc[0] = 1 by convention.
template <class R>
struct SubresultantChain {
  std::vector<PolyOver<R>> prs;
  std::vector<R> psc;

  /// Res(f, g); zero if the last member has positive degree.
  R resultant() const {
    if (prs.size() < 2 || degree(prs.back()) > 0 || degree(prs.back()) < 0) return R();
    return psc.back();
  }
  /// Principal subresultant coefficient of degree k (zero if absent).
  R psc_of_degree(int k) const {
    for (std::size_t i = 1; i < prs.size(); ++i) {
      if (degree(prs[i]) == k) return psc[i];
    }
    return R();
  }
};

template <class R>
SubresultantChain<R> subresultant_chain(PolyOver<R> f, PolyOver<R> g) {
  SubresultantChain<R> out;
  int n = degree(f), m = degree(g);
  if (n < m) throw DomainError("subresultant_chain expects deg f >= deg g");
  if (n < 0) return out;
  if (m < 0) {
    out.prs = {f};
    out.psc = {ring_one<R>()};
    return out;
  }
  out.prs = {f, g};
  int d = n - m;
  R b = (d + 1) % 2 == 0 ? ring_one<R>() : R(-ring_one<R>());
  PolyOver<R> h = scale(prem_over(f, g), b);
  R lc = g.back();
  R c = ring_pow(lc, static_cast<unsigned>(d));
  out.psc = {ring_one<R>(), c};
  c = -c;
  while (!h.empty()) {
    int k = degree(h);
    out.prs.push_back(h);
    f = std::move(g);
    g = h;
    d = m - k;
    m = k;
    b = -(lc * ring_pow(c, static_cast<unsigned>(d)));
    h = quo_scalar(prem_over(f, g), b);
    lc = g.back();
    if (d > 1) {
      R q = ring_pow(c, static_cast<unsigned>(d - 1));
      c = exact_quo(ring_pow(R(-lc), static_cast<unsigned>(d)), q);
    } else {
      c = -lc;
    }
    out.psc.push_back(-c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bivariate integer polynomials: coefficients in Z[x] of powers of y.

using BiPoly = PolyOver<IntPoly>;

/// Converts p(x, y) (variables named by the arguments) to Z[x][y] after
/// multiplying by a positive integer; returns the polynomial and the factor.
std::pair<BiPoly, Integer> to_bipoly(const MultiPoly& p, const std::string& x, const std::string& y);

/// p(x0 + dx t, y0 + dy t) as a polynomial in t (exact).
UniPoly restrict_to_line(const MultiPoly& p, const std::string& xv, const std::string& yv, const Rational& x0,
                         const Rational& dx, const Rational& y0, const Rational& dy, const std::string& t = "t");

}  // namespace singreg::poly::detail
