#include "singreg/roots.hpp"

#include "detail/sturm.hpp"

#include <algorithm>

namespace singreg::poly {
namespace detail {

SturmSequence::SturmSequence(IntPoly squarefree_poly) {
  if (squarefree_poly.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  seq_.push_back(std::move(squarefree_poly));
  if (seq_.front().degree() == 0) return;
  seq_.push_back(seq_.front().derivative().primitive());
  while (seq_.back().degree() > 0) {
    const IntPoly& a = seq_[seq_.size() - 2];
    const IntPoly& b = seq_.back();
    IntPoly r = prem(a, b);
    if (r.is_zero()) break;  // only happens if the input was not square-free
    // prem = lc(b)^(delta+1) * rem; the Sturm step needs -rem up to a positive factor.
    int delta = a.degree() - b.degree();
    bool flip = sgn(b.lc()) < 0 && (delta + 1) % 2 == 1;
    r = r.primitive();
    seq_.push_back(flip ? r : -r);
  }
}

int SturmSequence::variations(const Rational& at) const {
  const Integer& num = at.get_num();
  const Integer& den = at.get_den();
  int count = 0, last = 0;
  for (const auto& p : seq_) {
    int s = p.sign_at(num, den);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_pos_inf() const {
  int count = 0, last = 0;
  for (const auto& p : seq_) {
    int s = sgn(p.lc());
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmSequence::variations_neg_inf() const {
  int count = 0, last = 0;
  for (const auto& p : seq_) {
    int s = sgn(p.lc()) * (p.degree() % 2 == 0 ? 1 : -1);
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

// For square-free p, V(a) - V(b) counts the roots in (a, b].
int SturmSequence::count_closed(const Rational& lo, const Rational& hi) const {
  if (hi < lo) return 0;
  int at_lo = base().sign_at(lo) == 0 ? 1 : 0;
  if (lo == hi) return at_lo;
  return variations(lo) - variations(hi) + at_lo;
}

int SturmSequence::count_open(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  int at_hi = base().sign_at(hi) == 0 ? 1 : 0;
  return variations(lo) - variations(hi) - at_hi;
}

RootInterval SturmSequence::refine(RootInterval iv, const Rational& max_width) const {
  if (iv.exact()) return iv;
  int s_lo = base().sign_at(iv.lo);
  while (iv.hi - iv.lo > max_width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int s = base().sign_at(mid);
    if (s == 0) return {mid, mid};
    if (s == s_lo) iv.lo = mid;
    else iv.hi = mid;
  }
  // Small-denominator roots are never hit by bisection; probe the simplest
  // rational in the final interval.
  Rational probe = simplest_between(iv.lo, iv.hi);
  if (base().sign_at(probe) == 0) return {probe, probe};
  return iv;
}

void SturmSequence::isolate_half_open(const Rational& a, int va, const Rational& b, int vb,
                                      const Rational& max_width, std::vector<RootInterval>& out) const {
  int n = va - vb;  // roots in (a, b]
  if (n <= 0) return;
  if (n == 1) {
    if (base().sign_at(b) == 0) {
      out.push_back({b, b});
      return;
    }
    // Root strictly inside (a, b); a itself is not a root of this half-open piece
    // unless a is the global lower end, which the caller handles separately.
    if (base().sign_at(a) == 0) {
      // Root at a belongs to the neighbour piece; shrink away from it.
      Rational lo = a;
      Rational hi = b;
      while (true) {
        Rational mid = (lo + hi) / 2;
        if (base().sign_at(mid) == 0) {
          out.push_back({mid, mid});
          return;
        }
        int vm = variations(mid);
        if (vm - vb == 1) {
          lo = mid;
          break;
        }
        hi = mid;
      }
      out.push_back(refine({lo, b}, max_width));
      return;
    }
    out.push_back(refine({a, b}, max_width));
    return;
  }
  Rational mid = (a + b) / 2;
  int vm = variations(mid);
  isolate_half_open(a, va, mid, vm, max_width, out);
  isolate_half_open(mid, vm, b, vb, max_width, out);
}

std::vector<RootInterval> SturmSequence::isolate(const Rational& lo, const Rational& hi,
                                                 const Rational& max_width) const {
  std::vector<RootInterval> out;
  if (hi < lo) return out;
  if (base().sign_at(lo) == 0) out.push_back({lo, lo});
  if (lo == hi) return out;
  isolate_half_open(lo, variations(lo), hi, variations(hi), max_width, out);
  return out;
}

}  // namespace detail

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  return detail::to_uni(detail::squarefree(detail::to_int(p)), p.variable()).monic();
}

int count_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("count_real_roots: zero polynomial");
  if (hi < lo) throw DomainError("count_real_roots: empty interval");
  detail::SturmSequence s(detail::squarefree(detail::to_int(p)));
  return s.count_closed(lo, hi);
}

int count_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("count_real_roots: zero polynomial");
  detail::SturmSequence s(detail::squarefree(detail::to_int(p)));
  return s.count_all();
}

RootIsolation isolate_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                 const Rational& max_width) {
  if (p.is_zero()) throw DomainError("isolate_real_roots: zero polynomial");
  if (hi < lo) throw DomainError("isolate_real_roots: empty interval");
  if (sgn(max_width) <= 0) throw DomainError("isolate_real_roots: width must be positive");
  detail::IntPoly ip = detail::to_int(p);
  detail::IntPoly sf = detail::squarefree(ip);
  RootIsolation out;
  out.multiplicity_free = sf.degree() == ip.degree();
  detail::SturmSequence s(sf);
  out.intervals = s.isolate(lo, hi, max_width);
  return out;
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational lc = abs(p.leading());
  Rational best(0);
  for (int k = 0; k < p.degree(); ++k) best = std::max(best, Rational(abs(p.coefficient(k)) / lc));
  return best + 1;
}

}  // namespace singreg::poly
