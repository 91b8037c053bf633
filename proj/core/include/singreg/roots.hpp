#pragma once

#include "singreg/rational.hpp"
#include "singreg/unipoly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace singreg::poly {

/// A closed interval [lo, hi] holding exactly one distinct real root;
/// lo == hi marks an exact rational root.
struct RootInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

struct RootIsolation {
  std::vector<RootInterval> intervals;  // sorted, pairwise disjoint
  bool multiplicity_free = true;        // input was already square-free
};

/// p / gcd(p, p'), normalised to be monic. Throws on the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);

/// Number of distinct real roots in the closed interval [lo, hi].
int count_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi);
/// Number of distinct real roots on the whole line.
int count_real_roots(const UniPoly& p);

/// Isolates every distinct real root in [lo, hi] and bisects each isolating
/// interval down to `max_width`.
RootIsolation isolate_real_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                 const Rational& max_width = Rational(1, 1 << 30));

/// Cauchy bound: every real root lies in [-B, B].
Rational root_bound(const UniPoly& p);

}  // namespace singreg::poly
