#pragma once

#include "detail/intpoly.hpp"
#include "singreg/roots.hpp"

#include <vector>

namespace singreg::poly::detail {

/// Sturm sequence of a square-free integer polynomial, built from negated
/// pseudo-remainders with positive content stripped at every step.
class SturmSequence {
 public:
  explicit SturmSequence(IntPoly squarefree_poly);

  const IntPoly& base() const { return seq_.front(); }

  int variations(const Rational& at) const;
  int variations_pos_inf() const;
  int variations_neg_inf() const;

  /// Distinct roots in the closed interval [lo, hi].
  int count_closed(const Rational& lo, const Rational& hi) const;
  /// Distinct roots in the open interval (lo, hi).
  int count_open(const Rational& lo, const Rational& hi) const;
  int count_all() const { return variations_neg_inf() - variations_pos_inf(); }

  /// Isolating intervals for the roots in [lo, hi], each narrowed to max_width.
  std::vector<RootInterval> isolate(const Rational& lo, const Rational& hi, const Rational& max_width) const;
  /// Narrows one isolating interval (lo, hi) to max_width (exact roots collapse).
  RootInterval refine(RootInterval iv, const Rational& max_width) const;

 private:
  void isolate_half_open(const Rational& a, int va, const Rational& b, int vb, const Rational& max_width,
                         std::vector<RootInterval>& out) const;

  std::vector<IntPoly> seq_;
};

}  // namespace singreg::poly::detail
