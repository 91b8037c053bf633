#pragma once

// Points on an implicit curve found by horizontal scanlines and exact root
// isolation; within 2^-70 of the curve.

#include <singreg/multipoly.hpp>
#include <singreg/roots.hpp>

#include <utility>
#include <vector>

namespace support {

struct CurvePoint {
  singreg::Rational x, y;
  double xd() const { return singreg::to_double(x); }
  double yd() const { return singreg::to_double(y); }
};

inline std::vector<CurvePoint> scanline_points(const singreg::poly::MultiPoly& curve, double y_lo, double y_hi,
                                               int lines, const singreg::Rational& x_lo,
                                               const singreg::Rational& x_hi) {
  using namespace singreg;
  std::vector<CurvePoint> out;
  for (int k = 0; k < lines; ++k) {
    double yd = y_lo + (y_hi - y_lo) * (k + 0.5) / lines;
    Rational y = round_to_denominator(yd, Integer(1000000));
    poly::UniPoly u = curve.partial_eval({{"y", y}}).to_unipoly("x");
    if (u.degree() < 1) continue;
    auto iso = poly::isolate_real_roots(u, x_lo, x_hi, Rational(1, 1 << 30) / Rational(1 << 30) / Rational(1 << 10));
    for (const auto& iv : iso.intervals) out.push_back({iv.midpoint(), y});
  }
  return out;
}

}  // namespace support
