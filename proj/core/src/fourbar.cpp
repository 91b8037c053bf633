#include "singreg/models.hpp"

#include <cmath>
#include <numbers>

namespace singreg::models {

namespace {

const MultiPoly X = MultiPoly::variable("x");
const MultiPoly Y = MultiPoly::variable("y");

const Integer kTrigScale(1000000000);

Rational scaled(double value, bool up) {
  double v = value * 1e9;
  Integer n(up ? std::ceil(v) : std::floor(v));
  Rational r(n, kTrigScale);
  r.canonicalize();
  return r;
}

MultiPoly c(const Rational& r) { return MultiPoly(r); }

}  // namespace

void FourBarParams::validate() const {
  if (sgn(l) <= 0) throw DomainError("four-bar: l must be positive");
  if (sgn(d) <= 0) throw DomainError("four-bar: d must be positive");
}

TrigApprox TrigApprox::lower(double alpha) { return {scaled(std::cos(alpha), false), scaled(std::sin(alpha), false)}; }
TrigApprox TrigApprox::upper(double alpha) { return {scaled(std::cos(alpha), true), scaled(std::sin(alpha), true)}; }

std::array<Rational, 2> platform_direction(const TrigApprox& trig) { return {-trig.cos, -trig.sin}; }

std::vector<ImplicitCurve> fourbar_singularity_curves_world(const Rational& l, const Rational& d, const Rational& g,
                                                            const TrigApprox& trig) {
  if (sgn(l) <= 0 || sgn(d) <= 0) throw DomainError("four-bar: l and d must be positive");
  const auto [wx, wy] = platform_direction(trig);
  const MultiPoly x2 = X.pow(2), y2 = Y.pow(2);
  const Rational g2 = g * g, d2 = d * d;

  MultiPoly ds3 = (c(2 * g * wy) - c(2 * wx) * X - c(2 * wy) * Y) * c(d) - c(d2) - x2 - c(g2) - y2 +
                  c(4 * l * l) + c(2 * g) * Y;
  MultiPoly dp4 = c(g2) + (c(2 * (l * wy - d * wy)) - c(2) * Y) * c(g) + x2 + c(2 * (d - l) * wx) * X + y2 +
                  c(2 * d * wy - 2 * l * wy) * Y + c(d2 - 2 * l * d);
  MultiPoly dp5 = c(g2) - (c(2 * (l * wy + d * wy)) + c(2) * Y) * c(g) + x2 + c(2 * (d + l) * wx) * X + y2 +
                  c(2 * d * wy + 2 * l * wy) * Y + c(d2 + 2 * l * d);
  return {{"ds3", CurveKind::serial, ds3}, {"dp4", CurveKind::parallel, dp4}, {"dp5", CurveKind::parallel, dp5}};
}

std::vector<ImplicitCurve> fourbar_singularity_curves(const FourBarParams& params, const TrigApprox& trig) {
  params.validate();
  return fourbar_singularity_curves_world(params.l, params.d, params.h, trig);
}

namespace {

struct Chain {
  double ax, ay, cx, cy;
};

Chain chain_at(const Pose& pose, const FourBarParams& params) {
  const double d = to_double(params.d);
  return {0.0, to_double(params.h), pose.x - d * std::cos(pose.alpha), pose.y - d * std::sin(pose.alpha)};
}

}  // namespace

namespace {

// Roots of (K + Dx) t^2 - 2 Dy t + (K - Dx) = 0, t = tan(theta5 / 2), where
// D = C3 - A3, K = ||D||^2 / (2l) and `disc` = ||D||^2 - K^2.
std::vector<double> half_angle_roots(double dx, double dy, double n2, double k, double disc) {
  const double n = std::sqrt(n2);
  const double qa = k + dx, qb = -2 * dy, qc = k - dx;
  std::vector<double> out;
  if (std::abs(qa) <= 1e-14 * n) {
    out.push_back(std::numbers::pi);
    if (std::abs(qb) > 1e-14 * n) out.push_back(2 * std::atan(-qc / qb));
    return out;
  }
  if (disc <= 1e-24 * n2 * n2) {
    out.push_back(2 * std::atan(dy / qa));
    return out;
  }
  const double s = std::sqrt(disc);
  out.push_back(2 * std::atan((dy - s) / qa));
  out.push_back(2 * std::atan((dy + s) / qa));
  return out;
}

}  // namespace

std::vector<double> fourbar_io_solve(const Pose& pose, const FourBarParams& params) {
  params.validate();
  const double l = to_double(params.l);
  const Chain ch = chain_at(pose, params);
  const double dx = ch.cx - ch.ax, dy = ch.cy - ch.ay;
  const double n2 = dx * dx + dy * dy, n = std::sqrt(n2);
  if (n > 2 * l * (1 + 1e-12)) throw DomainError("four-bar is not assemblable: ||C3 - A3|| exceeds 2l");
  if (n < 1e-12 * l) throw DomainError("four-bar input angle is indeterminate: C3 coincides with A3");
  const double k = n2 / (2 * l);
  // ||D||^2 - K^2 = ||D||^2 (2l - ||D||)(2l + ||D||) / (4 l^2), formed without cancellation
  const double disc = std::max(0.0, n2 * (2 * l - n) * (2 * l + n) / (4 * l * l));
  return half_angle_roots(dx, dy, n2, k, disc);
}

std::vector<double> fourbar_io_solve(const Rational& x, const Rational& y, const TrigApprox& trig,
                                     const FourBarParams& params) {
  params.validate();
  const auto [wx, wy] = platform_direction(trig);
  const Rational dx = x + params.d * wx, dy = y + params.d * wy - params.h;
  const Rational n2 = dx * dx + dy * dy;
  if (sgn(n2) == 0) throw DomainError("four-bar input angle is indeterminate: C3 coincides with A3");
  const Rational k = n2 / (2 * params.l);
  const Rational disc = n2 - k * k;
  if (sgn(disc) < 0) throw DomainError("four-bar is not assemblable: ||C3 - A3|| exceeds 2l");
  if (sgn(disc) == 0) {
    const double qa = to_double(k + dx);
    if (qa == 0) return {std::numbers::pi};
    return {2 * std::atan(to_double(dy) / qa)};
  }
  return half_angle_roots(to_double(dx), to_double(dy), to_double(n2), to_double(k), to_double(disc));
}

double fourbar_residual(const Pose& pose, double theta5, const FourBarParams& params) {
  const double l = to_double(params.l);
  const Chain ch = chain_at(pose, params);
  const double bx = ch.ax + l * std::cos(theta5), by = ch.ay + l * std::sin(theta5);
  return (ch.cx - bx) * (ch.cx - bx) + (ch.cy - by) * (ch.cy - by) - l * l;
}

JacobianDets fourbar_jacobian_dets(const Pose& pose, double theta5, const FourBarParams& params) {
  const double l = to_double(params.l), d = to_double(params.d);
  if (std::abs(fourbar_residual(pose, theta5, params)) > 1e-6 * l * l) {
    throw DomainError("input angle does not close the four-bar loop");
  }
  const Chain ch = chain_at(pose, params);
  const double bx = ch.ax + l * std::cos(theta5), by = ch.ay + l * std::sin(theta5);
  const double rx = ch.cx - bx, ry = ch.cy - by;  // B3 -> C3
  // dC3/dalpha and dB3/dtheta5
  const double dcx = d * std::sin(pose.alpha), dcy = -d * std::cos(pose.alpha);
  const double dbx = -l * std::sin(theta5), dby = l * std::cos(theta5);
  const double a = 2 * (rx * dcx + ry * dcy);
  const double b = -2 * (rx * dbx + ry * dby);
  const double r = std::hypot(rx, ry);
  JacobianDets out;
  out.detA = r > 0 ? a / (2 * r * d) : 0.0;
  out.detB = r > 0 ? b / (2 * r * l) : 0.0;
  return out;
}

bool fourbar_assemblable(const Rational& x, const Rational& y, const FourBarParams& params, const TrigApprox& trig) {
  const auto [wx, wy] = platform_direction(trig);
  const Rational dx = x + params.d * wx, dy = y + params.d * wy - params.h;
  return dx * dx + dy * dy <= 4 * params.l * params.l;
}

}  // namespace singreg::models
