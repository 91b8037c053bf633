#include "singreg/models.hpp"

#include <cmath>
#include <numbers>

namespace singreg::models {

namespace {

const MultiPoly X = MultiPoly::variable("x");
const MultiPoly Y = MultiPoly::variable("y");

double half_e(const FiveBarParams& p) { return to_double(p.e) / 2; }

}  // namespace

std::string to_string(CurveKind kind) { return kind == CurveKind::parallel ? "parallel" : "serial"; }

void FiveBarParams::validate() const {
  if (sgn(e) <= 0) throw DomainError("five-bar: e must be positive");
  if (sgn(l) <= 0) throw DomainError("five-bar: l must be positive");
}

std::array<MultiPoly, 4> fivebar_constraints(const FiveBarParams& params) {
  params.validate();
  auto v = [](const char* name) { return MultiPoly::variable(name); };
  const MultiPoly l(params.l), he(Rational(params.e / 2));
  return {X - l * v("c1") - l * v("c2") + he, Y - l * v("s1") - l * v("s2"),
          X - l * v("c3") - l * v("c4") - he, Y - l * v("s3") - l * v("s4")};
}

std::array<MultiPoly, 4> fivebar_trig_identities() {
  std::array<MultiPoly, 4> out;
  for (int i = 0; i < 4; ++i) {
    std::string k = std::to_string(i + 1);
    out[static_cast<std::size_t>(i)] =
        MultiPoly::variable("c" + k).pow(2) + MultiPoly::variable("s" + k).pow(2) - 1;
  }
  return out;
}

std::vector<ImplicitCurve> fivebar_singularity_curves(const FiveBarParams& params) {
  params.validate();
  const Rational e2 = params.e * params.e, l2 = params.l * params.l;
  const MultiPoly x2 = X.pow(2), y2 = Y.pow(2);

  MultiPoly dp1 = MultiPoly(16) * (Y.pow(6) + X.pow(6)) + MultiPoly(Rational(8 * e2)) * (Y.pow(4) - X.pow(4)) +
                  MultiPoly(48) * (Y.pow(4) * x2 + y2 * X.pow(4)) + MultiPoly(Rational(e2 * e2)) * (y2 + x2) -
                  MultiPoly(Rational(16 * l2 * e2)) * y2;
  // product of the two circles x^2 + (y -/+ sqrt(4l^2 - e^2)/2)^2 = l^2
  MultiPoly dp23 = (x2 + y2 - MultiPoly(Rational(e2 / 4))).pow(2) - MultiPoly(Rational(4 * l2 - e2)) * y2;
  MultiPoly ds1 = (MultiPoly(2) * X + params.e).pow(2) + MultiPoly(4) * y2 - MultiPoly(Rational(16 * l2));
  MultiPoly ds2 = (MultiPoly(2) * X - params.e).pow(2) + MultiPoly(4) * y2 - MultiPoly(Rational(16 * l2));
  return {{"dp1", CurveKind::parallel, dp1},
          {"dp23", CurveKind::parallel, dp23},
          {"ds1", CurveKind::serial, ds1},
          {"ds2", CurveKind::serial, ds2}};
}

namespace {

// Elbow and angles given the leg base, the point and the squared elbow offset.
std::pair<double, double> leg_angles(double ax, double x, double y, double dist, double radicand, double l,
                                     int elbow_sign) {
  const double vx = x - ax, vy = y;
  double bx, by;
  if (dist == 0) {
    bx = ax;
    by = l;
  } else {
    const double h = std::sqrt(std::max(0.0, radicand));
    // the left side of A->P gives a negative cross product (B - A) x (P - B)
    const double side = elbow_sign >= 0 ? -1.0 : 1.0;
    bx = ax + vx / 2 + side * h * (-vy / dist);
    by = vy / 2 + side * h * (vx / dist);
  }
  return {std::atan2(by, bx - ax), std::atan2(y - by, x - bx)};
}

[[noreturn]] void out_of_reach(int leg, const std::string& x, const std::string& y) {
  throw OutOfReachError(leg, "point (" + x + ", " + y + ") is out of reach of leg " + std::to_string(leg));
}

}  // namespace

std::pair<double, double> fivebar_leg_ik(const Rational& x, const Rational& y, const FiveBarParams& params, int leg,
                                         int elbow_sign) {
  params.validate();
  if (leg != 1 && leg != 2) throw DomainError("five-bar leg must be 1 or 2");
  const Rational ax = leg == 1 ? Rational(-params.e / 2) : Rational(params.e / 2);
  const Rational dist2 = (x - ax) * (x - ax) + y * y;
  const Rational radicand = params.l * params.l - dist2 / 4;
  if (sgn(radicand) < 0) out_of_reach(leg, singreg::to_string(x), singreg::to_string(y));
  return leg_angles(to_double(ax), to_double(x), to_double(y), std::sqrt(to_double(dist2)), to_double(radicand),
                    to_double(params.l), elbow_sign);
}

std::pair<double, double> fivebar_leg_ik(double x, double y, const FiveBarParams& params, int leg, int elbow_sign) {
  params.validate();
  if (leg != 1 && leg != 2) throw DomainError("five-bar leg must be 1 or 2");
  const double l = to_double(params.l);
  const double ax = leg == 1 ? -half_e(params) : half_e(params);
  const double dist = std::hypot(x - ax, y);
  if (dist > 2 * l * (1 + 1e-12)) out_of_reach(leg, std::to_string(x), std::to_string(y));
  return leg_angles(ax, x, y, dist, (l - dist / 2) * (l + dist / 2), l, elbow_sign);
}

JointAngles fivebar_ik(const Pose& pose, const FiveBarParams& params, const WorkingMode& mode) {
  JointAngles j;
  std::tie(j.theta1, j.theta2) = fivebar_leg_ik(pose.x, pose.y, params, 1, mode.leg1);
  std::tie(j.theta3, j.theta4) = fivebar_leg_ik(pose.x, pose.y, params, 2, mode.leg2);
  return j;
}

JointAngles fivebar_ik(const Rational& x, const Rational& y, const FiveBarParams& params, const WorkingMode& mode) {
  JointAngles j;
  std::tie(j.theta1, j.theta2) = fivebar_leg_ik(x, y, params, 1, mode.leg1);
  std::tie(j.theta3, j.theta4) = fivebar_leg_ik(x, y, params, 2, mode.leg2);
  return j;
}

std::array<double, 4> fivebar_residuals(const Pose& pose, const JointAngles& j, const FiveBarParams& params) {
  const double l = to_double(params.l), he = half_e(params);
  return {pose.x - l * std::cos(j.theta1) - l * std::cos(j.theta2) + he,
          pose.y - l * std::sin(j.theta1) - l * std::sin(j.theta2),
          pose.x - l * std::cos(j.theta3) - l * std::cos(j.theta4) - he,
          pose.y - l * std::sin(j.theta3) - l * std::sin(j.theta4)};
}

JacobianDets fivebar_jacobian_dets(const Pose& pose, const JointAngles& j, const FiveBarParams& params) {
  const double l = to_double(params.l);
  for (double r : fivebar_residuals(pose, j, params)) {
    if (std::abs(r) > 1e-6 * std::max(1.0, l)) throw DomainError("joint angles do not match the pose");
  }
  // Each leg contributes ||P - B_i||^2 - l^2 = 0 with B_i = A_i + l (cos, sin)(theta_actuated).
  struct Leg {
    double ax, theta;
  };
  const Leg legs[2] = {{-half_e(params), j.theta1}, {half_e(params), j.theta3}};
  double a[2][2], b[2], bscale[2];
  for (int i = 0; i < 2; ++i) {
    const double bx = legs[i].ax + l * std::cos(legs[i].theta), by = l * std::sin(legs[i].theta);
    const double px = pose.x - bx, py = pose.y - by;
    a[i][0] = 2 * px;
    a[i][1] = 2 * py;
    // -d/dtheta of the constraint: 2 (P - B) . dB/dtheta
    const double dbx = -l * std::sin(legs[i].theta), dby = l * std::cos(legs[i].theta);
    b[i] = -2 * (px * dbx + py * dby);
    bscale[i] = 2 * std::hypot(bx - legs[i].ax, by) * std::hypot(px, py);
  }
  const double na = std::hypot(a[0][0], a[0][1]) * std::hypot(a[1][0], a[1][1]);
  JacobianDets out;
  out.detA = na > 0 ? (a[0][0] * a[1][1] - a[0][1] * a[1][0]) / na : 0.0;
  out.detB = bscale[0] * bscale[1] > 0 ? (b[0] * b[1]) / (bscale[0] * bscale[1]) : 0.0;
  return out;
}

bool fivebar_reachable(const Rational& x, const Rational& y, const FiveBarParams& params) {
  const Rational he = params.e / 2, reach2 = 4 * params.l * params.l;
  const Rational y2 = y * y;
  return (x + he) * (x + he) + y2 <= reach2 && (x - he) * (x - he) + y2 <= reach2;
}

bool fivebar_reachable(const Pose& pose, const FiveBarParams& params) {
  const double he = half_e(params), reach = 2 * to_double(params.l);
  return std::hypot(pose.x + he, pose.y) <= reach && std::hypot(pose.x - he, pose.y) <= reach;
}

}  // namespace singreg::models
