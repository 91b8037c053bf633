#pragma once

#include "singreg/multipoly.hpp"
#include "singreg/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace singreg::models {

using poly::MultiPoly;

enum class CurveKind { parallel, serial };

/// A named singularity locus in the (x, y) plane.
struct ImplicitCurve {
  std::string name;
  CurveKind kind;
  MultiPoly poly;
};

std::string to_string(CurveKind kind);

struct Pose {
  double x = 0;
  double y = 0;
  double alpha = 0;
};

struct JointAngles {
  double theta1 = 0, theta2 = 0, theta3 = 0, theta4 = 0, theta5 = 0;
};

/// Determinants of the velocity-model matrices, each divided by a norm
/// product so that the result is the sine of the relevant joint angle.
struct JacobianDets {
  double detA = 0;
  double detB = 0;
};

// ---------------------------------------------------------------- five-bar

/// Base points A1 = (-e/2, 0), A2 = (e/2, 0); all four links have length l.
struct FiveBarParams {
  Rational e{1};
  Rational l{3};

  void validate() const;
};

/// Elbow choice per leg: sign of (B_i - A_i) x (P - B_i).
struct WorkingMode {
  int leg1 = -1;
  int leg2 = 1;
};

class OutOfReachError : public DomainError {
 public:
  OutOfReachError(int leg, const std::string& what) : DomainError(what), leg(leg) {}
  int leg;
};

/// The four loop-closure equations in x, y and the auxiliaries c1..c4, s1..s4
/// (cosine and sine of theta1..theta4).
std::array<MultiPoly, 4> fivebar_constraints(const FiveBarParams& params);
/// The circle identities c_i^2 + s_i^2 - 1 that go with the constraints.
std::array<MultiPoly, 4> fivebar_trig_identities();

/// [dp1, dp23, ds1, ds2]
std::vector<ImplicitCurve> fivebar_singularity_curves(const FiveBarParams& params);

/// Angles (theta_actuated, theta_passive) of one leg; leg is 1 or 2.
std::pair<double, double> fivebar_leg_ik(double x, double y, const FiveBarParams& params, int leg, int elbow_sign);
/// Exact-input variant: the elbow offset sqrt(l^2 - |P - A|^2 / 4) is formed
/// from an exact radicand, which keeps it accurate next to a stretched leg.
std::pair<double, double> fivebar_leg_ik(const Rational& x, const Rational& y, const FiveBarParams& params, int leg,
                                         int elbow_sign);
JointAngles fivebar_ik(const Pose& pose, const FiveBarParams& params, const WorkingMode& mode = {});
JointAngles fivebar_ik(const Rational& x, const Rational& y, const FiveBarParams& params, const WorkingMode& mode = {});
/// Left-hand sides of the four constraints at a pose and joint vector.
std::array<double, 4> fivebar_residuals(const Pose& pose, const JointAngles& joints, const FiveBarParams& params);
JacobianDets fivebar_jacobian_dets(const Pose& pose, const JointAngles& joints, const FiveBarParams& params);

bool fivebar_reachable(const Rational& x, const Rational& y, const FiveBarParams& params);
bool fivebar_reachable(const Pose& pose, const FiveBarParams& params);

// ---------------------------------------------------------------- four-bar

/// A3 = (0, g) with g = h + f. Poses and curves for the four-bar live in the
/// workspace-centred frame, where A3 = (0, h).
struct FourBarParams {
  Rational l{3};
  Rational d{1};
  Rational h{4};

  void validate() const;
};

/// Rational stand-ins for cos(alpha) and sin(alpha), within 1e-9.
struct TrigApprox {
  Rational cos;
  Rational sin;

  /// Both values rounded down (or up) to a multiple of 1e-9.
  static TrigApprox lower(double alpha);
  static TrigApprox upper(double alpha);
};

/// Platform direction from P towards C3: C3 = P + d * w with
/// w = -(cos alpha, sin alpha).
std::array<Rational, 2> platform_direction(const TrigApprox& trig);

/// [ds3, dp4, dp5] with the base point at (0, g), in the frame where the
/// robot's x axis is the five-bar base line.
std::vector<ImplicitCurve> fourbar_singularity_curves_world(const Rational& l, const Rational& d, const Rational& g,
                                                            const TrigApprox& trig);
/// [ds3, dp4, dp5] in the workspace-centred frame.
std::vector<ImplicitCurve> fourbar_singularity_curves(const FourBarParams& params, const TrigApprox& trig);

/// Solutions theta5 of the loop equation at a centred pose; one value when
/// the chain A3-B3-C3 is stretched.
std::vector<double> fourbar_io_solve(const Pose& pose, const FourBarParams& params);
/// Exact-input variant taking the platform direction from `trig`.
std::vector<double> fourbar_io_solve(const Rational& x, const Rational& y, const TrigApprox& trig,
                                     const FourBarParams& params);
/// Residual of the loop equation.
double fourbar_residual(const Pose& pose, double theta5, const FourBarParams& params);
JacobianDets fourbar_jacobian_dets(const Pose& pose, double theta5, const FourBarParams& params);

/// ||C3 - A3|| <= 2l, exactly, at a centred point.
bool fourbar_assemblable(const Rational& x, const Rational& y, const FourBarParams& params, const TrigApprox& trig);

}  // namespace singreg::models
