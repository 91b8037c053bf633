#pragma once

#include "singreg/models.hpp"
#include "singreg/multipoly.hpp"
#include "singreg/workspace.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace singreg::intersect {

using poly::MultiPoly;
using workspace::BoundarySegment;
using workspace::LameSpec;
using workspace::RectSpec;
using workspace::WorkspaceSpec;

/// Certified number of distinct real intersection points, with flags.
struct CurveCount {
  int count = 0;
  /// Shared component (segment on the curve, common factor with the
  /// boundary) or a coincidence merged by a product curve.
  bool degenerate = false;
  /// At least one intersection point is a tangency (multiple root).
  bool tangency = false;
  /// Two intersection points closer than 1e-6, or a count that changes
  /// under the +-1e-9 perturbation of the trigonometric approximations.
  bool near_degenerate = false;

  bool flagged() const { return degenerate || tangency || near_degenerate; }
  friend bool operator==(const CurveCount&, const CurveCount&) = default;
};

CurveCount count_on_segment(const MultiPoly& curve, const BoundarySegment& seg);
CurveCount count_on_lame(const MultiPoly& curve, const LameSpec& spec);

struct RectCount {
  std::array<CurveCount, 4> sides;  // bottom, top, left, right
  CurveCount total;                 // shared corners counted once
};
RectCount count_on_rect(const MultiPoly& curve, const RectSpec& spec);

/// side = 0: the whole boundary; 1..4: one side of a rectangle.
CurveCount count_on_boundary(const MultiPoly& curve, const WorkspaceSpec& spec, int side = 0);

/// Sign changes of the curve polynomial along `samples` boundary points
/// (closed loop), or along one rectangle side (open path), in floating point.
int oracle_count(const MultiPoly& curve, const WorkspaceSpec& spec, std::size_t samples, int side = 0);
int oracle_count(const MultiPoly& curve, const BoundarySegment& seg, std::size_t samples);
/// oracle_count for several curves sharing one boundary sample.
std::vector<int> oracle_counts(const std::vector<MultiPoly>& curves, const WorkspaceSpec& spec, std::size_t samples,
                               int side = 0);

/// True if some curve point lies strictly inside the workspace while the
/// curve does not meet the boundary; checked on 64 interior scanlines.
bool curve_inside_check(const MultiPoly& curve, const WorkspaceSpec& spec);
/// Same, with the boundary count already known.
bool curve_inside_check(const MultiPoly& curve, const WorkspaceSpec& spec, int boundary_count);

// ---------------------------------------------------------------- designs

enum class Robot { fivebar, fourbar };
std::string to_string(Robot robot);

enum class Reason { feasible, boundary_intersected, center_unreachable, center_singular, curve_inside_workspace };
std::string to_string(Reason reason);

/// One design problem: robot, fixed parameters and workspace shape. The
/// workspace centre is replaced by (0, f) for the five-bar and (0, 0) for
/// the four-bar (centred frame).
struct Problem {
  Robot robot = Robot::fivebar;
  Rational e{1};  // five-bar base width
  Rational l{3};  // four-bar link length
  Rational d{1};  // four-bar platform offset
  WorkspaceSpec workspace = LameSpec{};
  int side = 0;  // rectangles only: 0 = whole boundary, 1..4 = bottom, top, left, right

  /// ("f", "l") or ("h", "alpha")
  std::array<std::string, 2> axes() const;
  std::vector<std::string> curve_names() const;
  void validate() const;
};

struct IntersectionReport {
  std::array<std::string, 2> axes;
  std::array<Rational, 2> point;
  std::vector<std::string> curve_names;
  std::vector<CurveCount> per_curve;
  /// Rectangle workspaces with side == 0: counts per side, per curve.
  std::vector<std::array<CurveCount, 4>> per_side;
  int total = 0;
  bool feasible = false;
  Reason reason = Reason::boundary_intersected;

  bool flagged() const;
};

/// Design point (a, b) on the problem's axes: (f, l) or (h, alpha).
IntersectionReport classify_design(const Problem& problem, const Rational& a, const Rational& b);

/// The curves and workspace that classify_design uses at a design point.
struct DesignGeometry {
  std::vector<models::ImplicitCurve> curves;
  WorkspaceSpec workspace;
};
DesignGeometry design_geometry(const Problem& problem, const Rational& a, const Rational& b);

}  // namespace singreg::intersect
