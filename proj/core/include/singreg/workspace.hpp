#pragma once

#include "singreg/multipoly.hpp"
#include "singreg/rational.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace singreg::workspace {

using poly::MultiPoly;

struct Point {
  Rational x;
  Rational y;
};

/// |(x - xc) / (lx/2)|^n + |(y - yc) / (ly/2)|^n = 1 with n even.
struct LameSpec {
  Rational xc{0}, yc{0};
  Rational lx{4}, ly{4};
  int n = 4;

  void validate() const;
};

/// Axis-aligned rectangle with vertices (xc +- lx/2, yc +- ly/2).
struct RectSpec {
  Rational xc{0}, yc{0};
  Rational lx{4}, ly{4};

  void validate() const;
};

using WorkspaceSpec = std::variant<LameSpec, RectSpec>;

/// Closed side start + t (end - start), t in [0, 1].
struct BoundarySegment {
  Point start;
  Point end;

  Point at(const Rational& t) const;
};

enum class Location { inside, boundary, outside };
std::string to_string(Location loc);

Point center(const WorkspaceSpec& spec);
/// Same spec moved so that its centre is `c`.
WorkspaceSpec recentered(const WorkspaceSpec& spec, const Point& c);
/// [xmin, xmax, ymin, ymax]
std::array<Rational, 4> bounding_box(const WorkspaceSpec& spec);

/// The Lamé polynomial with the constant normalised to -1 (value -1 at the centre).
MultiPoly lame_implicit(const LameSpec& spec);

/// Sides in the order bottom, top, left, right. Bottom and top run in +x,
/// left and right in +y, so the left and right sides mirror each other.
std::array<BoundarySegment, 4> rect_segments(const RectSpec& spec);
/// Side names matching rect_segments: "bottom", "top", "left", "right".
const std::array<std::string, 4>& rect_side_names();

/// Exact classification of a rational point.
Location contains(const WorkspaceSpec& spec, const Point& p);

/// N points ordered counter-clockwise around the boundary.
std::vector<std::pair<double, double>> boundary_sample(const WorkspaceSpec& spec, std::size_t count);

}  // namespace singreg::workspace
