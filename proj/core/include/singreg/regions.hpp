#pragma once

#include "singreg/intersect.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace singreg::regions {

using intersect::Problem;
using intersect::Reason;

struct Axis {
  std::string name;
  Rational lo;
  Rational hi;
};

/// Two design axes: (f, l) for the five-bar, (h, alpha) for the four-bar.
struct ParamWindow {
  std::array<Axis, 2> axes;

  /// Default window for the problem's robot.
  static ParamWindow defaults(const Problem& problem);
  /// Names must match the problem's axes, lo < hi, positive lengths,
  /// alpha within (-pi, pi].
  void validate(const Problem& problem) const;
};

/// One leaf of the quadtree. At depth d the window is split into
/// (resolution * 2^d)^2 cells; (i, j) index the first and second axis.
struct Cell {
  int depth = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::array<Rational, 2> center;
  std::vector<int> counts;  // per curve
  int total = 0;
  bool feasible = false;
  Reason reason = Reason::boundary_intersected;
  bool flagged = false;
  int component = -1;

  /// Classification used for refinement and components.
  bool same_class(const Cell& other) const { return feasible == other.feasible && counts == other.counts; }
};

struct Component {
  int id = 0;
  bool feasible = false;
  std::vector<int> counts;
  std::vector<std::size_t> cells;        // indices into RegionMap::cells
  std::array<Rational, 2> representative;
  std::array<Rational, 4> bbox;          // a_lo, a_hi, b_lo, b_hi
  Rational area_cells;                   // in base cells

  bool zero_count() const;
};

struct RegionMap {
  ParamWindow window;
  int resolution = 0;
  int max_depth = 0;
  std::vector<std::string> curve_names;
  std::vector<Cell> cells;  // leaves, ordered by (depth, i, j)
  std::vector<Component> components;

  /// Leaf containing the point; on a shared edge the upper/right leaf,
  /// except at the window's upper edges.
  const Cell& cell_at(const Rational& a, const Rational& b) const;
  std::size_t cell_index_at(const Rational& a, const Rational& b) const;
  /// Component containing the point.
  const Component& component_at(const Rational& a, const Rational& b) const;
  std::vector<const Component*> feasible_components() const;
  std::vector<const Component*> zero_count_components() const;
  /// Width of a leaf at `depth` along axis 0 or 1.
  Rational cell_width(int axis, int depth) const;
};

struct SweepOptions {
  int resolution = 64;
  int max_depth = 0;
  unsigned jobs = 0;  // 0: hardware concurrency
};

/// Classifies every cell centre; refines cells that disagree with a
/// neighbour, in rounds, until no such cell above max_depth remains.
RegionMap sweep(const Problem& problem, const ParamWindow& window, const SweepOptions& options);

/// Sweeps several problems over one window with a shared quadtree: a cell is
/// refined when any member disagrees with a neighbour.
std::vector<RegionMap> sweep_family(const std::vector<Problem>& problems, const ParamWindow& window,
                                    const SweepOptions& options);

/// Cellwise conjunction: counts are the per-curve maximum, feasible only
/// when feasible everywhere, reason from the first infeasible map.
RegionMap intersect_regions(const std::vector<RegionMap>& maps);

/// Four-bar sweep over (h, alpha).
RegionMap fourbar_sweep(const Rational& l, const Rational& d, const ParamWindow& window,
                        const workspace::WorkspaceSpec& workspace, const SweepOptions& options);

/// A maximal run of feasible cells along an h column. The inner bounds
/// are the extreme feasible cell centres, the outer bounds the centres of
/// the infeasible neighbours (or the window edge).
struct AlphaInterval {
  Rational inner_lo, inner_hi;
  Rational outer_lo, outer_hi;
};
std::vector<AlphaInterval> alpha_range_at(const RegionMap& map, const Rational& h);

/// Per feasible component, its representative point.
std::vector<std::array<Rational, 2>> representative_designs(const RegionMap& map);

/// Runs fn(0..n-1) on up to `jobs` threads.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace singreg::regions
