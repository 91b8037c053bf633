#include "doctest.h"

#include <singreg/regions.hpp>

#include <set>

using namespace singreg;
using namespace singreg::regions;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Problem fivebar_lame() {
  Problem p;
  p.workspace = workspace::LameSpec{0, 0, 4, 4, 4};
  return p;
}

Problem fivebar_side(int side) {
  Problem p;
  p.workspace = workspace::RectSpec{0, 0, 4, 4};
  p.side = side;
  return p;
}

void check_same_cells(const RegionMap& a, const RegionMap& b) {
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t k = 0; k < a.cells.size(); ++k) {
    const Cell &x = a.cells[k], &y = b.cells[k];
    CHECK(x.depth == y.depth);
    CHECK(x.i == y.i);
    CHECK(x.j == y.j);
    CHECK(x.center == y.center);
    CHECK(x.counts == y.counts);
    CHECK(x.feasible == y.feasible);
    CHECK(x.reason == y.reason);
    CHECK(x.component == y.component);
  }
  REQUIRE(a.components.size() == b.components.size());
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    CHECK(a.components[k].cells == b.components[k].cells);
    CHECK(a.components[k].representative == b.components[k].representative);
    CHECK(a.components[k].bbox == b.components[k].bbox);
    CHECK(a.components[k].area_cells == b.components[k].area_cells);
  }
}

const RegionMap& lame_flat() {
  static const RegionMap m = sweep(fivebar_lame(), ParamWindow::defaults(fivebar_lame()), {16, 0, 1});
  return m;
}

const RegionMap& lame_fine() {
  static const RegionMap m = sweep(fivebar_lame(), ParamWindow::defaults(fivebar_lame()), {16, 2, 1});
  return m;
}

const std::vector<RegionMap>& side_maps() {
  static const std::vector<RegionMap> maps =
      sweep_family({fivebar_side(1), fivebar_side(2), fivebar_side(3), fivebar_side(4)},
                   ParamWindow::defaults(fivebar_side(1)), {16, 1, 1});
  return maps;
}

}  // namespace

TEST_CASE("parameter windows") {
  Problem five = fivebar_lame();
  ParamWindow w = ParamWindow::defaults(five);
  CHECK(w.axes[0].name == "f");
  CHECK(w.axes[1].name == "l");
  CHECK(w.axes[0].lo == q(1, 5));
  CHECK_NOTHROW(w.validate(five));

  ParamWindow bad = w;
  bad.axes[1].lo = q(-1, 10);
  CHECK_THROWS_AS(bad.validate(five), DomainError);
  bad = w;
  bad.axes[0].hi = bad.axes[0].lo;
  CHECK_THROWS_AS(bad.validate(five), DomainError);

  Problem four;
  four.robot = intersect::Robot::fourbar;
  CHECK_THROWS_AS(w.validate(four), DomainError);
  ParamWindow fw = ParamWindow::defaults(four);
  CHECK(fw.axes[1].name == "alpha");
  CHECK_NOTHROW(fw.validate(four));
  fw.axes[1].lo = q(-315, 100);
  CHECK_THROWS_AS(fw.validate(four), DomainError);

  CHECK_THROWS_AS(sweep(five, w, {8, 0, 1}), DomainError);
  CHECK_THROWS_AS(sweep(five, w, {16, 7, 1}), DomainError);
}

TEST_CASE("tiny window gives one component") {
  Problem p = fivebar_lame();
  ParamWindow w{{Axis{"f", 1, q(10001, 10000)}, Axis{"l", 1, q(10001, 10000)}}};
  RegionMap m = sweep(p, w, {16, 2, 1});
  CHECK(m.cells.size() == 256);
  REQUIRE(m.components.size() == 1);
  // the window centre, exactly
  CHECK(m.components[0].representative == std::array<Rational, 2>{q(20001, 20000), q(20001, 20000)});
  CHECK(m.components[0].area_cells == 256);
}

TEST_CASE("sweep structure") {
  const RegionMap& flat = lame_flat();
  const RegionMap& fine = lame_fine();

  SUBCASE("leaves tile the window") {
    Rational area = 0;
    for (const auto& c : fine.components) area += c.area_cells;
    CHECK(area == 256);
    std::size_t members = 0;
    for (const auto& c : fine.components) members += c.cells.size();
    CHECK(members == fine.cells.size());
  }

  SUBCASE("unrefined cells keep their classification") {
    for (const auto& c : fine.cells) {
      if (c.depth != 0) continue;
      const Cell& base = flat.cells[static_cast<std::size_t>(c.i * 16 + c.j)];
      CHECK(base.counts == c.counts);
      CHECK(base.feasible == c.feasible);
    }
  }

  SUBCASE("refinement stops only where neighbours agree") {
    CHECK(fine.cells.size() > flat.cells.size());
    // probe just outside every finest-cell edge segment of each coarse leaf
    const Rational wa = fine.cell_width(0, 2), wb = fine.cell_width(1, 2);
    const auto& ax = fine.window.axes;
    for (const auto& c : fine.cells) {
      if (c.depth == fine.max_depth) continue;
      const std::int64_t s = std::int64_t{1} << (fine.max_depth - c.depth);
      const std::int64_t i0 = c.i * s, j0 = c.j * s;
      for (std::int64_t t = 0; t < s; ++t) {
        const Rational along_a = ax[0].lo + wa * Rational(2 * (i0 + t) + 1, 2);
        const Rational along_b = ax[1].lo + wb * Rational(2 * (j0 + t) + 1, 2);
        const Rational left = ax[0].lo + wa * Rational(2 * i0 - 1, 2), right = ax[0].lo + wa * Rational(2 * (i0 + s) + 1, 2);
        const Rational down = ax[1].lo + wb * Rational(2 * j0 - 1, 2), up = ax[1].lo + wb * Rational(2 * (j0 + s) + 1, 2);
        for (const auto& [a, b] : {std::pair{left, along_b}, {right, along_b}, {along_a, down}, {along_a, up}}) {
          if (a < ax[0].lo || a > ax[0].hi || b < ax[1].lo || b > ax[1].hi) continue;
          CHECK(fine.cell_at(a, b).same_class(c));
        }
      }
    }
  }

  SUBCASE("components are maximal and homogeneous") {
    std::set<int> ids;
    for (const auto& comp : fine.components) {
      ids.insert(comp.id);
      for (std::size_t k : comp.cells) {
        CHECK(fine.cells[k].component == comp.id);
        CHECK(fine.cells[k].counts == comp.counts);
        CHECK(fine.cells[k].feasible == comp.feasible);
      }
      if (comp.feasible) CHECK(comp.zero_count());
    }
    CHECK(ids.size() == fine.components.size());
  }

  SUBCASE("point lookup") {
    const Cell& c = fine.cell_at(q(37, 10), 3);
    const Rational wa = fine.cell_width(0, c.depth) / 2, wb = fine.cell_width(1, c.depth) / 2;
    CHECK(c.center[0] - wa <= q(37, 10));
    CHECK(q(37, 10) <= c.center[0] + wa);
    CHECK(c.center[1] - wb <= 3);
    CHECK(3 <= c.center[1] + wb);
    CHECK_NOTHROW(fine.cell_at(6, 6));
    CHECK_THROWS_AS(fine.cell_at(7, 1), DomainError);
  }
}

TEST_CASE("sweeps are deterministic across worker counts") {
  Problem p = fivebar_lame();
  RegionMap many = sweep(p, ParamWindow::defaults(p), {16, 2, 4});
  check_same_cells(lame_fine(), many);
}

TEST_CASE("representatives are feasible designs") {
  Problem p = fivebar_lame();
  const RegionMap& m = lame_fine();
  auto reps = representative_designs(m);
  CHECK(reps.size() == m.feasible_components().size());
  REQUIRE_FALSE(reps.empty());
  for (const auto& r : reps) {
    CHECK(intersect::classify_design(p, r[0], r[1]).feasible);
    CHECK(m.component_at(r[0], r[1]).feasible);
  }
  // no feasible cells, no representatives
  ParamWindow tiny_l{{Axis{"f", q(1, 5), 6}, Axis{"l", q(1, 100), q(3, 10)}}};
  RegionMap none = sweep(p, tiny_l, {16, 0, 1});
  CHECK(none.feasible_components().empty());
  CHECK(representative_designs(none).empty());
}

TEST_CASE("intersecting region maps") {
  const ParamWindow w = ParamWindow::defaults(fivebar_side(1));
  std::vector<Problem> sides{fivebar_side(1), fivebar_side(2), fivebar_side(3), fivebar_side(4)};
  const std::vector<RegionMap>& maps = side_maps();
  REQUIRE(maps.size() == 4);

  SUBCASE("idempotent") { check_same_cells(intersect_regions({maps[0], maps[0]}), maps[0]); }

  SUBCASE("feasible set shrinks") {
    RegionMap all = intersect_regions(maps);
    for (std::size_t k = 0; k < all.cells.size(); ++k) {
      if (!all.cells[k].feasible) continue;
      for (const auto& m : maps) CHECK(m.cells[k].feasible);
    }
    for (const auto& comp : all.components)
      if (comp.feasible) CHECK(comp.zero_count());
  }

  SUBCASE("with an infeasible map") {
    RegionMap blocked = maps[0];
    for (auto& c : blocked.cells) {
      c.feasible = false;
      c.reason = Reason::boundary_intersected;
    }
    CHECK(intersect_regions({maps[1], blocked}).feasible_components().empty());
  }

  SUBCASE("grids must match") {
    RegionMap other = sweep(sides[0], w, {16, 0, 1});
    CHECK_THROWS_AS(intersect_regions({maps[0], other}), DomainError);
  }

  SUBCASE("the two lateral sides give the same regions") {
    // swept on their own, each with its own refinement
    RegionMap left = sweep(sides[2], w, {16, 1, 1});
    RegionMap right = sweep(sides[3], w, {16, 1, 1});
    REQUIRE(left.cells.size() == right.cells.size());
    for (std::size_t k = 0; k < left.cells.size(); ++k) {
      const Cell &a = left.cells[k], &b = right.cells[k];
      CHECK(a.depth == b.depth);
      CHECK(a.feasible == b.feasible);
      // ds1 on the left side mirrors ds2 on the right side
      CHECK(a.counts == std::vector<int>{b.counts[0], b.counts[1], b.counts[3], b.counts[2]});
    }
    REQUIRE(left.components.size() == right.components.size());
    for (std::size_t k = 0; k < left.components.size(); ++k) CHECK(left.components[k].cells == right.components[k].cells);
  }
}

TEST_CASE("four-bar sweeps and alpha ranges") {
  const ParamWindow w = ParamWindow::defaults(Problem{intersect::Robot::fourbar});
  RegionMap m = fourbar_sweep(q(33, 10), 1, w, workspace::RectSpec{0, 0, 4, 4}, {32, 1, 1});
  auto ranges = alpha_range_at(m, q(425, 100));
  REQUIRE_FALSE(ranges.empty());
  for (const auto& r : m.feasible_components()) CHECK(r->zero_count());
  for (const auto& r : ranges) {
    CHECK(r.outer_lo <= r.inner_lo);
    CHECK(r.inner_lo <= r.inner_hi);
    CHECK(r.inner_hi <= r.outer_hi);
  }
  CHECK_THROWS_AS(alpha_range_at(m, 7), DomainError);

  // beyond reach everywhere
  ParamWindow far{{Axis{"h", 12, 14}, w.axes[1]}};
  RegionMap none = fourbar_sweep(q(33, 10), 1, far, workspace::RectSpec{0, 0, 4, 4}, {16, 0, 1});
  CHECK(alpha_range_at(none, 13).empty());
}
