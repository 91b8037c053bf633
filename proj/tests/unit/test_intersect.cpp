#include "doctest.h"

#include <singreg/intersect.hpp>

#include <random>

using namespace singreg;
using namespace singreg::intersect;
using poly::MultiPoly;
using workspace::Point;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

const MultiPoly X = MultiPoly::variable("x");
const MultiPoly Y = MultiPoly::variable("y");
const MultiPoly unit_circle = X.pow(2) + Y.pow(2) - 1;

MultiPoly curve_named(const std::vector<models::ImplicitCurve>& curves, const std::string& name) {
  for (const auto& c : curves)
    if (c.name == name) return c.poly;
  FAIL("no curve " << name);
  return {};
}

Rational random_rational(std::mt19937_64& rng, long lo_thousandths, long hi_thousandths) {
  std::uniform_int_distribution<long> d(lo_thousandths, hi_thousandths);
  return q(d(rng), 1000);
}

}  // namespace

TEST_CASE("segment counts") {
  const auto curves = models::fivebar_singularity_curves({1, 3});
  const MultiPoly ds1 = curve_named(curves, "ds1");
  // bottom side of the 4x4 square centred at (0, 3.8)
  CHECK(count_on_segment(ds1, {{-2, q(9, 5)}, {2, q(9, 5)}}).count == 0);

  CurveCount two = count_on_segment(unit_circle, {{-2, 0}, {2, 0}});
  CHECK(two.count == 2);
  CHECK_FALSE(two.flagged());

  CurveCount tangent = count_on_segment(unit_circle, {{-2, 1}, {2, 1}});
  CHECK(tangent.count == 1);
  CHECK(tangent.tangency);

  CHECK(count_on_segment(unit_circle, {{-2, 2}, {2, 2}}).count == 0);
  // closed segments: an endpoint on the curve counts
  CHECK(count_on_segment(unit_circle, {{1, 0}, {3, 0}}).count == 1);
  CHECK(count_on_segment(Y, {{-1, 0}, {1, 0}}).degenerate);
  CHECK_THROWS_AS(count_on_segment(MultiPoly(), {{0, 0}, {1, 0}}), DomainError);
}

TEST_CASE("Lamé counts") {
  const LameSpec fig2b{0, q(37, 10), 4, 4, 4};
  const auto curves = models::fivebar_singularity_curves({1, 3});
  for (const auto& c : curves) CHECK(count_on_lame(c.poly, fig2b).count == 0);

  CurveCount same = count_on_lame(unit_circle, {0, 0, 2, 2, 2});
  CHECK(same.degenerate);

  const MultiPoly short_ds1 = curve_named(models::fivebar_singularity_curves({1, q(9, 10)}), "ds1");
  CurveCount reach = count_on_lame(short_ds1, fig2b);
  CHECK(reach.count >= 2);
  CHECK(reach.count == oracle_count(short_ds1, WorkspaceSpec{fig2b}, 1000000));

  // circle of radius 11/5 between the axis points and the diagonal points: 8 crossings
  const LameSpec oval{0, 0, 4, 4, 4};
  CurveCount eight = count_on_lame(X.pow(2) + Y.pow(2) - q(121, 25), oval);
  CHECK(eight.count == 8);
  CHECK_FALSE(eight.flagged());

  // vertical line through the oval: the y-projection is not one-to-one
  CurveCount vertical = count_on_lame(X - q(1, 2), oval);
  CHECK(vertical.count == 2);
  CHECK_FALSE(vertical.degenerate);

  CurveCount touch = count_on_lame(Y - 2, oval);
  CHECK(touch.count == 1);
  CHECK(touch.tangency);
}

TEST_CASE("rectangle counts") {
  const RectSpec square{0, 0, 4, 4};
  RectCount rc = count_on_rect(X.pow(2) + Y.pow(2) - 4, square);
  for (const auto& s : rc.sides) {
    CHECK(s.count == 1);
    CHECK(s.tangency);
  }
  CHECK(rc.total.count == 4);

  // through two opposite corners: sides see 4 hits, 2 distinct points
  RectCount diag = count_on_rect(X - Y, square);
  CHECK(diag.sides[0].count + diag.sides[1].count + diag.sides[2].count + diag.sides[3].count == 4);
  CHECK(diag.total.count == 2);
  CHECK(count_on_boundary(X - Y, WorkspaceSpec{square}, 1).count == 1);
  CHECK_THROWS_AS(count_on_boundary(X, WorkspaceSpec{LameSpec{}}, 2), DomainError);
}

TEST_CASE("oracle counts") {
  CHECK(oracle_count(unit_circle, BoundarySegment{{-2, 0}, {2, 0}}, 10000) == 2);
  CHECK(oracle_count(X.pow(2) + Y.pow(2) - 100, WorkspaceSpec{LameSpec{}}, 1000) == 0);
  CHECK(oracle_count(unit_circle, WorkspaceSpec{RectSpec{0, 0, 4, 4}}, 4000) == 0);
  CHECK(oracle_count(X.pow(2) + Y.pow(2) - q(121, 25), WorkspaceSpec{LameSpec{}}, 100000) == 8);

  SUBCASE("random conics against random squares") {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
      MultiPoly conic = MultiPoly(random_rational(rng, -1000, 1000)) * X.pow(2) +
                        MultiPoly(random_rational(rng, -1000, 1000)) * X * Y +
                        MultiPoly(random_rational(rng, -1000, 1000)) * Y.pow(2) +
                        MultiPoly(random_rational(rng, -2000, 2000)) * X +
                        MultiPoly(random_rational(rng, -2000, 2000)) * Y + MultiPoly(random_rational(rng, -3000, 3000));
      if (conic.total_degree() < 1) continue;
      RectSpec sq{random_rational(rng, -1000, 1000), random_rational(rng, -1000, 1000), random_rational(rng, 500, 4000),
                  random_rational(rng, 500, 4000)};
      auto segs = workspace::rect_segments(sq);
      for (std::size_t i = 0; i < 4; ++i) {
        CurveCount c = count_on_segment(conic, segs[i]);
        if (c.flagged()) continue;
        // the oracle cannot see roots at the segment ends
        const Rational a = conic.eval({{"x", segs[i].start.x}, {"y", segs[i].start.y}});
        const Rational b = conic.eval({{"x", segs[i].end.x}, {"y", segs[i].end.y}});
        if (a == 0 || b == 0) continue;
        CHECK(c.count == oracle_count(conic, segs[i], 1000000));
        ++checked;
      }
    }
    CHECK(checked > 100);
  }
}

TEST_CASE("certified counts match the oracle on random five-bar designs") {
  std::mt19937_64 rng(2024);
  Problem problem;
  int flagged = 0, compared = 0;
  for (int trial = 0; trial < 25; ++trial) {
    const Rational f = random_rational(rng, 200, 6000), l = random_rational(rng, 200, 6000);
    DesignGeometry geo = design_geometry(problem, f, l);
    IntersectionReport rep = classify_design(problem, f, l);
    for (std::size_t i = 0; i < geo.curves.size(); ++i) {
      if (rep.per_curve[i].flagged()) {
        ++flagged;
        continue;
      }
      CAPTURE(f);
      CAPTURE(l);
      CAPTURE(geo.curves[i].name);
      CHECK(rep.per_curve[i].count == oracle_count(geo.curves[i].poly, geo.workspace, 1000000));
      ++compared;
    }
  }
  CHECK(flagged * 20 <= flagged + compared);
}

TEST_CASE("counts are invariant under scaling the curve") {
  const auto curves = models::fivebar_singularity_curves({1, q(19, 10)});
  const WorkspaceSpec lame = LameSpec{0, q(3, 2), 4, 4, 4};
  const WorkspaceSpec square = RectSpec{0, q(3, 2), 4, 4};
  for (const auto& c : curves) {
    for (const Rational& k : {q(-1), q(7, 3), q(-1, 1000)}) {
      MultiPoly scaled = MultiPoly(k) * c.poly;
      CHECK(count_on_boundary(scaled, lame) == count_on_boundary(c.poly, lame));
      CHECK(count_on_rect(scaled, std::get<RectSpec>(square)).total ==
            count_on_rect(c.poly, std::get<RectSpec>(square)).total);
    }
  }
}

TEST_CASE("ds1 and ds2 mirror across the sides") {
  std::mt19937_64 rng(5);
  Problem problem;
  problem.workspace = RectSpec{0, 0, 4, 4};
  const int mirror[4] = {0, 1, 3, 2};
  for (int trial = 0; trial < 30; ++trial) {
    const Rational f = random_rational(rng, 200, 6000), l = random_rational(rng, 200, 6000);
    IntersectionReport rep = classify_design(problem, f, l);
    REQUIRE(rep.per_side.size() == 4);
    for (int s = 0; s < 4; ++s) CHECK(rep.per_side[2][s] == rep.per_side[3][mirror[s]]);
  }
}

TEST_CASE("curve inside check") {
  const WorkspaceSpec lame = LameSpec{0, q(37, 10), 4, 4, 4};
  const auto curves = models::fivebar_singularity_curves({1, 3});
  CHECK_FALSE(curve_inside_check(curve_named(curves, "ds1"), lame));
  CHECK_FALSE(curve_inside_check(curve_named(curves, "dp1"), lame));
  const MultiPoly tiny = X.pow(2) + (Y - q(37, 10)).pow(2) - q(1, 100);
  CHECK(curve_inside_check(tiny, lame));
  CHECK(curve_inside_check(tiny, WorkspaceSpec{RectSpec{0, q(37, 10), 4, 4}}));
  // the Lamé corner region is outside the oval even though inside the box
  CHECK_FALSE(curve_inside_check((X - q(19, 10)).pow(2) + (Y - q(37, 10) - q(19, 10)).pow(2) - q(1, 1000), lame));
  CHECK_FALSE(curve_inside_check(unit_circle, WorkspaceSpec{LameSpec{0, 0, 2, 2, 2}}));
}

TEST_CASE("reference five-bar designs") {
  Problem lame;
  lame.workspace = LameSpec{0, 0, 4, 4, 4};

  IntersectionReport b = classify_design(lame, q(37, 10), 3);
  CHECK(b.feasible);
  CHECK(b.reason == Reason::feasible);
  CHECK(b.total == 0);
  REQUIRE(b.per_curve.size() == 4);
  for (const auto& c : b.per_curve) CHECK(c.count == 0);
  CHECK(b.curve_names == std::vector<std::string>{"dp1", "dp23", "ds1", "ds2"});

  IntersectionReport c = classify_design(lame, q(37, 10), q(9, 10));
  CHECK_FALSE(c.feasible);
  CHECK(c.reason == Reason::center_unreachable);

  Problem square;
  square.workspace = RectSpec{0, 0, 4, 4};
  IntersectionReport a = classify_design(square, q(38, 10), q(33, 10));
  CHECK(a.feasible);
  for (const auto& sides : a.per_side)
    for (const auto& s : sides) CHECK(s.count == 0);
  CHECK_FALSE(classify_design(square, q(38, 10), q(9, 10)).feasible);

  // base points on the boundary merge the two dp23 circles
  Problem low;
  low.workspace = RectSpec{0, 0, 4, 4};
  IntersectionReport merged = classify_design(low, 2, 3);
  CHECK(merged.per_curve[1].degenerate);

  // the total is the sum, feasibility needs zero
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    IntersectionReport r = classify_design(lame, random_rational(rng, 200, 6000), random_rational(rng, 200, 6000));
    int sum = 0;
    for (const auto& cc : r.per_curve) sum += cc.count;
    CHECK(sum == r.total);
    if (r.feasible) CHECK(r.total == 0);
  }
}

TEST_CASE("reason precedence") {
  Problem lame;
  lame.workspace = LameSpec{0, 0, 4, 4, 4};
  // far away and tiny: unreachable wins over everything
  CHECK(classify_design(lame, 20, q(1, 2)).reason == Reason::center_unreachable);
  // reachable centre, loci cross the oval
  IntersectionReport r = classify_design(lame, 2, 2);
  CHECK(r.reason == Reason::boundary_intersected);
  CHECK(r.total > 0);
}

TEST_CASE("four-bar designs") {
  Problem problem;
  problem.robot = Robot::fourbar;
  problem.l = q(33, 10);
  problem.workspace = RectSpec{0, 0, 4, 4};
  CHECK(problem.axes() == std::array<std::string, 2>{"h", "alpha"});
  CHECK(classify_design(problem, q(425, 100), q(-15705, 10000)).feasible);
  CHECK(classify_design(problem, q(22, 10), q(15705, 10000)).feasible);
  IntersectionReport far = classify_design(problem, 30, 0);
  CHECK(far.reason == Reason::center_unreachable);

  // reports depend on h only; the workspace is always centred
  Problem moved = problem;
  moved.workspace = RectSpec{5, -7, 4, 4};
  for (const Rational& alpha : {q(-15705, 10000), q(1, 3), q(3)}) {
    IntersectionReport a = classify_design(problem, q(425, 100), alpha);
    IntersectionReport b = classify_design(moved, q(425, 100), alpha);
    CHECK(a.per_curve == b.per_curve);
    CHECK(a.reason == b.reason);
  }
}

TEST_CASE("problem validation") {
  Problem p;
  p.side = 2;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p.workspace = RectSpec{0, 0, 4, 4};
  CHECK_NOTHROW(p.validate());
  p.side = 5;
  CHECK_THROWS_AS(p.validate(), DomainError);
  Problem neg;
  CHECK_THROWS_AS(classify_design(neg, 1, -1), DomainError);
}
