#include "doctest.h"

#include <singreg/workspace.hpp>

#include <cmath>

using namespace singreg;
using namespace singreg::workspace;
using poly::MultiPoly;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

const MultiPoly X = MultiPoly::variable("x");
const MultiPoly Y = MultiPoly::variable("y");

}  // namespace

TEST_CASE("Lamé implicit form") {
  CHECK(lame_implicit({0, 0, 2, 2, 2}) == X.pow(2) + Y.pow(2) - 1);
  const Rational f = q(37, 10);
  LameSpec ws{0, f, 4, 4, 4};
  MultiPoly w = lame_implicit(ws);
  CHECK(w.eval({{"x", 2}, {"y", f}}) == 0);
  CHECK(w.eval({{"x", 0}, {"y", f}}) == -1);
  CHECK(contains(ws, {0, f}) == Location::inside);
  CHECK(contains(ws, {2, f}) == Location::boundary);
  CHECK(contains(ws, {3, f}) == Location::outside);
  CHECK_THROWS_AS(lame_implicit({0, 0, 4, 4, 3}), DomainError);
  CHECK_THROWS_AS(lame_implicit({0, 0, 0, 4, 4}), DomainError);

  SUBCASE("even in each centred coordinate") {
    MultiPoly centred = lame_implicit({q(1, 3), q(-2), 3, 5, 4}).substitute("x", X + q(1, 3)).substitute("y", Y - 2);
    CHECK(centred.substitute("x", -X) == centred);
    CHECK(centred.substitute("y", -Y) == centred);
  }
}

TEST_CASE("rectangle sides") {
  auto unit = rect_segments({0, 0, 1, 1});
  for (const auto& s : unit) {
    Rational dx = s.end.x - s.start.x, dy = s.end.y - s.start.y;
    CHECK(dx * dx + dy * dy == 1);
  }
  auto ws = rect_segments({0, q(38, 10), 4, 4});
  CHECK(ws[0].start.x == -2);
  CHECK(ws[0].start.y == q(18, 10));
  CHECK(ws[0].end.x == 2);
  CHECK(ws[0].end.y == q(18, 10));
  CHECK(ws[0].at(q(1, 2)).x == 0);

  auto same = [](const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; };
  auto shared = [&](const BoundarySegment& a, const BoundarySegment& b) {
    int n = 0;
    for (const auto& p : {a.start, a.end})
      for (const auto& r : {b.start, b.end}) n += same(p, r);
    return n;
  };
  // bottom-left, bottom-right, top-left, top-right adjacencies
  CHECK(shared(unit[0], unit[2]) == 1);
  CHECK(shared(unit[0], unit[3]) == 1);
  CHECK(shared(unit[1], unit[2]) == 1);
  CHECK(shared(unit[1], unit[3]) == 1);
  CHECK(shared(unit[0], unit[1]) == 0);
  CHECK(shared(unit[2], unit[3]) == 0);

  CHECK(contains(RectSpec{0, 0, 2, 2}, {1, 0}) == Location::boundary);
  CHECK(contains(RectSpec{0, 0, 2, 2}, {q(1, 2), 0}) == Location::inside);
  CHECK(contains(RectSpec{0, 0, 2, 2}, {2, 0}) == Location::outside);
}

TEST_CASE("boundary sampling") {
  auto rect = boundary_sample(RectSpec{0, 0, 2, 4}, 4);
  REQUIRE(rect.size() == 4);
  CHECK(rect[0] == std::pair{-1.0, -2.0});
  CHECK(rect[1] == std::pair{1.0, -2.0});
  CHECK(rect[2] == std::pair{1.0, 2.0});
  CHECK(rect[3] == std::pair{-1.0, 2.0});

  auto circle = boundary_sample(LameSpec{0, 0, 2, 2, 2}, 4);
  REQUIRE(circle.size() == 4);
  CHECK(circle[0] == std::pair{1.0, 0.0});
  CHECK(circle[1] == std::pair{0.0, 1.0});
  CHECK(circle[2] == std::pair{-1.0, 0.0});
  CHECK(circle[3] == std::pair{0.0, -1.0});

  LameSpec ws{0, q(37, 10), 4, 4, 4};
  MultiPoly w = lame_implicit(ws);
  auto pts = boundary_sample(ws, 10000);
  double worst = 0, deviation = 0;
  for (auto [x, y] : pts) {
    worst = std::max(worst, std::abs(w.eval_double({x, y})));
    // inside the closed 4x4 square and closer than lx/2 to its boundary
    CHECK(std::abs(x) <= 2 + 1e-12);
    CHECK(std::abs(y - 3.7) <= 2 + 1e-12);
    deviation = std::max(deviation, std::min(2 - std::abs(x), 2 - std::abs(y - 3.7)));
  }
  CHECK(worst < 1e-9);
  CHECK(deviation < 2);
  CHECK_THROWS_AS(boundary_sample(ws, 3), DomainError);
}
