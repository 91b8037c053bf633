#include "singreg/workspace.hpp"

#include <cmath>
#include <numbers>

namespace singreg::workspace {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};

void check_extent(const Rational& lx, const Rational& ly) {
  if (sgn(lx) <= 0 || sgn(ly) <= 0) throw DomainError("workspace edge lengths must be positive");
}

}  // namespace

void LameSpec::validate() const {
  check_extent(lx, ly);
  if (n < 2 || n % 2 != 0) throw DomainError("Lamé exponent must be an even integer >= 2");
}

void RectSpec::validate() const { check_extent(lx, ly); }

Point BoundarySegment::at(const Rational& t) const {
  return {start.x + t * (end.x - start.x), start.y + t * (end.y - start.y)};
}

std::string to_string(Location loc) {
  switch (loc) {
    case Location::inside: return "inside";
    case Location::boundary: return "boundary";
    case Location::outside: return "outside";
  }
  return "?";
}

Point center(const WorkspaceSpec& spec) {
  return std::visit([](const auto& s) { return Point{s.xc, s.yc}; }, spec);
}

WorkspaceSpec recentered(const WorkspaceSpec& spec, const Point& c) {
  return std::visit(
      [&](auto s) -> WorkspaceSpec {
        s.xc = c.x;
        s.yc = c.y;
        return s;
      },
      spec);
}

std::array<Rational, 4> bounding_box(const WorkspaceSpec& spec) {
  return std::visit(
      [](const auto& s) {
        Rational hx = s.lx / 2, hy = s.ly / 2;
        return std::array<Rational, 4>{s.xc - hx, s.xc + hx, s.yc - hy, s.yc + hy};
      },
      spec);
}

MultiPoly lame_implicit(const LameSpec& spec) {
  spec.validate();
  const unsigned n = static_cast<unsigned>(spec.n);
  MultiPoly u = (MultiPoly::variable("x") - spec.xc) * MultiPoly(Rational(2 / spec.lx));
  MultiPoly v = (MultiPoly::variable("y") - spec.yc) * MultiPoly(Rational(2 / spec.ly));
  return u.pow(n) + v.pow(n) - 1;
}

std::array<BoundarySegment, 4> rect_segments(const RectSpec& spec) {
  spec.validate();
  const Rational x0 = spec.xc - spec.lx / 2, x1 = spec.xc + spec.lx / 2;
  const Rational y0 = spec.yc - spec.ly / 2, y1 = spec.yc + spec.ly / 2;
  return {BoundarySegment{{x0, y0}, {x1, y0}}, BoundarySegment{{x0, y1}, {x1, y1}},
          BoundarySegment{{x0, y0}, {x0, y1}}, BoundarySegment{{x1, y0}, {x1, y1}}};
}

const std::array<std::string, 4>& rect_side_names() {
  static const std::array<std::string, 4> names = {"bottom", "top", "left", "right"};
  return names;
}

Location contains(const WorkspaceSpec& spec, const Point& p) {
  return std::visit(overloaded{[&](const LameSpec& s) {
                                 int sg = sgn(lame_implicit(s).eval({{"x", p.x}, {"y", p.y}}));
                                 return sg < 0 ? Location::inside : (sg == 0 ? Location::boundary : Location::outside);
                               },
                               [&](const RectSpec& s) {
                                 s.validate();
                                 auto b = bounding_box(s);
                                 if (p.x < b[0] || p.x > b[1] || p.y < b[2] || p.y > b[3]) return Location::outside;
                                 if (p.x == b[0] || p.x == b[1] || p.y == b[2] || p.y == b[3])
                                   return Location::boundary;
                                 return Location::inside;
                               }},
                    spec);
}

std::vector<std::pair<double, double>> boundary_sample(const WorkspaceSpec& spec, std::size_t count) {
  if (count < 4) throw DomainError("boundary_sample needs at least 4 points");
  std::vector<std::pair<double, double>> out;
  out.reserve(count);
  std::visit(overloaded{[&](const LameSpec& s) {
                          s.validate();
                          const double xc = to_double(s.xc), yc = to_double(s.yc);
                          const double ax = to_double(s.lx) / 2, ay = to_double(s.ly) / 2, p = 2.0 / s.n;
                          auto root = [&](double v) {
                            const double a = std::abs(v);
                            return std::copysign(s.n == 2 ? a : (s.n == 4 ? std::sqrt(a) : std::pow(a, p)), v);
                          };
                          for (std::size_t k = 0; k < count; ++k) {
                            const double th = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
                            double c = std::cos(th), sn = std::sin(th);
                            // exact values at the quarter turns
                            if (4 * k % count == 0) {
                              const std::size_t quarter = 4 * k / count;
                              c = quarter == 0 ? 1 : (quarter == 2 ? -1 : 0);
                              sn = quarter == 1 ? 1 : (quarter == 3 ? -1 : 0);
                            }
                            out.emplace_back(xc + ax * root(c), yc + ay * root(sn));
                          }
                        },
                        [&](const RectSpec& s) {
                          s.validate();
                          auto b = bounding_box(s);
                          const double x0 = to_double(b[0]), x1 = to_double(b[1]);
                          const double y0 = to_double(b[2]), y1 = to_double(b[3]);
                          // counter-clockwise from the lower-left corner
                          const double corners[5][2] = {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}, {x0, y0}};
                          for (std::size_t side = 0; side < 4; ++side) {
                            const std::size_t m = count / 4 + (side < count % 4 ? 1 : 0);
                            for (std::size_t k = 0; k < m; ++k) {
                              const double t = static_cast<double>(k) / static_cast<double>(m);
                              out.emplace_back(corners[side][0] + t * (corners[side + 1][0] - corners[side][0]),
                                               corners[side][1] + t * (corners[side + 1][1] - corners[side][1]));
                            }
                          }
                        }},
             spec);
  return out;
}

}  // namespace singreg::workspace
