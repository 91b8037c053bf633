#include "singreg/intersect.hpp"

#include "detail/intpoly.hpp"
#include "detail/sturm.hpp"

#include <cmath>
#include <optional>
#include <variant>

namespace singreg::intersect {

namespace {

using poly::detail::IntPoly;
using poly::detail::SturmSequence;

const Rational& near_distance() {
  static const Rational v(1, 1000000);
  return v;
}

const Rational& near_width() {
  static const Rational v(1, 10000000);
  return v;
}

bool has_real_root(const IntPoly& p) {
  if (p.degree() < 1) return false;
  return SturmSequence(poly::detail::squarefree(p)).count_all() > 0;
}

Rational cauchy_bound(const IntPoly& p) {
  Integer best = 0;
  const Integer lc = abs(p.lc());
  for (int i = 0; i < p.degree(); ++i) {
    Integer a = abs(p[static_cast<std::size_t>(i)]);
    if (a > best) best = a;
  }
  Rational b(best, lc);
  b.canonicalize();
  return b + 1;
}

// Two isolated roots closer than near_distance().
bool roots_close(const SturmSequence& s, const Rational& lo, const Rational& hi) {
  auto iso = s.isolate(lo, hi, near_width());
  for (std::size_t i = 1; i < iso.size(); ++i) {
    if (iso[i].lo - iso[i - 1].hi < near_distance()) return true;
  }
  return false;
}

// Counts distinct real roots of p in [lo, hi] with tangency and closeness flags.
CurveCount count_interval(const IntPoly& p, const Rational& lo, const Rational& hi) {
  CurveCount out;
  IntPoly sf = poly::detail::squarefree(p);
  if (sf.degree() < 1) return out;
  SturmSequence s(sf);
  out.count = s.count_closed(lo, hi);
  if (out.count == 0) return out;
  if (sf.degree() < p.degree()) {
    IntPoly rep = poly::detail::gcd(p, p.derivative());
    if (rep.degree() >= 1 && SturmSequence(poly::detail::squarefree(rep)).count_closed(lo, hi) > 0) {
      out.tangency = true;
    }
  }
  if (out.count >= 2) out.near_degenerate = roots_close(s, lo, hi);
  return out;
}

CurveCount shared_component() {
  CurveCount c;
  c.count = 1;  // at least one point; the true set is infinite
  c.degenerate = true;
  return c;
}

// Projection of curve ∩ lamé onto `keep`. Returns nothing when the
// projection cannot certify that each real root carries exactly one point.
std::optional<CurveCount> projected_count(const MultiPoly& curve, const MultiPoly& lame, const std::string& elim,
                                          const std::string& keep) {
  if (curve.degree_in(elim) < 1) return std::nullopt;
  auto [P, sp] = poly::detail::to_bipoly(curve, keep, elim);
  auto [Q, sq] = poly::detail::to_bipoly(lame, keep, elim);
  auto chain = P.size() >= Q.size() ? poly::detail::subresultant_chain<IntPoly>(P, Q)
                                    : poly::detail::subresultant_chain<IntPoly>(Q, P);
  IntPoly r = chain.resultant();
  if (r.is_zero()) return shared_component();
  if (r.degree() < 1) return CurveCount{};
  IntPoly psc1 = chain.psc_of_degree(1);
  if (psc1.is_zero()) return std::nullopt;
  IntPoly rs = poly::detail::squarefree(r);
  IntPoly h = poly::detail::gcd(rs, psc1);
  if (has_real_root(h)) return std::nullopt;
  Rational b = cauchy_bound(rs);
  CurveCount out = count_interval(r, -b, b);
  return out;
}

const Rational kShears[] = {Rational(1, 3), Rational(-2, 5), Rational(3, 7), Rational(-4, 9), Rational(5, 11)};

// Sign-change counter in floating point, shared by the oracles.
class FloatPoly {
 public:
  explicit FloatPoly(const MultiPoly& p) {
    const auto& vars = p.variables();
    int xi = -1, yi = -1;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == "x") xi = static_cast<int>(i);
      else if (vars[i] == "y") yi = static_cast<int>(i);
      else throw DomainError("oracle: curve must be a polynomial in x and y");
    }
    for (const auto& [ex, c] : p.terms()) {
      Term t{to_double(c), xi >= 0 ? ex[static_cast<std::size_t>(xi)] : 0U, yi >= 0 ? ex[static_cast<std::size_t>(yi)] : 0U};
      max_deg_ = std::max({max_deg_, t.ex, t.ey});
      terms_.push_back(t);
    }
    px_.resize(max_deg_ + 1);
    py_.resize(max_deg_ + 1);
  }

  double operator()(double x, double y) const {
    px_[0] = py_[0] = 1;
    for (unsigned k = 1; k <= max_deg_; ++k) {
      px_[k] = px_[k - 1] * x;
      py_[k] = py_[k - 1] * y;
    }
    double acc = 0;
    for (const auto& t : terms_) acc += t.c * px_[t.ex] * py_[t.ey];
    return acc;
  }

 private:
  struct Term {
    double c;
    unsigned ex, ey;
  };
  std::vector<Term> terms_;
  unsigned max_deg_ = 0;
  mutable std::vector<double> px_, py_;
};

int sign_changes(const std::vector<double>& v, bool closed) {
  int n = 0;
  const std::size_t m = v.size();
  for (std::size_t i = 0; i + 1 < m; ++i) n += (v[i] < 0) != (v[i + 1] < 0);
  if (closed && m > 1) n += (v[m - 1] < 0) != (v[0] < 0);
  return n;
}

// p(x, y) at a fixed rational y, scaled to integer coefficients.
IntPoly at_y(const poly::detail::BiPoly& p, const Rational& y) {
  const int m = poly::detail::degree(p);
  IntPoly acc;
  if (m < 0) return acc;
  std::vector<Integer> den_pow(static_cast<std::size_t>(m) + 1, Integer(1));
  for (int k = 1; k <= m; ++k) den_pow[static_cast<std::size_t>(k)] = den_pow[static_cast<std::size_t>(k - 1)] * y.get_den();
  Integer num_pow = 1;
  for (int k = 0; k <= m; ++k) {
    acc = acc + (num_pow * den_pow[static_cast<std::size_t>(m - k)]) * p[static_cast<std::size_t>(k)];
    num_pow *= y.get_num();
  }
  return acc;
}

bool point_on_segment(const workspace::Point& p, const BoundarySegment& s) {
  const Rational dx = s.end.x - s.start.x, dy = s.end.y - s.start.y;
  const Rational cross = (p.x - s.start.x) * dy - (p.y - s.start.y) * dx;
  if (cross != 0) return false;
  const Rational dot = (p.x - s.start.x) * dx + (p.y - s.start.y) * dy;
  return sgn(dot) >= 0 && dot <= dx * dx + dy * dy;
}

bool point_on_boundary(const workspace::Point& p, const WorkspaceSpec& spec, int side) {
  if (side == 0) return workspace::contains(spec, p) == workspace::Location::boundary;
  const auto segs = workspace::rect_segments(std::get<RectSpec>(spec));
  return point_on_segment(p, segs[static_cast<std::size_t>(side - 1)]);
}

}  // namespace

CurveCount count_on_segment(const MultiPoly& curve, const BoundarySegment& seg) {
  if (curve.is_zero()) throw DomainError("count_on_segment: zero curve");
  poly::UniPoly u = poly::detail::restrict_to_line(curve, "x", "y", seg.start.x, seg.end.x - seg.start.x, seg.start.y,
                                                   seg.end.y - seg.start.y);
  if (u.is_zero()) return shared_component();
  if (u.degree() < 1) return {};
  return count_interval(poly::detail::to_int(u), Rational(0), Rational(1));
}

CurveCount count_on_lame(const MultiPoly& curve, const LameSpec& spec) {
  if (curve.is_zero()) throw DomainError("count_on_lame: zero curve");
  if (curve.total_degree() == 0) return {};
  const MultiPoly lame = workspace::lame_implicit(spec);
  if (auto c = projected_count(curve, lame, "y", "x")) return *c;
  if (auto c = projected_count(curve, lame, "x", "y")) return *c;
  const MultiPoly X = MultiPoly::variable("x"), Y = MultiPoly::variable("y");
  for (const Rational& k : kShears) {
    const MultiPoly sheared_x = X + MultiPoly(k) * Y;
    if (auto c = projected_count(curve.substitute("x", sheared_x), lame.substitute("x", sheared_x), "y", "x")) {
      return *c;
    }
  }
  CurveCount fallback;
  fallback.degenerate = true;
  return fallback;
}

RectCount count_on_rect(const MultiPoly& curve, const RectSpec& spec) {
  RectCount out;
  const auto segs = workspace::rect_segments(spec);
  for (std::size_t i = 0; i < 4; ++i) {
    out.sides[i] = count_on_segment(curve, segs[i]);
    out.total.count += out.sides[i].count;
    out.total.degenerate |= out.sides[i].degenerate;
    out.total.tangency |= out.sides[i].tangency;
    out.total.near_degenerate |= out.sides[i].near_degenerate;
  }
  // corners are shared by two sides
  auto b = workspace::bounding_box(spec);
  for (const auto& x : {b[0], b[1]}) {
    for (const auto& y : {b[2], b[3]}) {
      if (curve.eval({{"x", x}, {"y", y}}) == 0) --out.total.count;
    }
  }
  return out;
}

CurveCount count_on_boundary(const MultiPoly& curve, const WorkspaceSpec& spec, int side) {
  if (const auto* lame = std::get_if<LameSpec>(&spec)) {
    if (side != 0) throw DomainError("a Lamé workspace has no sides");
    return count_on_lame(curve, *lame);
  }
  const auto& rect = std::get<RectSpec>(spec);
  if (side < 0 || side > 4) throw DomainError("rectangle side must be 0..4");
  if (side == 0) return count_on_rect(curve, rect).total;
  return count_on_segment(curve, workspace::rect_segments(rect)[static_cast<std::size_t>(side - 1)]);
}

int oracle_count(const MultiPoly& curve, const BoundarySegment& seg, std::size_t samples) {
  if (samples < 2) throw DomainError("oracle needs at least 2 samples");
  FloatPoly f(curve);
  const double x0 = to_double(seg.start.x), y0 = to_double(seg.start.y);
  const double dx = to_double(seg.end.x) - x0, dy = to_double(seg.end.y) - y0;
  std::vector<double> v(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(samples - 1);
    v[k] = f(x0 + t * dx, y0 + t * dy);
  }
  return sign_changes(v, false);
}

int oracle_count(const MultiPoly& curve, const WorkspaceSpec& spec, std::size_t samples, int side) {
  return oracle_counts({curve}, spec, samples, side).front();
}

std::vector<int> oracle_counts(const std::vector<MultiPoly>& curves, const WorkspaceSpec& spec, std::size_t samples,
                               int side) {
  std::vector<int> out;
  if (side != 0) {
    const auto seg = workspace::rect_segments(std::get<RectSpec>(spec)).at(static_cast<std::size_t>(side - 1));
    for (const auto& c : curves) out.push_back(oracle_count(c, seg, samples));
    return out;
  }
  const auto pts = workspace::boundary_sample(spec, samples);
  std::vector<double> v(pts.size());
  for (const auto& c : curves) {
    FloatPoly f(c);
    for (std::size_t k = 0; k < pts.size(); ++k) v[k] = f(pts[k].first, pts[k].second);
    out.push_back(sign_changes(v, true));
  }
  return out;
}

bool curve_inside_check(const MultiPoly& curve, const WorkspaceSpec& spec) {
  return curve_inside_check(curve, spec, count_on_boundary(curve, spec).count);
}

bool curve_inside_check(const MultiPoly& curve, const WorkspaceSpec& spec, int boundary_count) {
  if (boundary_count != 0) return false;
  constexpr int kLines = 64;
  const auto box = workspace::bounding_box(spec);
  const Rational height = box[3] - box[2];
  const auto* lame = std::get_if<LameSpec>(&spec);
  const auto curve_xy = poly::detail::to_bipoly(curve, "x", "y").first;
  const auto lame_xy = lame ? poly::detail::to_bipoly(workspace::lame_implicit(*lame), "x", "y").first
                            : poly::detail::BiPoly();
  for (int k = 0; k < kLines; ++k) {
    Rational y = box[2] + height * Rational(2 * k + 1, 2 * kLines);
    y.canonicalize();
    IntPoly u = at_y(curve_xy, y);
    if (u.is_zero()) return true;
    if (u.degree() < 1) continue;
    IntPoly p = poly::detail::squarefree(u);
    SturmSequence s(p);
    if (!lame) {
      if (s.count_open(box[0], box[1]) > 0) return true;
      continue;
    }
    IntPoly w = at_y(lame_xy, y);
    for (auto iv : s.isolate(box[0], box[1], Rational(1, 1 << 10))) {
      // narrow until the Lamé sign is constant on the interval
      for (int guard = 0; guard < 200; ++guard) {
        int a = w.sign_at(iv.lo), b = w.sign_at(iv.hi);
        if (a == b && a != 0) break;
        if (iv.exact()) break;
        iv = s.refine(iv, iv.width() / 4);
      }
      if (w.sign_at(iv.lo) < 0 && w.sign_at(iv.hi) < 0) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------- designs

std::string to_string(Robot robot) { return robot == Robot::fivebar ? "fivebar" : "fourbar"; }

std::string to_string(Reason reason) {
  switch (reason) {
    case Reason::feasible: return "zero-counts-and-reachable";
    case Reason::boundary_intersected: return "boundary-intersected";
    case Reason::center_unreachable: return "center-unreachable";
    case Reason::center_singular: return "center-singular";
    case Reason::curve_inside_workspace: return "curve-inside-workspace";
  }
  return "?";
}

std::array<std::string, 2> Problem::axes() const {
  return robot == Robot::fivebar ? std::array<std::string, 2>{"f", "l"} : std::array<std::string, 2>{"h", "alpha"};
}

std::vector<std::string> Problem::curve_names() const {
  if (robot == Robot::fivebar) return {"dp1", "dp23", "ds1", "ds2"};
  return {"ds3", "dp4", "dp5"};
}

void Problem::validate() const {
  if (robot == Robot::fivebar && sgn(e) <= 0) throw DomainError("five-bar: e must be positive");
  if (robot == Robot::fourbar && (sgn(l) <= 0 || sgn(d) <= 0)) {
    throw DomainError("four-bar: l and d must be positive");
  }
  std::visit([](const auto& s) { s.validate(); }, workspace);
  if (side != 0) {
    if (!std::holds_alternative<RectSpec>(workspace)) throw DomainError("sides apply to rectangular workspaces only");
    if (side < 1 || side > 4) throw DomainError("rectangle side must be 1..4");
  }
}

bool IntersectionReport::flagged() const {
  for (const auto& c : per_curve)
    if (c.flagged()) return true;
  return false;
}

DesignGeometry design_geometry(const Problem& problem, const Rational& a, const Rational& b) {
  problem.validate();
  DesignGeometry g;
  if (problem.robot == Robot::fivebar) {
    if (sgn(b) <= 0) throw DomainError("five-bar: l must be positive");
    g.curves = models::fivebar_singularity_curves({problem.e, b});
    g.workspace = workspace::recentered(problem.workspace, {Rational(0), a});
  } else {
    g.curves = models::fourbar_singularity_curves({problem.l, problem.d, a},
                                                  models::TrigApprox::lower(to_double(b)));
    g.workspace = workspace::recentered(problem.workspace, {Rational(0), Rational(0)});
  }
  return g;
}

IntersectionReport classify_design(const Problem& problem, const Rational& a, const Rational& b) {
  const DesignGeometry geo = design_geometry(problem, a, b);
  const bool rect = std::holds_alternative<RectSpec>(geo.workspace);

  IntersectionReport rep;
  rep.axes = problem.axes();
  rep.point = {a, b};
  rep.curve_names = problem.curve_names();

  // counts on the selected boundary, plus each curve's count on the whole boundary
  std::vector<int> whole;
  auto count_all = [&](const std::vector<models::ImplicitCurve>& curves, bool keep) {
    std::vector<CurveCount> out;
    for (const auto& c : curves) {
      if (rect) {
        RectCount rc = count_on_rect(c.poly, std::get<RectSpec>(geo.workspace));
        if (keep) {
          if (problem.side == 0) rep.per_side.push_back(rc.sides);
          whole.push_back(rc.total.count);
        }
        out.push_back(problem.side == 0 ? rc.total : rc.sides[static_cast<std::size_t>(problem.side - 1)]);
      } else {
        out.push_back(count_on_boundary(c.poly, geo.workspace, problem.side));
        if (keep) whole.push_back(out.back().count);
      }
    }
    return out;
  };
  rep.per_curve = count_all(geo.curves, true);

  workspace::Point c = workspace::center(geo.workspace);
  bool reachable;
  if (problem.robot == Robot::fivebar) {
    const models::FiveBarParams params{problem.e, b};
    reachable = models::fivebar_reachable(c.x, c.y, params);
    // dp23 merges two circles that meet at the base points
    for (const Rational& bx : {Rational(-problem.e / 2), Rational(problem.e / 2)}) {
      if (point_on_boundary({bx, Rational(0)}, geo.workspace, problem.side)) rep.per_curve[1].degenerate = true;
    }
  } else {
    const models::FourBarParams params{problem.l, problem.d, a};
    const double alpha = to_double(b);
    reachable = models::fourbar_assemblable(c.x, c.y, params, models::TrigApprox::lower(alpha));
    // stability of the counts under the other rounding of cos and sin
    auto upper = models::fourbar_singularity_curves(params, models::TrigApprox::upper(alpha));
    auto recount = count_all(upper, false);
    for (std::size_t i = 0; i < recount.size(); ++i) {
      if (recount[i].count != rep.per_curve[i].count) rep.per_curve[i].near_degenerate = true;
    }
  }

  for (const auto& cc : rep.per_curve) rep.total += cc.count;
  bool singular = false;
  for (const auto& curve : geo.curves) singular |= curve.poly.eval({{"x", c.x}, {"y", c.y}}) == 0;

  if (!reachable) {
    rep.reason = Reason::center_unreachable;
  } else if (rep.total > 0) {
    rep.reason = Reason::boundary_intersected;
  } else if (singular) {
    rep.reason = Reason::center_singular;
  } else {
    rep.reason = Reason::feasible;
    // a single side may be clear while the curve crosses another side
    for (std::size_t i = 0; i < geo.curves.size(); ++i) {
      if (curve_inside_check(geo.curves[i].poly, geo.workspace, whole[i])) {
        rep.reason = Reason::curve_inside_workspace;
        break;
      }
    }
  }
  rep.feasible = rep.reason == Reason::feasible;
  return rep;
}

}  // namespace singreg::intersect
