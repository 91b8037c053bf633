// One PASS/FAIL line per acceptance criterion. Optional arguments select
// criteria by number; criterion 11 reuses the criterion 4 sweep.

#include "singreg_cli/output.hpp"
#include "support/curve_points.hpp"

#include <singreg/models.hpp>
#include <singreg/regions.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace singreg;
using intersect::Problem;
using poly::MultiPoly;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string counts_text(const intersect::IntersectionReport& rep) {
  std::ostringstream o;
  for (std::size_t k = 0; k < rep.per_curve.size(); ++k) {
    o << (k ? " " : "") << rep.curve_names[k] << '=' << rep.per_curve[k].count;
    if (rep.per_curve[k].flagged()) o << '*';
  }
  return o.str();
}

Problem lame_fivebar() {
  Problem p;
  p.workspace = workspace::LameSpec{0, 0, 4, 4, 4};
  return p;
}

Problem square_fivebar(int side = 0) {
  Problem p;
  p.workspace = workspace::RectSpec{0, 0, 4, 4};
  p.side = side;
  return p;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const regions::SweepOptions kFine{64, 3, 1};

std::optional<regions::RegionMap> criterion4_map;

regions::RegionMap lame_sweep(unsigned jobs) {
  const Problem p = lame_fivebar();
  regions::SweepOptions opt = kFine;
  opt.jobs = jobs;
  return regions::sweep(p, regions::ParamWindow::defaults(p), opt);
}

const regions::RegionMap& criterion4_sweep() {
  if (!criterion4_map) criterion4_map = lame_sweep(1);
  return *criterion4_map;
}

Outcome c1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = intersect::classify_design(lame_fivebar(), q(37, 10), 3);
  const double s = seconds_since(t0);
  bool zero = true;
  for (const auto& c : rep.per_curve) zero = zero && c.count == 0;
  return {zero && rep.feasible && rep.per_curve.size() == 4 && s <= 5,
          counts_text(rep) + " feasible=" + (rep.feasible ? "yes" : "no") + " in " + fmt("%.3f", s) + " s"};
}

Outcome c2() {
  const auto rep = intersect::classify_design(lame_fivebar(), q(37, 10), q(9, 10));
  return {!rep.feasible && rep.reason == intersect::Reason::center_unreachable,
          "reason=" + intersect::to_string(rep.reason) + " (" + counts_text(rep) + ")"};
}

Outcome c3() {
  const auto ok = intersect::classify_design(square_fivebar(), q(19, 5), q(33, 10));
  const auto bad = intersect::classify_design(square_fivebar(), q(19, 5), q(9, 10));
  bool zero = ok.per_side.size() == 4;
  for (const auto& side : ok.per_side)
    for (const auto& c : side) zero = zero && c.count == 0;
  return {zero && ok.feasible && !bad.feasible,
          "l=3.3: all per-side counts 0, feasible=" + std::string(ok.feasible ? "yes" : "no") +
              "; l=0.9: reason=" + intersect::to_string(bad.reason)};
}

Outcome c4() {
  const auto t0 = std::chrono::steady_clock::now();
  const regions::RegionMap& m = criterion4_sweep();
  const double s = seconds_since(t0);
  const auto zero = m.zero_count_components();
  const auto feasible = m.feasible_components();
  const bool contains = feasible.size() == 1 && m.component_at(q(37, 10), 3).id == feasible.front()->id;
  // the same component appears in regions.json
  bool listed = false;
  const Problem p = lame_fivebar();
  const auto& target = m.cell_at(q(37, 10), 3);
  const cli::json doc = cli::regions_json(p, m);
  for (const auto& comp : doc["components"]) {
    for (const auto& cell : comp["cells"]) {
      listed = listed || (cell[0] == target.depth && cell[1] == target.i && cell[2] == target.j);
    }
  }
  std::ostringstream at;
  at << "cell (" << target.depth << ", " << target.i << ", " << target.j << ") component " << target.component
     << (target.feasible ? " feasible" : " infeasible") << ", counts";
  for (int c : target.counts) at << ' ' << c;
  return {zero.size() >= 3 && feasible.size() == 1 && contains && listed,
          std::to_string(zero.size()) + " zero-count components, " + std::to_string(feasible.size()) +
              " feasible, contains (3.7, 3): " + (contains && listed ? "yes" : "no") + " [" + at.str() + "]; " +
              std::to_string(m.cells.size()) + " leaves in " + fmt("%.0f", s) + " s"};
}

Outcome c5() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Problem> sides;
  for (int k = 1; k <= 4; ++k) sides.push_back(square_fivebar(k));
  const auto maps = regions::sweep_family(sides, regions::ParamWindow::defaults(sides[0]), kFine);
  const regions::RegionMap all = regions::intersect_regions(maps);
  const auto feasible = all.feasible_components();
  const bool contains = feasible.size() == 1 && all.component_at(q(19, 5), q(33, 10)).id == feasible.front()->id;
  return {contains, std::to_string(feasible.size()) + " feasible component(s) after intersecting 4 sides, contains "
                        "(3.8, 3.3): " + (contains ? "yes" : "no") + " in " + fmt("%.0f", seconds_since(t0)) + " s"};
}

Outcome c6() {
  const auto t0 = std::chrono::steady_clock::now();
  Problem four;
  four.robot = intersect::Robot::fourbar;
  const auto m = regions::fourbar_sweep(3, 1, regions::ParamWindow::defaults(four), workspace::LameSpec{0, 0, 4, 4, 4},
                                        kFine);
  const auto n = m.feasible_components().size();
  return {n >= 2, std::to_string(n) + " feasible components in " + fmt("%.0f", seconds_since(t0)) + " s"};
}

Outcome c7() {
  Problem four;
  four.robot = intersect::Robot::fourbar;
  four.l = q(33, 10);
  four.workspace = workspace::RectSpec{0, 0, 4, 4};
  const Rational mid = q(-15705, 10000);
  const auto a = intersect::classify_design(four, q(425, 100), mid);
  const auto b = intersect::classify_design(four, q(22, 10), -mid);

  const auto m = regions::fourbar_sweep(four.l, four.d, regions::ParamWindow::defaults(four), four.workspace, kFine);
  const bool cells_ok = m.cell_at(q(425, 100), mid).feasible && m.cell_at(q(22, 10), -mid).feasible;
  const double lo = -1.717, hi = -1.424;
  const double slack = 2 * to_double(m.cell_width(1, m.max_depth));
  std::string found = "no interval around alpha = -1.5705";
  bool hull_ok = false;
  for (const auto& r : regions::alpha_range_at(m, q(425, 100))) {
    const double olo = to_double(r.outer_lo), ohi = to_double(r.outer_hi);
    if (to_double(r.inner_lo) > to_double(mid) || to_double(r.inner_hi) < to_double(mid)) continue;
    hull_ok = olo <= lo && ohi >= hi && lo - olo <= slack && ohi - hi <= slack;
    found = "outer [" + fmt("%.4f", olo) + ", " + fmt("%.4f", ohi) + "], inner [" + fmt("%.4f", to_double(r.inner_lo)) +
            ", " + fmt("%.4f", to_double(r.inner_hi)) + "], slack limit " + fmt("%.4f", slack);
  }
  return {a.feasible && b.feasible && cells_ok && hull_ok,
          std::string("h=4.25 feasible=") + (a.feasible ? "yes" : "no") + ", h=2.2 feasible=" +
              (b.feasible ? "yes" : "no") + "; " + found};
}

Outcome c8() {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> milli(200, 6000);
  const Problem p = lame_fivebar();
  int flagged = 0, mismatches = 0, curves = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Rational f = q(milli(rng), 1000), l = q(milli(rng), 1000);
    const auto geo = intersect::design_geometry(p, f, l);
    const auto rep = intersect::classify_design(p, f, l);
    std::vector<MultiPoly> polys;
    for (const auto& c : geo.curves) polys.push_back(c.poly);
    const auto oracle = intersect::oracle_counts(polys, geo.workspace, 1000000);
    for (std::size_t k = 0; k < polys.size(); ++k) {
      ++curves;
      if (rep.per_curve[k].flagged()) {
        ++flagged;
      } else if (rep.per_curve[k].count != oracle[k]) {
        ++mismatches;
      }
    }
  }
  return {mismatches == 0 && flagged * 20 <= curves,
          std::to_string(curves) + " curve counts, " + std::to_string(mismatches) + " unflagged mismatches, " +
              std::to_string(flagged) + " flagged"};
}

Outcome c9() {
  using namespace models;
  const FiveBarParams params{1, 3};
  const auto curves = fivebar_singularity_curves(params);
  const WorkingMode modes[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  double worst = 0;
  std::string detail;
  bool ok = true;
  for (const std::string name : {"dp1", "ds1", "ds2"}) {
    const MultiPoly* poly = nullptr;
    for (const auto& c : curves)
      if (c.name == name) poly = &c.poly;
    const bool parallel = name == "dp1";
    const double span = parallel ? 1.6 : 5.9;
    const auto pts = support::scanline_points(*poly, -span, span, parallel ? 80 : 240, Rational(-8), Rational(8));
    int used = 0;
    for (const auto& pt : pts) {
      if (used == 100) break;
      if (!fivebar_reachable(pt.x, pt.y, params)) continue;
      double best = 1e300;
      for (const auto& m : modes) {
        const JacobianDets d = fivebar_jacobian_dets({pt.xd(), pt.yd()}, fivebar_ik(pt.x, pt.y, params, m), params);
        best = std::min(best, std::abs(parallel ? d.detA : d.detB));
      }
      worst = std::max(worst, best);
      ++used;
    }
    ok = ok && used == 100;
    detail += name + ":" + std::to_string(used) + " ";
  }
  const JacobianDets centre = fivebar_jacobian_dets({0, 3.7}, fivebar_ik(0, q(37, 10), params), params);
  ok = ok && worst < 1e-8 && std::abs(centre.detA) > 1e-3 && std::abs(centre.detB) > 1e-3;
  return {ok, detail + "points, max |det| on loci " + fmt("%.2e", worst) + "; at centre |detA|=" +
                  fmt("%.3f", std::abs(centre.detA)) + " |detB|=" + fmt("%.3f", std::abs(centre.detB))};
}

Outcome c10() {
  using namespace models;
  std::mt19937_64 rng(10);
  std::uniform_int_distribution<long> milli(100, 9000);
  const MultiPoly Y = MultiPoly::variable("y");
  int identical = 0;
  for (int k = 0; k < 20; ++k) {
    const Rational h = q(milli(rng), 1000), f1 = q(milli(rng), 1000), f2 = q(milli(rng), 1000);
    const TrigApprox t = TrigApprox::lower(-3 + 0.3 * k);
    const auto centred = fourbar_singularity_curves({q(33, 10), 1, h}, t);
    const auto w1 = fourbar_singularity_curves_world(q(33, 10), 1, f1 + h, t);
    const auto w2 = fourbar_singularity_curves_world(q(33, 10), 1, f2 + h, t);
    bool same = centred.size() == w1.size() && w1.size() == w2.size();
    for (std::size_t i = 0; same && i < centred.size(); ++i) {
      same = w1[i].poly.substitute("y", Y + MultiPoly(f1)) == centred[i].poly &&
             w2[i].poly.substitute("y", Y + MultiPoly(f2)) == centred[i].poly;
    }
    identical += same;
  }
  return {identical == 20, std::to_string(identical) + "/20 (g, f) pairs give identical centred loci"};
}

Outcome c11() {
  const Problem p = lame_fivebar();
  const std::string one = cli::dump(cli::regions_json(p, criterion4_sweep()));
  const auto t0 = std::chrono::steady_clock::now();
  const std::string eight = cli::dump(cli::regions_json(p, lame_sweep(8)));
  return {one == eight, std::to_string(one.size()) + " bytes with 1 worker, " + std::to_string(eight.size()) +
                            " bytes with 8, identical: " + (one == eight ? "yes" : "no") + " (" +
                            fmt("%.0f", seconds_since(t0)) + " s)"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"five-bar design f=3.7 l=3 on the Lame workspace is feasible with zero counts", c1},
      {"five-bar design f=3.7 l=0.9 is infeasible, centre unreachable", c2},
      {"square workspace: l=3.3 feasible with zero per-side counts, l=0.9 infeasible", c3},
      {"Lame sweep: >= 3 zero-count regions, one feasible, containing (3.7, 3)", c4},
      {"square sweep: the intersected sides leave one feasible region containing (3.8, 3.3)", c5},
      {"four-bar Lame sweep (l=3, d=1) has >= 2 feasible regions", c6},
      {"four-bar square designs feasible and alpha range at h=4.25", c7},
      {"certified counts agree with the sampling oracle on 200 random designs", c8},
      {"Jacobian determinants vanish on the loci and not at the centre", c9},
      {"four-bar loci depend on h only", c10},
      {"sweeps with 1 and 8 workers give byte-identical regions.json", c11},
  };
  std::set<int> selected;
  for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int number = static_cast<int>(k) + 1;
    if (!selected.empty() && !selected.count(number)) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2d  %s: %s\n", o.pass ? "PASS" : "FAIL", number, criteria[k].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
