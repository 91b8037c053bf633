#include "singreg_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace singreg::cli {

namespace {

class CurveEval {
 public:
  explicit CurveEval(const poly::MultiPoly& p) {
    const auto& vars = p.variables();
    for (const auto& [ex, c] : p.terms()) {
      Term t{to_double(c), 0, 0};
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == "x") t.ex = ex[i];
        else if (vars[i] == "y") t.ey = ex[i];
      }
      terms_.push_back(t);
    }
  }
  double operator()(double x, double y) const {
    double acc = 0;
    for (const auto& t : terms_) acc += t.c * std::pow(x, t.ex) * std::pow(y, t.ey);
    return acc;
  }

 private:
  struct Term {
    double c;
    unsigned ex, ey;
  };
  std::vector<Term> terms_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string esc(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

const char* kLocusColours[] = {"#d62728", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b"};

}  // namespace

std::vector<Segment> marching_squares(const poly::MultiPoly& curve, const std::array<double, 4>& view, double step) {
  if (!(step > 0)) throw DomainError("marching squares step must be positive");
  CurveEval f(curve);
  const auto nx = static_cast<std::size_t>(std::ceil((view[1] - view[0]) / step));
  const auto ny = static_cast<std::size_t>(std::ceil((view[3] - view[2]) / step));
  std::vector<double> v((nx + 1) * (ny + 1));
  auto X = [&](std::size_t i) { return view[0] + static_cast<double>(i) * step; };
  auto Y = [&](std::size_t j) { return view[2] + static_cast<double>(j) * step; };
  for (std::size_t j = 0; j <= ny; ++j)
    for (std::size_t i = 0; i <= nx; ++i) v[j * (nx + 1) + i] = f(X(i), Y(j));

  std::vector<Segment> out;
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const double v00 = v[j * (nx + 1) + i], v10 = v[j * (nx + 1) + i + 1];
      const double v11 = v[(j + 1) * (nx + 1) + i + 1], v01 = v[(j + 1) * (nx + 1) + i];
      const int idx = (v00 > 0) | (v10 > 0) << 1 | (v11 > 0) << 2 | (v01 > 0) << 3;
      if (idx == 0 || idx == 15) continue;
      const double x0 = X(i), y0 = Y(j);
      auto lerp = [](double a, double b) { return a / (a - b); };
      // edges: 0 bottom, 1 right, 2 top, 3 left
      auto edge = [&](int e) -> std::pair<double, double> {
        switch (e) {
          case 0: return {x0 + step * lerp(v00, v10), y0};
          case 1: return {x0 + step, y0 + step * lerp(v10, v11)};
          case 2: return {x0 + step * lerp(v01, v11), y0 + step};
          default: return {x0, y0 + step * lerp(v00, v01)};
        }
      };
      auto add = [&](int a, int b) {
        auto p = edge(a), q = edge(b);
        out.push_back({p.first, p.second, q.first, q.second});
      };
      const bool centre_pos = (v00 + v10 + v11 + v01) > 0;
      switch (idx) {
        case 1: case 14: add(3, 0); break;
        case 2: case 13: add(0, 1); break;
        case 3: case 12: add(3, 1); break;
        case 4: case 11: add(1, 2); break;
        case 6: case 9: add(0, 2); break;
        case 7: case 8: add(3, 2); break;
        case 5:
          if (centre_pos) { add(0, 1); add(2, 3); } else { add(3, 0); add(1, 2); }
          break;
        case 10:
          if (centre_pos) { add(3, 0); add(1, 2); } else { add(0, 1); add(2, 3); }
          break;
        default: break;
      }
    }
  }
  return out;
}

DesignScene design_scene(const intersect::Problem& problem, const Rational& a, const Rational& b, double step) {
  const intersect::DesignGeometry geo = intersect::design_geometry(problem, a, b);
  const auto names = problem.axes();
  DesignScene s;
  s.title = intersect::to_string(problem.robot) + "  " + names[0] + "=" + to_string(a) + "  " + names[1] + "=" +
            to_string(b);
  s.outline = workspace::boundary_sample(geo.workspace, 400);
  const workspace::Point c = workspace::center(geo.workspace);
  s.center = {to_double(c.x), to_double(c.y)};

  std::vector<std::pair<double, double>> extent = s.outline;
  if (problem.robot == intersect::Robot::fivebar) {
    const models::FiveBarParams params{problem.e, b};
    const double he = to_double(problem.e) / 2, l = to_double(b);
    extent.push_back({-he, 0});
    extent.push_back({he, 0});
    if (models::fivebar_reachable(c.x, c.y, params)) {
      const models::JointAngles j = models::fivebar_ik(c.x, c.y, params);
      const std::pair<double, double> A1{-he, 0}, A2{he, 0};
      const std::pair<double, double> B1{-he + l * std::cos(j.theta1), l * std::sin(j.theta1)};
      const std::pair<double, double> B2{he + l * std::cos(j.theta3), l * std::sin(j.theta3)};
      s.joints = {A1, B1, s.center, B2, A2};
      s.assembled = true;
    }
  } else {
    const models::FourBarParams params{problem.l, problem.d, a};
    const models::TrigApprox trig = models::TrigApprox::lower(to_double(b));
    const double h = to_double(a), l = to_double(problem.l), d = to_double(problem.d);
    extent.push_back({0, h});
    if (models::fourbar_assemblable(c.x, c.y, params, trig)) {
      const auto sols = models::fourbar_io_solve(c.x, c.y, trig, params);
      if (!sols.empty()) {
        const auto w = models::platform_direction(trig);
        const std::pair<double, double> A3{0, h}, B3{l * std::cos(sols.front()), h + l * std::sin(sols.front())};
        const std::pair<double, double> C3{s.center.first + d * to_double(w[0]), s.center.second + d * to_double(w[1])};
        s.joints = {A3, B3, C3, s.center};
        s.assembled = true;
      }
    }
  }
  for (std::size_t k = 0; k + 1 < s.joints.size(); ++k) {
    s.links.push_back({s.joints[k].first, s.joints[k].second, s.joints[k + 1].first, s.joints[k + 1].second});
  }
  extent.insert(extent.end(), s.joints.begin(), s.joints.end());

  double x0 = extent.front().first, x1 = x0, y0 = extent.front().second, y1 = y0;
  for (const auto& [x, y] : extent) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  const double pad = 0.5 + 0.15 * std::max(x1 - x0, y1 - y0);
  s.view = {x0 - pad, x1 + pad, y0 - pad, y1 + pad};
  for (const auto& curve : geo.curves) s.loci.emplace_back(curve.name, marching_squares(curve.poly, s.view, step));
  return s;
}

std::string scene_svg(const DesignScene& s) {
  const double size = 640, margin = 30;
  const double w = s.view[1] - s.view[0], h = s.view[3] - s.view[2];
  const double scale = (size - 2 * margin) / std::max(w, h);
  auto px = [&](double x) { return fmt(margin + (x - s.view[0]) * scale); };
  auto py = [&](double y) { return fmt(margin + (s.view[3] - y) * scale); };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size + 40
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << margin << "\" y=\"20\">" << esc(s.title) << "</text>\n";
  o << "<g transform=\"translate(0,20)\">\n";
  o << "<polygon id=\"workspace\" fill=\"#e8f0fe\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (const auto& [x, y] : s.outline) o << px(x) << ',' << py(y) << ' ';
  o << "\"/>\n";
  for (std::size_t k = 0; k < s.loci.size(); ++k) {
    const auto& [name, segs] = s.loci[k];
    o << "<path id=\"locus-" << esc(name) << "\" fill=\"none\" stroke=\"" << kLocusColours[k % 5]
      << "\" stroke-width=\"1.2\" d=\"";
    for (const auto& g : segs) o << 'M' << px(g.x0) << ' ' << py(g.y0) << 'L' << px(g.x1) << ' ' << py(g.y1);
    o << "\"/>\n";
    o << "<text x=\"" << margin + 8 << "\" y=\"" << margin + 14 * static_cast<double>(k + 1) << "\" fill=\""
      << kLocusColours[k % 5] << "\">" << esc(name) << "</text>\n";
  }
  if (s.assembled) {
    o << "<g id=\"links\" stroke=\"#333\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
    for (const auto& g : s.links) {
      o << "<line x1=\"" << px(g.x0) << "\" y1=\"" << py(g.y0) << "\" x2=\"" << px(g.x1) << "\" y2=\"" << py(g.y1)
        << "\"/>\n";
    }
    o << "</g>\n";
    for (const auto& [x, y] : s.joints) {
      o << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"4\" fill=\"white\" stroke=\"#333\"/>\n";
    }
  }
  o << "<circle cx=\"" << px(s.center.first) << "\" cy=\"" << py(s.center.second) << "\" r=\"2.5\" fill=\"black\"/>\n";
  o << "</g>\n</svg>\n";
  return o.str();
}

std::string regions_svg(const regions::RegionMap& map) {
  const double size = 640, margin = 50;
  const auto& ax = map.window.axes;
  const double a0 = to_double(ax[0].lo), a1 = to_double(ax[0].hi), b0 = to_double(ax[1].lo), b1 = to_double(ax[1].hi);
  const double sx = (size - 2 * margin) / (a1 - a0), sy = (size - 2 * margin) / (b1 - b0);
  auto px = [&](double a) { return margin + (a - a0) * sx; };
  auto py = [&](double b) { return size - margin - (b - b0) * sy; };
  static const char* heat[] = {"#fff5eb", "#fdd0a2", "#fdae6b", "#fd8d3c", "#f16913", "#d94801", "#a63603", "#7f2704"};
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g id=\"cells\" stroke=\"none\">\n";
  for (const auto& c : map.cells) {
    const double wa = to_double(map.cell_width(0, c.depth)), wb = to_double(map.cell_width(1, c.depth));
    const double ca = to_double(c.center[0]), cb = to_double(c.center[1]);
    const char* fill = c.feasible ? "#2ca02c" : c.total == 0 ? "#c7c7c7" : heat[std::min(c.total, 8) - 1];
    o << "<rect x=\"" << fmt(px(ca - wa / 2)) << "\" y=\"" << fmt(py(cb + wb / 2)) << "\" width=\"" << fmt(wa * sx)
      << "\" height=\"" << fmt(wb * sy) << "\" fill=\"" << fill << "\"/>\n";
  }
  o << "</g>\n<g id=\"labels\" text-anchor=\"middle\">\n";
  for (const auto& c : map.components) {
    if (!c.zero_count()) continue;
    o << "<text x=\"" << fmt(px(to_double(c.representative[0]))) << "\" y=\"" << fmt(py(to_double(c.representative[1])))
      << "\"" << (c.feasible ? " font-weight=\"bold\"" : "") << ">R" << c.id << "</text>\n";
  }
  o << "</g>\n";
  o << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << size - 2 * margin << "\" height=\""
    << size - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";
  o << "<text x=\"" << size / 2 << "\" y=\"" << size - 15 << "\" text-anchor=\"middle\">" << esc(ax[0].name)
    << "</text>\n";
  o << "<text x=\"15\" y=\"" << size / 2 << "\" text-anchor=\"middle\">" << esc(ax[1].name) << "</text>\n";
  o << "<text x=\"" << margin << "\" y=\"" << size - margin + 15 << "\" text-anchor=\"middle\">" << fmt(a0) << "</text>\n";
  o << "<text x=\"" << size - margin << "\" y=\"" << size - margin + 15 << "\" text-anchor=\"middle\">" << fmt(a1)
    << "</text>\n";
  o << "<text x=\"" << margin - 5 << "\" y=\"" << size - margin << "\" text-anchor=\"end\">" << fmt(b0) << "</text>\n";
  o << "<text x=\"" << margin - 5 << "\" y=\"" << margin + 4 << "\" text-anchor=\"end\">" << fmt(b1) << "</text>\n";
  o << "</svg>\n";
  return o.str();
}

}  // namespace singreg::cli
