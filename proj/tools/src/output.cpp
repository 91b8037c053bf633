#include "singreg_cli/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace singreg::cli {

namespace {

json flags_json(const intersect::CurveCount& c) {
  return {{"count", c.count}, {"degenerate", c.degenerate}, {"tangency", c.tangency},
          {"near_degenerate", c.near_degenerate}};
}

json component_json(const regions::RegionMap& map, const regions::Component& c, bool with_cells) {
  json out = {{"id", c.id},
              {"feasible", c.feasible},
              {"counts", c.counts},
              {"representative", {to_string(c.representative[0]), to_string(c.representative[1])}},
              {"bbox", {to_string(c.bbox[0]), to_string(c.bbox[1]), to_string(c.bbox[2]), to_string(c.bbox[3])}},
              {"area_cells", to_double(c.area_cells)}};
  if (with_cells) {
    json cells = json::array();
    for (std::size_t k : c.cells) {
      const auto& cell = map.cells[k];
      cells.push_back({cell.depth, cell.i, cell.j});
    }
    out["cells"] = std::move(cells);
  }
  return out;
}

std::string decimal(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", to_double(r));
  return buf;
}

}  // namespace

json report_json(const intersect::Problem& problem, const intersect::IntersectionReport& report) {
  json curves = json::array();
  for (std::size_t k = 0; k < report.per_curve.size(); ++k) {
    json c = flags_json(report.per_curve[k]);
    c["name"] = report.curve_names[k];
    if (!report.per_side.empty()) {
      json sides = json::object();
      const auto names = workspace::rect_side_names();
      for (std::size_t s = 0; s < 4; ++s) sides[names[s]] = flags_json(report.per_side[k][s]);
      c["sides"] = std::move(sides);
    }
    curves.push_back(std::move(c));
  }
  return {{"robot", intersect::to_string(problem.robot)},
          {"point",
           {{report.axes[0], to_string(report.point[0])}, {report.axes[1], to_string(report.point[1])}}},
          {"side", problem.side},
          {"curves", std::move(curves)},
          {"total", report.total},
          {"feasible", report.feasible},
          {"reason", intersect::to_string(report.reason)},
          {"flagged", report.flagged()}};
}

json regions_json(const intersect::Problem& problem, const regions::RegionMap& map) {
  json axes = json::array();
  for (const auto& a : map.window.axes) axes.push_back({{"name", a.name}, {"lo", to_string(a.lo)}, {"hi", to_string(a.hi)}});
  json feasible = json::array(), zero = json::array();
  for (const auto& c : map.components) {
    if (c.feasible) feasible.push_back(component_json(map, c, true));
    if (c.zero_count()) zero.push_back(component_json(map, c, false));
  }
  return {{"schema", 1},
          {"robot", intersect::to_string(problem.robot)},
          {"side", problem.side},
          {"window", {{"axes", std::move(axes)}}},
          {"resolution", map.resolution},
          {"refine", map.max_depth},
          {"leaf_cells", map.cells.size()},
          {"counts_legend", map.curve_names},
          {"components", std::move(feasible)},
          {"zero_count_components", std::move(zero)}};
}

std::string grid_csv(const regions::RegionMap& map) {
  std::ostringstream out;
  out << map.window.axes[0].name << ',' << map.window.axes[1].name << ",depth";
  for (const auto& n : map.curve_names) out << ',' << n;
  out << ",total,feasible,reason\n";
  for (const auto& c : map.cells) {
    out << decimal(c.center[0]) << ',' << decimal(c.center[1]) << ',' << c.depth;
    for (int v : c.counts) out << ',' << v;
    out << ',' << c.total << ',' << (c.feasible ? 1 : 0) << ',' << intersect::to_string(c.reason) << '\n';
  }
  return out.str();
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("cannot write '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move output into place at '" + path.string() + "': " + ec.message());
  }
}

}  // namespace singreg::cli
