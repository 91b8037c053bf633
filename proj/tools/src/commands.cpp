#include "singreg_cli/commands.hpp"

#include "singreg_cli/config.hpp"
#include "singreg_cli/output.hpp"
#include "singreg_cli/svg.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <ostream>

namespace singreg::cli {

namespace {

struct Args {
  std::string config;
  std::string point;
  std::string out_dir;
  std::string output = "design.svg";
  int resolution = -1;
  int refine = -1;
  int jobs = -1;
  std::size_t samples = 1000000;
};

// "--key=value" or "--key value" tokens left over by the parser.
void apply_extras(json& cfg, const std::vector<std::string>& extras) {
  for (std::size_t k = 0; k < extras.size(); ++k) {
    const std::string& tok = extras[k];
    if (tok.rfind("--", 0) != 0 || tok.size() < 3) throw ConfigError("unexpected argument '" + tok + "'");
    const auto eq = tok.find('=');
    if (eq != std::string::npos) {
      apply_override(cfg, tok.substr(2, eq - 2), tok.substr(eq + 1));
    } else if (k + 1 < extras.size() && extras[k + 1].rfind("--", 0) != 0) {
      apply_override(cfg, tok.substr(2), extras[k + 1]);
      ++k;
    } else {
      throw ConfigError("override '" + tok + "' needs a value");
    }
  }
}

ProblemConfig load(const Args& a, const CLI::App& sub) {
  json cfg = read_config_file(a.config);
  if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
  apply_extras(cfg, sub.remaining());
  if (a.resolution >= 0) cfg["resolution"] = a.resolution;
  if (a.refine >= 0) cfg["refine"] = a.refine;
  if (a.jobs >= 0) cfg["jobs"] = a.jobs;
  if (!a.out_dir.empty()) cfg["out_dir"] = a.out_dir;
  return parse_config(cfg);
}

int classify(const ProblemConfig& pc, const Args& a, std::ostream& out) {
  const auto p = parse_point(a.point, pc.problem);
  const intersect::IntersectionReport rep = intersect::classify_design(pc.problem, p[0], p[1]);
  out << dump(report_json(pc.problem, rep));
  if (rep.flagged()) return kFlagged;
  return rep.feasible ? kFeasible : kInfeasible;
}

int sweep(const ProblemConfig& pc, std::ostream& out) {
  const regions::RegionMap map = regions::sweep(pc.problem, pc.window, pc.sweep);
  const std::filesystem::path dir(pc.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create output directory '" + pc.out_dir + "'");
  // everything is rendered before the first file is replaced
  const std::string regions = dump(regions_json(pc.problem, map));
  const std::string grid = grid_csv(map);
  const std::string svg = regions_svg(map);
  write_atomic(dir / "regions.json", regions);
  write_atomic(dir / "grid.csv", grid);
  write_atomic(dir / "regions.svg", svg);
  out << "wrote " << (dir / "regions.json").string() << ", grid.csv, regions.svg: " << map.cells.size()
      << " cells, " << map.feasible_components().size() << " feasible and " << map.zero_count_components().size()
      << " zero-count components\n";
  return kFeasible;
}

int plot(const ProblemConfig& pc, const Args& a, std::ostream& out, std::ostream& err) {
  const auto p = parse_point(a.point, pc.problem);
  const DesignScene scene = design_scene(pc.problem, p[0], p[1]);
  if (!scene.assembled) err << "warning: the workspace centre cannot be reached; drawing the loci only\n";
  const std::string svg = scene_svg(scene);
  if (a.output == "-") {
    out << svg;
  } else {
    write_atomic(a.output, svg);
  }
  return kFeasible;
}

int oracle(const ProblemConfig& pc, const Args& a, std::ostream& out) {
  if (a.samples < 1000) throw ConfigError("--samples must be at least 1000");
  const auto p = parse_point(a.point, pc.problem);
  const intersect::DesignGeometry geo = intersect::design_geometry(pc.problem, p[0], p[1]);
  const intersect::IntersectionReport rep = intersect::classify_design(pc.problem, p[0], p[1]);
  std::vector<poly::MultiPoly> polys;
  for (const auto& c : geo.curves) polys.push_back(c.poly);
  const std::vector<int> sampled = intersect::oracle_counts(polys, geo.workspace, a.samples, pc.problem.side);
  json curves = json::array();
  bool agree = true;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const bool same = sampled[k] == rep.per_curve[k].count;
    if (!same && !rep.per_curve[k].flagged()) agree = false;
    curves.push_back({{"name", geo.curves[k].name},
                      {"certified", rep.per_curve[k].count},
                      {"oracle", sampled[k]},
                      {"flagged", rep.per_curve[k].flagged()},
                      {"agree", same}});
  }
  out << dump({{"point", {{rep.axes[0], to_string(p[0])}, {rep.axes[1], to_string(p[1])}}},
               {"samples", a.samples},
               {"curves", std::move(curves)}});
  return agree ? kFeasible : kInfeasible;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singularity-free design regions for decoupled planar parallel robots", "singreg"};
  app.require_subcommand(1);
  Args a;
  auto common = [&](CLI::App* s, bool point) {
    s->add_option("--config", a.config, "JSON problem configuration")->required();
    if (point) s->add_option("--point", a.point, "design point, e.g. f=3.7,l=3")->required();
    s->allow_extras();
  };
  CLI::App* c_classify = app.add_subcommand("classify", "Classify one design point (exit 0 feasible, 1 not, 2 flagged)");
  common(c_classify, true);
  CLI::App* c_sweep = app.add_subcommand("sweep", "Sweep the design window; writes regions.json, grid.csv, regions.svg");
  common(c_sweep, false);
  c_sweep->add_option("--out-dir", a.out_dir, "output directory");
  c_sweep->add_option("--resolution", a.resolution, "cells per axis");
  c_sweep->add_option("--refine", a.refine, "maximum refinement depth");
  c_sweep->add_option("--jobs", a.jobs, "worker threads (0: all cores)");
  CLI::App* c_plot = app.add_subcommand("plot", "Draw the robot, loci and workspace at a design point as SVG");
  common(c_plot, true);
  c_plot->add_option("--output", a.output, "SVG path, '-' for standard output");
  CLI::App* c_oracle = app.add_subcommand("oracle", "Compare certified counts with boundary sampling");
  common(c_oracle, true);
  c_oracle->add_option("--samples", a.samples, "boundary samples");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (c_classify->parsed()) return classify(load(a, *c_classify), a, out);
    if (c_sweep->parsed()) return sweep(load(a, *c_sweep), out);
    if (c_plot->parsed()) return plot(load(a, *c_plot), a, out, err);
    if (c_oracle->parsed()) return oracle(load(a, *c_oracle), a, out);
  } catch (const ConfigError& e) {
    err << "singreg: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "singreg: " << e.what() << '\n';
    return kIoError;
  } catch (const DomainError& e) {
    err << "singreg: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace singreg::cli
