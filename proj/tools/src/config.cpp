#include "singreg_cli/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace singreg::cli {

namespace {

const std::set<std::string> kIntegerKeys{"n", "side", "resolution", "refine", "jobs"};

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [k, v] : obj.items()) {
    if (!allowed.count(k)) throw ConfigError("unknown key '" + k + "' in " + where);
  }
}

int int_field(const json& obj, const std::string& key, int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
  return v.get<int>();
}

Rational rational_or(const json& obj, const std::string& key, const Rational& fallback) {
  return obj.contains(key) ? rational_field(obj.at(key), key) : fallback;
}

workspace::WorkspaceSpec parse_workspace(const json& w) {
  check_keys(w, {"shape", "lx", "ly", "n"}, "workspace");
  if (!w.contains("shape") || !w.at("shape").is_string()) throw ConfigError("workspace.shape must be \"lame\" or \"rect\"");
  if (!w.contains("lx") || !w.contains("ly")) throw ConfigError("workspace needs lx and ly");
  const std::string shape = w.at("shape").get<std::string>();
  const Rational lx = rational_field(w.at("lx"), "workspace.lx"), ly = rational_field(w.at("ly"), "workspace.ly");
  if (shape == "lame") return workspace::LameSpec{0, 0, lx, ly, int_field(w, "n", 4)};
  if (shape == "rect") {
    if (w.contains("n")) throw ConfigError("workspace.n applies to Lamé workspaces only");
    return workspace::RectSpec{0, 0, lx, ly};
  }
  throw ConfigError("workspace.shape must be \"lame\" or \"rect\"");
}

}  // namespace

Rational rational_field(const json& value, const std::string& what) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    // shortest round-trip text, so 3.7 means 37/10
    if (value.is_number()) return parse_rational(value.dump());
  } catch (const DomainError& e) {
    throw ConfigError("bad rational for " + what + ": " + e.what());
  }
  throw ConfigError(what + " must be a rational string or a number");
}

json read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
}

void apply_override(json& config, const std::string& key, const std::string& value) {
  if (key.empty()) throw ConfigError("empty override key");
  if (!config.is_object()) throw ConfigError("config must be a JSON object");
  json* node = &config;
  std::string leaf = key;
  for (std::size_t dot; (dot = leaf.find('.')) != std::string::npos;) {
    const std::string part = leaf.substr(0, dot);
    json& child = (*node)[part];
    if (child.is_null()) child = json::object();
    if (!child.is_object()) throw ConfigError("override '" + key + "': '" + part + "' is not an object");
    node = &child;
    leaf = leaf.substr(dot + 1);
  }
  const bool in_window = key.rfind("window.", 0) == 0;
  if (in_window) {
    const auto comma = value.find(',');
    if (comma == std::string::npos) throw ConfigError("override '" + key + "' needs lo,hi");
    (*node)[leaf] = json::array({value.substr(0, comma), value.substr(comma + 1)});
  } else if (kIntegerKeys.count(leaf)) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      (*node)[leaf] = v;
    } catch (const std::exception&) {
      throw ConfigError("override '" + key + "' needs an integer");
    }
  } else {
    (*node)[leaf] = value;
  }
}

ProblemConfig parse_config(const json& config) {
  check_keys(config, {"robot", "e", "l", "d", "workspace", "side", "window", "resolution", "refine", "jobs", "out_dir"},
             "config");
  ProblemConfig out;
  intersect::Problem& p = out.problem;
  if (!config.contains("robot") || !config.at("robot").is_string()) {
    throw ConfigError("config needs \"robot\": \"fivebar\" or \"fourbar\"");
  }
  const std::string robot = config.at("robot").get<std::string>();
  if (robot == "fivebar") {
    p.robot = intersect::Robot::fivebar;
    if (config.contains("l") || config.contains("d")) throw ConfigError("five-bar configs take e only (l is swept)");
    p.e = rational_or(config, "e", Rational(1));
  } else if (robot == "fourbar") {
    p.robot = intersect::Robot::fourbar;
    if (config.contains("e")) throw ConfigError("four-bar configs take l and d");
    p.l = rational_or(config, "l", Rational(3));
    p.d = rational_or(config, "d", Rational(1));
  } else {
    throw ConfigError("robot must be \"fivebar\" or \"fourbar\"");
  }
  if (!config.contains("workspace")) throw ConfigError("config needs a workspace");
  p.workspace = parse_workspace(config.at("workspace"));
  p.side = int_field(config, "side", 0);

  out.window = regions::ParamWindow::defaults(p);
  if (config.contains("window")) {
    const json& w = config.at("window");
    const auto names = p.axes();
    check_keys(w, {names[0], names[1]}, "window");
    for (std::size_t k = 0; k < 2; ++k) {
      if (!w.contains(names[k])) continue;
      const json& range = w.at(names[k]);
      if (!range.is_array() || range.size() != 2) throw ConfigError("window." + names[k] + " must be [lo, hi]");
      out.window.axes[k].lo = rational_field(range[0], "window." + names[k]);
      out.window.axes[k].hi = rational_field(range[1], "window." + names[k]);
    }
  }
  out.sweep.resolution = int_field(config, "resolution", 64);
  out.sweep.max_depth = int_field(config, "refine", 0);
  const int jobs = int_field(config, "jobs", 0);
  if (jobs < 0) throw ConfigError("jobs must be non-negative");
  out.sweep.jobs = static_cast<unsigned>(jobs);
  if (config.contains("out_dir")) {
    if (!config.at("out_dir").is_string()) throw ConfigError("out_dir must be a string");
    out.out_dir = config.at("out_dir").get<std::string>();
  }
  try {
    p.validate();
    out.window.validate(p);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (out.sweep.resolution < 16) throw ConfigError("resolution must be at least 16");
  if (out.sweep.max_depth < 0 || out.sweep.max_depth > 6) throw ConfigError("refine must be 0..6");
  return out;
}

std::array<Rational, 2> parse_point(const std::string& text, const intersect::Problem& problem) {
  const auto names = problem.axes();
  std::array<Rational, 2> out;
  std::array<bool, 2> seen{false, false};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("point entries look like name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    std::size_t k = name == names[0] ? 0 : name == names[1] ? 1 : 2;
    if (k == 2) throw ConfigError("point axis '" + name + "' is not one of " + names[0] + ", " + names[1]);
    if (seen[k]) throw ConfigError("point axis '" + name + "' given twice");
    try {
      out[k] = parse_rational(item.substr(eq + 1));
    } catch (const DomainError& e) {
      throw ConfigError(std::string("bad point value: ") + e.what());
    }
    seen[k] = true;
  }
  if (!seen[0] || !seen[1]) throw ConfigError("point needs " + names[0] + "=..." + "," + names[1] + "=...");
  return out;
}

}  // namespace singreg::cli
