#pragma once

#include <singreg/regions.hpp>

#include "json.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace singreg::cli {

using nlohmann::json;

/// Malformed configuration or command line (exit 64).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written (exit 74).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemConfig {
  intersect::Problem problem;
  regions::ParamWindow window;
  regions::SweepOptions sweep;
  std::string out_dir = ".";
};

json read_config_file(const std::string& path);

/// Sets a dotted key ("workspace.lx", "window.f") from a command-line value.
/// Integer keys take integers; window axes take "lo,hi"; the rest strings.
void apply_override(json& config, const std::string& key, const std::string& value);

ProblemConfig parse_config(const json& config);

/// "f=3.7,l=3" or "h=4.25,alpha=-1.5705", in the problem's axis names.
std::array<Rational, 2> parse_point(const std::string& text, const intersect::Problem& problem);

/// Rational from a JSON string ("p/q", decimal) or number.
Rational rational_field(const json& value, const std::string& what);

}  // namespace singreg::cli
