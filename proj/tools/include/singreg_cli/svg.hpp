#pragma once

#include <singreg/regions.hpp>

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace singreg::cli {

struct Segment {
  double x0, y0, x1, y1;
};

/// Zero set of curve(x, y) over the view [x0, x1] x [y0, y1] on a square
/// grid with the given step, as unjoined segments.
std::vector<Segment> marching_squares(const poly::MultiPoly& curve, const std::array<double, 4>& view, double step);

/// Everything drawn for one design point, in model coordinates.
struct DesignScene {
  std::string title;
  std::array<double, 4> view{};  // x0, x1, y0, y1
  std::vector<std::pair<double, double>> outline;  // closed
  std::vector<std::pair<std::string, std::vector<Segment>>> loci;
  std::vector<Segment> links;
  std::vector<std::pair<double, double>> joints;
  std::pair<double, double> center{};
  bool assembled = false;
};

DesignScene design_scene(const intersect::Problem& problem, const Rational& a, const Rational& b, double step = 1e-2);
std::string scene_svg(const DesignScene& scene);

/// Leaves coloured by classification, feasible and zero-count components labelled.
std::string regions_svg(const regions::RegionMap& map);

}  // namespace singreg::cli
