#include <benchmark/benchmark.h>

#include <singreg/intersect.hpp>
#include <singreg/models.hpp>
#include <singreg/regions.hpp>
#include <singreg/resultant.hpp>
#include <singreg/roots.hpp>

using namespace singreg;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

intersect::Problem lame_problem() {
  intersect::Problem p;
  p.workspace = workspace::LameSpec{0, 0, 4, 4, 4};
  return p;
}

// dp1 and the workspace of the f = 3.7, l = 3 design
const intersect::DesignGeometry& design() {
  static const intersect::DesignGeometry geo = intersect::design_geometry(lame_problem(), q(37, 10), 3);
  return geo;
}

poly::MultiPoly dp1_curve() { return design().curves.front().poly; }

poly::MultiPoly lame_poly() { return workspace::lame_implicit(std::get<workspace::LameSpec>(design().workspace)); }

}  // namespace

static void BM_Resultant(benchmark::State& state) {
  const poly::MultiPoly curve = dp1_curve(), lame = lame_poly();
  for (auto _ : state) benchmark::DoNotOptimize(poly::resultant(curve, lame, "y"));
}
BENCHMARK(BM_Resultant)->Unit(benchmark::kMillisecond);

static void BM_SturmCount(benchmark::State& state) {
  const poly::UniPoly r = poly::resultant(dp1_curve(), lame_poly(), "y").to_unipoly("x");
  for (auto _ : state) benchmark::DoNotOptimize(poly::count_real_roots(r, -2, 2));
  state.counters["degree"] = r.degree();
}
BENCHMARK(BM_SturmCount)->Unit(benchmark::kMillisecond);

static void BM_CountOnLame(benchmark::State& state) {
  const poly::MultiPoly curve = dp1_curve();
  const auto lame = std::get<workspace::LameSpec>(design().workspace);
  for (auto _ : state) benchmark::DoNotOptimize(intersect::count_on_lame(curve, lame));
}
BENCHMARK(BM_CountOnLame)->Unit(benchmark::kMillisecond);

static void BM_ClassifyDesign(benchmark::State& state) {
  const intersect::Problem p = lame_problem();
  for (auto _ : state) benchmark::DoNotOptimize(intersect::classify_design(p, q(37, 10), 3));
}
BENCHMARK(BM_ClassifyDesign)->Unit(benchmark::kMillisecond);

static void BM_ClassifySquareSides(benchmark::State& state) {
  intersect::Problem p;
  p.workspace = workspace::RectSpec{0, 0, 4, 4};
  for (auto _ : state) benchmark::DoNotOptimize(intersect::classify_design(p, q(19, 5), q(33, 10)));
}
BENCHMARK(BM_ClassifySquareSides)->Unit(benchmark::kMillisecond);

static void BM_Sweep(benchmark::State& state) {
  const intersect::Problem p = lame_problem();
  const regions::ParamWindow w = regions::ParamWindow::defaults(p);
  const int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(regions::sweep(p, w, {res, 0, 1}));
  state.counters["cells"] = res * res;
}
BENCHMARK(BM_Sweep)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
