#include <benchmark/benchmark.h>

#include "graphoid/algebra/elimination.hpp"
#include "graphoid/degree.hpp"
#include "graphoid/graphoid.hpp"
#include "graphoid/puiseux.hpp"
#include "graphoid/rf_parser.hpp"

using namespace graphoid;

namespace {

BiPoly poly(const char* text) { return parse_rational_fn(text).p(); }

Family family(std::vector<const char*> texts) {
  std::vector<RationalFn> fs;
  for (const char* t : texts) fs.push_back(parse_rational_fn(t));
  return Family(std::move(fs));
}

}  // namespace

static void BM_Resultant(benchmark::State& state) {
  BiPoly a = poly("x^4 - 3*x^2*y + y^3 - 2*x*y^2 + 5");
  BiPoly b = poly("y^4 + x^3*y - 7*x*y + x^2 - 1");
  for (auto _ : state) benchmark::DoNotOptimize(resultant_y(a, b));
}
BENCHMARK(BM_Resultant)->Unit(benchmark::kMillisecond);

static void BM_ExpandBranches(benchmark::State& state) {
  BiPoly p = poly("(y^2 - x^3)*(y - x^2) + x^5");
  for (auto _ : state) benchmark::DoNotOptimize(expand_branches(p));
}
BENCHMARK(BM_ExpandBranches)->Unit(benchmark::kMillisecond);

static void BM_SampleBoundaryMap(benchmark::State& state) {
  Family F = family({"x/y", "(x^2 - y)/(x*y + x^3)"});
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_boundary_map(F, Point::origin(), Rat(1, 8), static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SampleBoundaryMap)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);

static void BM_Hausdorff(benchmark::State& state) {
  Family F = family({"x/y"}), G = family({"(x*y)/(x^2 + y^2)"});
  auto n = static_cast<std::size_t>(state.range(0));
  auto a = sample_boundary_map(F, Point::origin(), Rat(1, 4), n);
  auto b = sample_boundary_map(G, Point::origin(), Rat(1, 4), n);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_distance(a, b));
}
BENCHMARK(BM_Hausdorff)->Arg(1024)->Arg(16384)->Unit(benchmark::kMillisecond);

static void BM_Fiber(benchmark::State& state) {
  Family F = family({"x/y", "(x - 1)/y"});
  for (auto _ : state) benchmark::DoNotOptimize(fiber(F, Point::origin(), 1e-2));
}
BENCHMARK(BM_Fiber)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
