#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "normalcut/enumeration.hpp"
#include "normalcut/homology.hpp"
#include "normalcut/normal_surface.hpp"
#include "normalcut/skeleton.hpp"
#include "normalcut/triangulation.hpp"
#include "normalcut/unknot.hpp"
#include "normalcut/wirtinger.hpp"

using namespace normalcut;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Triangulation load(const char* name) {
  return Triangulation::parse(read_file(std::string(NORMALCUT_SAMPLES_DIR) + "/" + name));
}

void BM_ParseTriangulation(benchmark::State& state) {
  const std::string text = read_file(std::string(NORMALCUT_SAMPLES_DIR) + "/closed_example.json");
  for (auto _ : state) benchmark::DoNotOptimize(Triangulation::parse(text));
}
BENCHMARK(BM_ParseTriangulation);

void BM_BuildSkeleton(benchmark::State& state) {
  const Triangulation tri = load("closed_example.json");
  for (auto _ : state) benchmark::DoNotOptimize(build_skeleton(tri));
}
BENCHMARK(BM_BuildSkeleton);

void BM_MatchingSystem(benchmark::State& state) {
  const Triangulation tri = load("closed_example.json");
  for (auto _ : state) benchmark::DoNotOptimize(matching_system(tri));
}
BENCHMARK(BM_MatchingSystem);

void BM_HomologyH1(benchmark::State& state) {
  const Triangulation tri = load("closed_example.json");
  for (auto _ : state)
    benchmark::DoNotOptimize(homology_h1(tri, Coefficients::integers));
}
BENCHMARK(BM_HomologyH1);

void BM_VertexSolutions(benchmark::State& state) {
  const MatchingSystem sys = matching_system(load("solid_torus.json"));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_solutions(sys));
}
BENCHMARK(BM_VertexSolutions);

void BM_FundamentalSolutions(benchmark::State& state) {
  const MatchingSystem sys = matching_system(load("solid_torus.json"));
  EnumerationLimits limits;
  for (auto _ : state) benchmark::DoNotOptimize(fundamental_solutions(sys, limits));
}
BENCHMARK(BM_FundamentalSolutions);

void BM_ReconstructMeridian(benchmark::State& state) {
  const Triangulation tri = load("solid_torus.json");
  const NormalVector meridian = {1, 0, 0, 1, 1, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(tri, meridian));
}
BENCHMARK(BM_ReconstructMeridian);

void BM_DecideUnknotSolidTorus(benchmark::State& state) {
  const Triangulation tri = load("solid_torus.json");
  UnknotOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(decide_unknot(tri, opts));
}
BENCHMARK(BM_DecideUnknotSolidTorus);

void BM_DecideKnottedComplement(benchmark::State& state) {
  // The unrestricted search box here has ~2.3e47 lattice points; the decision
  // runs entirely on the per-pattern admissible enumeration.
  const Triangulation tri = load("trefoil_complement.json");
  UnknotOptions opts;
  opts.limits.box_volume_cap = 100'000'000'000;
  for (auto _ : state) benchmark::DoNotOptimize(decide_unknot(tri, opts));
}
BENCHMARK(BM_DecideKnottedComplement);

void BM_AdmissibleDirect(benchmark::State& state) {
  const MatchingSystem sys = matching_system(load("trefoil_complement.json"));
  EnumerationLimits limits;
  limits.box_volume_cap = 100'000'000'000;
  for (auto _ : state)
    benchmark::DoNotOptimize(admissible_fundamentals_direct(sys, limits));
}
BENCHMARK(BM_AdmissibleDirect);

void BM_TrefoilRepSearch(benchmark::State& state) {
  const WirtingerPresentation pres = wirtinger_presentation(
      parse_pd(read_file(std::string(NORMALCUT_SAMPLES_DIR) + "/pd/trefoil.json")));
  for (auto _ : state) benchmark::DoNotOptimize(find_noncyclic_rep(pres, 5));
}
BENCHMARK(BM_TrefoilRepSearch);

void BM_Figure8RepSearch(benchmark::State& state) {
  const WirtingerPresentation pres = wirtinger_presentation(
      parse_pd(read_file(std::string(NORMALCUT_SAMPLES_DIR) + "/pd/figure8.json")));
  for (auto _ : state) benchmark::DoNotOptimize(find_noncyclic_rep(pres, 5));
}
BENCHMARK(BM_Figure8RepSearch);

}  // namespace

BENCHMARK_MAIN();
