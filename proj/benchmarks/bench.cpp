#include <benchmark/benchmark.h>

#include "surfgeo/duality.hpp"
#include "surfgeo/embedding.hpp"
#include "surfgeo/generation.hpp"
#include "surfgeo/reembed.hpp"
#include "surfgeo/surface.hpp"

using namespace surfgeo;

namespace {

SimplicialSurface double_tetra() {
  return SimplicialSurface::build_from_faces(
      {{1, 2, 3}, {1, 3, 4}, {1, 2, 4}, {2, 3, 5}, {3, 4, 5}, {2, 4, 5}});
}

void BM_EnumerateCdcsK4(benchmark::State& state) {
  Graph k4 = Graph::from_arcs({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cdcs(k4));
}
BENCHMARK(BM_EnumerateCdcsK4);

void BM_EnumerateCdcsPrism(benchmark::State& state) {
  auto [fg, fmap] = face_graph(double_tetra());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cdcs(fg));
}
BENCHMARK(BM_EnumerateCdcsPrism);

void BM_CanonicalForm(benchmark::State& state) {
  auto spheres = generate_spheres(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& s : spheres) benchmark::DoNotOptimize(canonical_form(s));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(spheres.size()));
}
BENCHMARK(BM_CanonicalForm)->Arg(10)->Arg(12)->Arg(14);

void BM_GenerateSpheres(benchmark::State& state) {
  // regenerate from scratch each time: the generator caches levels, so the
  // benchmark would otherwise measure a lookup. The cache is process-wide,
  // hence the level below the argument is warm and only the last expansion
  // step is timed cold on the first iteration.
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_spheres(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenerateSpheres)->Arg(12)->Arg(14);

void BM_ReembeddingClasses(benchmark::State& state) {
  auto spheres = generate_spheres(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& s : spheres) {
      total += enumerate_reembeddings(s, TargetSurface::projective_plane).size();
      total += enumerate_reembeddings(s, TargetSurface::torus).size();
      total += enumerate_reembeddings(s, TargetSurface::klein_bottle).size();
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ReembeddingClasses)->Arg(10)->Arg(12);

void BM_CountOrbits(benchmark::State& state) {
  auto spheres = generate_spheres(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& s : spheres) {
      total += count_reembedding_orbits(s, TargetSurface::projective_plane);
      total += count_reembedding_orbits(s, TargetSurface::torus);
      total += count_reembedding_orbits(s, TargetSurface::klein_bottle);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_CountOrbits)->Arg(12)->Arg(14);

void BM_OracleReembeddings(benchmark::State& state) {
  auto s = double_tetra();
  for (auto _ : state) {
    std::size_t total = 0;
    for (TargetSurface t : {TargetSurface::projective_plane, TargetSurface::torus,
                            TargetSurface::klein_bottle})
      total += oracle_reembeddings(s, t).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_OracleReembeddings);

} // namespace

BENCHMARK_MAIN();
