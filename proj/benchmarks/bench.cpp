#include <benchmark/benchmark.h>

#include "steenrod/pi1.hpp"
#include "steenrod/reconstruct.hpp"

using namespace steenrod;

namespace {

// Torus subdivided into an n×n grid of squares, two triangles each.
DeltaComplex grid_torus(int n) {
  DeltaComplex x("grid_torus");
  auto v = [n](int i, int j) { return "v" + std::to_string((i + n) % n) + "_" + std::to_string((j + n) % n); };
  auto h = [n](int i, int j) { return "h" + std::to_string((i + n) % n) + "_" + std::to_string((j + n) % n); };
  auto u = [n](int i, int j) { return "u" + std::to_string((i + n) % n) + "_" + std::to_string((j + n) % n); };
  auto d = [n](int i, int j) { return "d" + std::to_string((i + n) % n) + "_" + std::to_string((j + n) % n); };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) x.add(v(i, j), 0);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      x.add(h(i, j), 1, {v(i + 1, j), v(i, j)});
      x.add(u(i, j), 1, {v(i, j + 1), v(i, j)});
      x.add(d(i, j), 1, {v(i + 1, j + 1), v(i, j)});
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // (i,j) -> (i+1,j) -> (i+1,j+1) and (i,j) -> (i,j+1) -> (i+1,j+1).
      x.add("L" + std::to_string(i) + "_" + std::to_string(j), 2, {u(i + 1, j), d(i, j), h(i, j)});
      x.add("U" + std::to_string(i) + "_" + std::to_string(j), 2, {h(i, j + 1), d(i, j), u(i, j)});
    }
  }
  return x;
}

void BM_CanonicalStructure(benchmark::State& state) {
  const auto x = standard_simplex(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_structure(x));
}
BENCHMARK(BM_CanonicalStructure)->DenseRange(2, 6);

void BM_VerifyStructure(benchmark::State& state) {
  const auto x = standard_simplex(static_cast<int>(state.range(0)));
  const auto s = canonical_structure(x);
  for (auto _ : state) benchmark::DoNotOptimize(verify_structure(s, default_i_max(s.carrier())));
}
BENCHMARK(BM_VerifyStructure)->DenseRange(2, 5);

void BM_Homology(benchmark::State& state) {
  const auto c = normalized_chains(grid_torus(static_cast<int>(state.range(0))));
  if (homology(c).betti() != std::vector<std::size_t>{1, 2, 1}) state.SkipWithError("grid is not a torus");
  for (auto _ : state) benchmark::DoNotOptimize(homology(c));
}
BENCHMARK(BM_Homology)->Arg(3)->Arg(6)->Arg(10);

void BM_Reconstruct(benchmark::State& state) {
  const auto x = grid_torus(static_cast<int>(state.range(0)));
  const auto s = canonical_structure(x);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_2_skeleton(s));
}
BENCHMARK(BM_Reconstruct)->Arg(3)->Arg(6);

void BM_Abelianization(benchmark::State& state) {
  const auto x = grid_torus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(abelianization(presentation(x)));
}
BENCHMARK(BM_Abelianization)->Arg(3)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
