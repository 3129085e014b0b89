#include <benchmark/benchmark.h>

#include "assoc/associahedron.hpp"
#include "assoc/barcx.hpp"
#include "assoc/degeneracy.hpp"
#include "assoc/homeo.hpp"
#include "assoc/hrep.hpp"
#include "assoc/sampling.hpp"
#include "assoc/trees.hpp"

using namespace assoc;

static void BM_Xi(benchmark::State& state) {
  Rng rng(1);
  std::vector<RatVec> pts;
  for (int i = 0; i < 64; ++i) pts.push_back(random_nonneg(rng, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(xi(pts[i++ % pts.size()]));
}
BENCHMARK(BM_Xi)->Arg(4)->Arg(8)->Arg(16);

static void BM_Omega(benchmark::State& state) {
  Rng rng(2);
  std::vector<KPoint> pts;
  for (int i = 0; i < 64; ++i) pts.push_back(random_k(rng, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(omega(Rat(1, 2), pts[i++ % pts.size()]));
}
BENCHMARK(BM_Omega)->Arg(3)->Arg(5)->Arg(7);

static void BM_FaceDecompose(benchmark::State& state) {
  auto kv = k_vertices(static_cast<std::size_t>(state.range(0)));
  std::vector<KPoint> pts(kv.begin(), kv.end());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(face_decompositions(pts[i++ % pts.size()]));
}
BENCHMARK(BM_FaceDecompose)->Arg(4)->Arg(6);

static void BM_VertexEnum(benchmark::State& state) {
  HRep h = k_hrep(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vertex_enum(h));
}
BENCHMARK(BM_VertexEnum)->DenseRange(3, 6);

static void BM_EnumTrivalent(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enum_trivalent(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumTrivalent)->DenseRange(6, 10, 2);

static void BM_EnumBearded(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enum_bearded(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumBearded)->DenseRange(4, 8, 2);

static void BM_BuildBar(benchmark::State& state) {
  BarContext ctx(FiniteMonoid::builtin("c3"), parse_ends("*x*"), BarModel::Strict);
  for (auto _ : state) benchmark::DoNotOptimize(build_bar(ctx, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildBar)->Arg(3)->Arg(5);

static void BM_NormalForm(benchmark::State& state) {
  BarContext ctx(FiniteMonoid::builtin("c2"), parse_ends("yxz"), BarModel::Strict);
  Rng rng(3);
  const std::size_t r = static_cast<std::size_t>(state.range(0));
  std::vector<BarPoint> pts;
  for (int i = 0; i < 32; ++i) {
    BarCell c{0, std::vector<int>(r, 0), 1};
    for (auto& x : c.x) x = static_cast<int>(rng.index(0, 1));
    pts.push_back(BarPoint{random_k(rng, r + 2), c});
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ctx.normal_form(pts[i++ % pts.size()]));
}
BENCHMARK(BM_NormalForm)->Arg(2)->Arg(4);
BENCHMARK_MAIN();
