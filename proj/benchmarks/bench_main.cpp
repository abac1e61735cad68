#include "mixvol/geometry.hpp"
#include "mixvol/json_io.hpp"
#include "mixvol/lp.hpp"
#include "mixvol/rng.hpp"
#include "mixvol/verify.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace mixvol;

void BM_VertexEnumerationAf3(benchmark::State& state) {
  for (auto _ : state) {
    const VertexSet vs = enumerate_vertices(slice(build_af_cone(3), Rat(1)));
    benchmark::DoNotOptimize(vs.vertices.size());
  }
}
BENCHMARK(BM_VertexEnumerationAf3);

void BM_PointBoundLp(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  std::vector<int> coords(static_cast<std::size_t>(d), 0);
  coords[0] = d;  // the worst-case corner target
  const IndexPoint target(coords, d);
  for (auto _ : state) {
    const AfBoundResult r = max_over_af(d, target);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_PointBoundLp)->Arg(3)->Arg(4)->Arg(5);

void BM_MixedVolume3d(benchmark::State& state) {
  const BodyTuple t = random_lattice_tuple(3, 3, 7, 3, 6, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mixed_volume(t));
  }
}
BENCHMARK(BM_MixedVolume3d);

void BM_FullConfiguration3d(benchmark::State& state) {
  const BodyTuple t = random_lattice_tuple(3, 3, 7, 3, 6, true);
  for (auto _ : state) {
    const Configuration c = full_configuration(t);
    benchmark::DoNotOptimize(c.values().size());
  }
}
BENCHMARK(BM_FullConfiguration3d);

void BM_ConvexHull3d(benchmark::State& state) {
  Xoshiro256 rng(11);
  std::vector<Point> cloud;
  for (int i = 0; i < 64; ++i) {
    Point p;
    for (int c = 0; c < 3; ++c) p.push_back(Rat(static_cast<long>(rng.below(12))));
    cloud.push_back(std::move(p));
  }
  for (auto _ : state) {
    const VPolytope hull = convex_hull(cloud);
    benchmark::DoNotOptimize(hull.vertices().size());
  }
}
BENCHMARK(BM_ConvexHull3d);

void BM_VerifyDim3(benchmark::State& state) {
  for (auto _ : state) {
    const VerifyReport report = verify_dim3();
    benchmark::DoNotOptimize(report.ok);
  }
}
BENCHMARK(BM_VerifyDim3);

}  // namespace

BENCHMARK_MAIN();
