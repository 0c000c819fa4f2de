#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include <aip/geometry_ops.hpp>
#include <aip/vpolytope.hpp>

namespace {

aip::Mat random_ball_cloud(int n, int count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0, 1);
  std::uniform_real_distribution<double> unif(0, 1);
  aip::Mat pts(count, n);
  for (int i = 0; i < count; ++i) {
    aip::Vec u(n);
    for (int j = 0; j < n; ++j) u(j) = gauss(rng);
    u.normalize();
    pts.row(i) = (std::pow(unif(rng), 1.0 / n) * u).transpose();
  }
  return pts;
}

void BM_Hull2D(benchmark::State& state) {
  const auto pts = random_ball_cloud(2, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    auto body = aip::VPolytope::from_points(pts);
    benchmark::DoNotOptimize(body.volume());
  }
}
BENCHMARK(BM_Hull2D)->Arg(256)->Arg(4096);

void BM_Hull3D(benchmark::State& state) {
  const auto pts = random_ball_cloud(3, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    auto body = aip::VPolytope::from_points(pts);
    benchmark::DoNotOptimize(body.volume());
  }
}
BENCHMARK(BM_Hull3D)->Arg(256)->Arg(2048);

void BM_Polar(benchmark::State& state) {
  auto body = aip::VPolytope::from_points(
      random_ball_cloud(3, static_cast<int>(state.range(0)), 3));
  const aip::Vec g = body.centroid();
  for (auto _ : state) {
    auto dual = aip::polar(body, g);
    benchmark::DoNotOptimize(dual.volume());
  }
}
BENCHMARK(BM_Polar)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
