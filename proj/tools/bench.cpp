#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "wsnu/kernels.hpp"
#include "wsnu/presets.hpp"
#include "wsnu/specfun.hpp"

namespace {

std::vector<double> grid(std::size_t n) {
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = 40.0 * static_cast<double>(i) / static_cast<double>(n - 1);
  return r;
}

const wsnu::PhysicalParams& params() {
  static const auto p = [] {
    auto q = wsnu::reference_params();
    q.v0 = 47.78;
    return q;
  }();
  return p;
}

void BM_TabulateSerial(benchmark::State& state) {
  const auto r = grid(static_cast<std::size_t>(state.range(0)));
  std::vector<double> u(r.size());
  const wsnu::RadialFunction f(params(), {0, 5});
  for (auto _ : state) {
    wsnu::kernels::serial::tabulate(r, u, f);
    benchmark::DoNotOptimize(u.data());
  }
}

void BM_TabulateOpenMP(benchmark::State& state) {
  const auto r = grid(static_cast<std::size_t>(state.range(0)));
  std::vector<double> u(r.size());
  const wsnu::RadialFunction f(params(), {0, 5});
  for (auto _ : state) {
    wsnu::kernels::tabulate(r, u, f);
    benchmark::DoNotOptimize(u.data());
  }
}

void BM_NormSerial(benchmark::State& state) {
  std::vector<double> u(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::sin(1e-3 * static_cast<double>(i));
  for (auto _ : state) benchmark::DoNotOptimize(wsnu::kernels::serial::integrate_squared(u, 1e-3));
}

void BM_NormOpenMP(benchmark::State& state) {
  std::vector<double> u(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::sin(1e-3 * static_cast<double>(i));
  for (auto _ : state) benchmark::DoNotOptimize(wsnu::kernels::integrate_squared(u, 1e-3));
}

}  // namespace

BENCHMARK(BM_TabulateSerial)->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_TabulateOpenMP)->Arg(1 << 14)->Arg(1 << 18);
BENCHMARK(BM_NormSerial)->Arg(1 << 14)->Arg(1 << 20);
BENCHMARK(BM_NormOpenMP)->Arg(1 << 14)->Arg(1 << 20);

BENCHMARK_MAIN();
