// Serial reference vs OpenMP backend for each kernel. Arg 0 = serial, 1 = openmp.

#include <benchmark/benchmark.h>

#include <complex>
#include <cstdint>
#include <vector>

#include "bracelet/configurations.hpp"
#include "bracelet/kernels.hpp"
#include "bracelet/necklaces.hpp"
#include "bracelet/roots.hpp"

namespace {

using bracelet::kernels::Backend;

Backend backend_of(const benchmark::State& state) { return state.range(0) ? Backend::openmp : Backend::serial; }

void BM_configuration_counts(benchmark::State& state) {
  const auto b = backend_of(state);
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bracelet::kernels::configuration_counts(n, bracelet::kernels::ArrayRule::full, b));
  }
}
BENCHMARK(BM_configuration_counts)->ArgsProduct({{0, 1}, {20, 24}})->Unit(benchmark::kMillisecond);

void BM_necklace_counts(benchmark::State& state) {
  const auto b = backend_of(state);
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bracelet::kernels::necklace_counts(n, bracelet::kernels::CyclicRule::no_adjacent_reds, b));
  }
}
BENCHMARK(BM_necklace_counts)->ArgsProduct({{0, 1}, {20, 24}})->Unit(benchmark::kMillisecond);

// One sweep over the starting layout of F_1000.
void BM_aberth_sweep(benchmark::State& state) {
  const auto b = backend_of(state);
  const auto coeffs = bracelet::poly::normalized_coefficients(bracelet::necklaces::rowsum_poly(1000));
  const auto z = bracelet::poly::initial_layout(coeffs);
  const std::vector<std::uint8_t> active(z.size(), 1);
  std::vector<std::complex<double>> delta(z.size());
  std::vector<bracelet::kernels::Evaluation> eval(z.size());
  for (auto _ : state) {
    bracelet::kernels::aberth_sweep(coeffs, z, active, delta, eval, b);
    benchmark::DoNotOptimize(delta.data());
  }
}
BENCHMARK(BM_aberth_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_find_roots(benchmark::State& state) {
  bracelet::poly::RootOptions opt;
  opt.backend = backend_of(state);
  const auto p = bracelet::config::necklace_poly(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(bracelet::poly::find_roots(p, opt));
}
BENCHMARK(BM_find_roots)->ArgsProduct({{0, 1}, {60}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
