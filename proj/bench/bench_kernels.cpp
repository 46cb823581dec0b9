// Serial reference kernels against their OpenMP versions.

#include "mexcl/catalog.hpp"
#include "mexcl/series.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace mexcl;

namespace {

Series random_series(std::mt19937_64& rng, std::size_t terms) {
  auto g = integer_lattice(2);
  std::uniform_int_distribution<long> x(0, 20), y(-40, 40), c(-9, 9);
  std::vector<Series::Term> out;
  for (std::size_t k = 0; k < terms; ++k) {
    long a = x(rng), b = y(rng);
    if (a == 0) b = std::abs(b);
    out.emplace_back(GroupElement::of(g, {a, b}), Rat(c(rng), 1 + std::abs(c(rng))));
  }
  return Series(g, Field::Q(), std::move(out));
}

void product(benchmark::State& state, Exec exec) {
  std::mt19937_64 rng(5);
  auto f = random_series(rng, static_cast<std::size_t>(state.range(0)));
  auto h = random_series(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul(f, h, exec));
  state.SetComplexityN(state.range(0));
}

void submonoid_scan(benchmark::State& state, Exec exec) {
  auto w = catalog::plane_window(0, state.range(0), -4 * state.range(0), 4 * state.range(0));
  auto s = catalog::plane_chain();
  for (auto _ : state) benchmark::DoNotOptimize(is_submonoid(s, w, exec).pass);
}

void symmetry_scan(benchmark::State& state, Exec exec) {
  auto w = catalog::plane_window(0, state.range(0), -4 * state.range(0), 4 * state.range(0));
  auto s = catalog::plane_dual();
  auto a = GroupElement::of(catalog::integer_plane(), {1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(check_maxexcl(s, a, w, exec).status);
}

}  // namespace

BENCHMARK_CAPTURE(product, serial, Exec::Serial)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK_CAPTURE(product, parallel, Exec::Parallel)->RangeMultiplier(2)->Range(16, 256);
BENCHMARK_CAPTURE(submonoid_scan, serial, Exec::Serial)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(submonoid_scan, parallel, Exec::Parallel)->Arg(2)->Arg(3);
BENCHMARK_CAPTURE(symmetry_scan, serial, Exec::Serial)->Arg(4)->Arg(8);
BENCHMARK_CAPTURE(symmetry_scan, parallel, Exec::Parallel)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
