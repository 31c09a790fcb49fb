#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <random>

#include "scattered/census.hpp"
#include "scattered/linearized.hpp"
#include "scattered/scatter_criteria.hpp"

using namespace scattered;

namespace {

const TowerCtx& tower(std::uint64_t q) {
  static std::map<std::uint64_t, std::unique_ptr<TowerCtx>> cache;
  auto& slot = cache[q];
  if (!slot) slot = TowerCtx::for_q(q);
  return *slot;
}

std::vector<Elt> samples(const TowerCtx& ctx, std::size_t n) {
  std::mt19937_64 rng(7);
  std::vector<Elt> out;
  while (out.size() < n) {
    const Elt x = ctx.random(rng);
    if (!x.is_zero()) out.push_back(x);
  }
  return out;
}

void BM_Mul(benchmark::State& state) {
  const auto& ctx = tower(static_cast<std::uint64_t>(state.range(0)));
  const auto xs = samples(ctx, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xs[i & 255] * xs[(i + 1) & 255]);
    ++i;
  }
}
BENCHMARK(BM_Mul)->Arg(3)->Arg(4)->Arg(9)->Arg(16)->Arg(101);

void BM_Inv(benchmark::State& state) {
  const auto& ctx = tower(static_cast<std::uint64_t>(state.range(0)));
  const auto xs = samples(ctx, 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(xs[i++ & 255].inv());
}
BENCHMARK(BM_Inv)->Arg(3)->Arg(4)->Arg(16);

void BM_Frobenius(benchmark::State& state) {
  const auto& ctx = tower(static_cast<std::uint64_t>(state.range(0)));
  const auto xs = samples(ctx, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ctx.frobenius(xs[i & 255], 1 + i % 5));
    ++i;
  }
}
BENCHMARK(BM_Frobenius)->Arg(3)->Arg(4)->Arg(16);

void BM_KernelDimDickson(benchmark::State& state) {
  const auto& ctx = tower(static_cast<std::uint64_t>(state.range(0)));
  const auto xs = samples(ctx, 256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_dim_dickson(r_poly(xs[i & 255], xs[(i + 7) & 255])));
    ++i;
  }
}
BENCHMARK(BM_KernelDimDickson)->Arg(3)->Arg(4)->Arg(9);

void BM_GammaSweep(benchmark::State& state) {
  const auto& ctx = tower(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_gamma(ctx, false, 1).size);
}
BENCHMARK(BM_GammaSweep)->Arg(5)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_BruteScatter(benchmark::State& state) {
  const auto& ctx = tower(static_cast<std::uint64_t>(state.range(0)));
  const Elt b = ctx.generator();
  for (auto _ : state) benchmark::DoNotOptimize(brute_is_scattered(b, 1).scattered);
}
BENCHMARK(BM_BruteScatter)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
