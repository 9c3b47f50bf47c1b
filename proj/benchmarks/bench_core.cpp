#include <benchmark/benchmark.h>

#include "riesz/certifier.hpp"
#include "riesz/energy.hpp"
#include "riesz/named_configs.hpp"
#include "riesz/optimizer.hpp"

namespace {

riesz::Configuration random_config(int d, int n) {
  return riesz::generate_named(riesz::NamedConfigSpec{riesz::NamedKind::Random, d, n, 1234});
}

void BM_Energy(benchmark::State& state) {
  const riesz::Configuration config = random_config(2, static_cast<int>(state.range(0)));
  const riesz::RieszParams params(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(riesz::energy(config, params).scaled);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Energy)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Gradient(benchmark::State& state) {
  const riesz::Configuration config = random_config(2, static_cast<int>(state.range(0)));
  const riesz::RieszParams params(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(riesz::gradient_norm(riesz::riemannian_gradient(config, params)));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gradient)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_SecondVariation(benchmark::State& state) {
  const riesz::Configuration config = random_config(2, static_cast<int>(state.range(0)));
  const riesz::RieszParams params(1.0);
  riesz::Rng rng(7);
  riesz::Perturbation pert = riesz::zero_perturbation(config);
  for (int i = 0; i < config.size(); ++i) {
    pert.tangents[static_cast<size_t>(i)] = riesz::sample_equator(config[i], rng);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(riesz::second_variation(config, params, pert));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SecondVariation)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Hessian(benchmark::State& state) {
  const riesz::Configuration config = random_config(2, static_cast<int>(state.range(0)));
  const riesz::RieszParams params(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(riesz::hessian(config, params).norm());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hessian)->RangeMultiplier(2)->Range(4, 16)->Complexity();

void BM_MinimizeTetrahedron(benchmark::State& state) {
  const riesz::Configuration start = random_config(2, 4);
  const riesz::RieszParams params(1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(riesz::minimize(start, params, riesz::OptimizerSettings{}));
  }
}
BENCHMARK(BM_MinimizeTetrahedron)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  const riesz::Configuration config =
      riesz::generate_named(riesz::NamedConfigSpec{riesz::NamedKind::Ngon, 1, 12, 0});
  const riesz::RieszParams params(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(riesz::certify_not_max(config, params, 5));
  }
}
BENCHMARK(BM_Certify);

}  // namespace

BENCHMARK_MAIN();
