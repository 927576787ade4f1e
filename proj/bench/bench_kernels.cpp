#include <benchmark/benchmark.h>

#include <random>

#include "nichols/analysis.hpp"
#include "nichols/catalog.hpp"
#include "nichols/kernels.hpp"

namespace {

struct PowerInput {
  nichols::BraidingMatrix q;
  std::vector<nichols::RootVector> roots;
  std::vector<std::int64_t> orders;
};

struct ScanInput {
  std::vector<nichols::IntMatrix> reflections;
  std::vector<nichols::RootVector> betas;
  std::vector<nichols::RootVector> system;
};

const nichols::Analysis& ufo2() {
  static const nichols::Analysis an = [] {
    return nichols::analyze(nichols::read_matrix_file(nichols::default_fixture_dir() / "ufo2.nq"));
  }();
  return an;
}

// Every positive root of ufo(2) with its order, repeated with random signs
// until there are `count` of them; the condition holds on all of them.
PowerInput power_input(std::size_t count) {
  const auto& an = ufo2();
  PowerInput in{an.roots.matrix(), {}, {}};
  std::mt19937 rng(7);
  while (in.roots.size() < count) {
    for (const auto& d : an.roots.cartan) {
      if (in.roots.size() == count) break;
      in.roots.push_back(rng() % 2 ? d.beta : nichols::operator-(d.beta));
      in.orders.push_back(d.n_beta);
    }
  }
  return in;
}

ScanInput scan_input() {
  const auto& an = ufo2();
  ScanInput in;
  for (const auto& r : an.reflections) {
    in.reflections.push_back(r.matrix);
    in.betas.push_back(r.root);
  }
  in.system = an.omega.full();
  return in;
}

void BM_RootPowerSerial(benchmark::State& state) {
  const auto in = power_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nichols::kernels::root_power_violation_serial(in.q, in.roots, in.orders));
  }
  state.SetComplexityN(state.range(0));
}

void BM_RootPowerParallel(benchmark::State& state) {
  const auto in = power_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nichols::kernels::root_power_violation(in.q, in.roots, in.orders));
  }
  state.SetComplexityN(state.range(0));
}

void BM_ScanReflectionsSerial(benchmark::State& state) {
  const auto in = scan_input();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nichols::kernels::scan_reflections_serial(in.reflections, in.betas, in.system));
  }
}

void BM_ScanReflectionsParallel(benchmark::State& state) {
  const auto in = scan_input();
  for (auto _ : state) {
    benchmark::DoNotOptimize(nichols::kernels::scan_reflections(in.reflections, in.betas, in.system));
  }
}

void BM_VerifyTables(benchmark::State& state) {
  const auto fixtures = nichols::fixtures();
  for (auto _ : state) benchmark::DoNotOptimize(nichols::verify_tables(fixtures));
}

}  // namespace

BENCHMARK(BM_RootPowerSerial)->RangeMultiplier(4)->Range(36, 1024)->Complexity();
BENCHMARK(BM_RootPowerParallel)->RangeMultiplier(4)->Range(36, 1024)->Complexity();
BENCHMARK(BM_ScanReflectionsSerial);
BENCHMARK(BM_ScanReflectionsParallel);
BENCHMARK(BM_VerifyTables)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
