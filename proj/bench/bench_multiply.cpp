#include <benchmark/benchmark.h>

#include "quatinv/gauge.hpp"
#include "quatinv/sampling.hpp"

using namespace quatinv;

namespace {

// m quaternion factors (t1 + k, t2 - k) over Q((t1))((t2)), dense random elements.
PresentationPtr presentation(std::size_t m) {
  Field Q = Field::rational();
  std::vector<std::pair<LaurentScalar, LaurentScalar>> factors;
  std::vector<std::pair<int, int>> signs;
  for (std::size_t k = 0; k < m; ++k) {
    long c = static_cast<long>(k) + 1;
    factors.emplace_back(LaurentScalar::variable(Q, 2, 0) * LaurentScalar::from_int(Q, 2, c),
                         LaurentScalar::variable(Q, 2, 1) * LaurentScalar::from_int(Q, 2, -c));
    signs.emplace_back(-1, -1);
  }
  return share(ArmaturePresentation::standard(factors, signs));
}

std::pair<ArmatureElement, ArmatureElement> operands(std::size_t m) {
  auto P = presentation(m);
  Rng rng(17);
  SampleOptions opt;
  opt.unit_factors = false;
  std::size_t terms = P->group_size();
  return {random_element(P, rng, terms, opt), random_element(P, rng, terms, opt)};
}

void BM_MultiplySerial(benchmark::State& state) {
  auto [x, y] = operands(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(x, y));
}

void BM_MultiplyParallel(benchmark::State& state) {
  auto [x, y] = operands(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(x, y));
}

void BM_GaugeSpecial(benchmark::State& state) {
  auto P = presentation(2);
  ArmatureGauge G(P);
  Rng rng(5);
  std::vector<ArmatureElement> samples;
  for (int k = 0; k < state.range(0); ++k) samples.push_back(random_element(P, rng));
  for (auto _ : state) benchmark::DoNotOptimize(check_special(G, samples));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GaugeSpecial)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
