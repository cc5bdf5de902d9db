#include <benchmark/benchmark.h>

#include "g2amb/models.hpp"
#include "g2amb/riemann.hpp"

using namespace g2a;

namespace {

const Tensor& ambient(bool fq) {
  static const SymbolTable symbols = model_symbols();
  static const Tensor gi = build_i_model(parse("I", symbols)).g_amb.tensor();
  static const Tensor gf = build_fq_model(parse("F", symbols)).g_amb.tensor();
  return fq ? gf : gi;
}

// state.range(0): family (0 = I, 1 = F), state.range(1): threads (1 is the serial path)
void BM_Christoffel(benchmark::State& state) {
  const Tensor& g = ambient(state.range(0) == 1);
  Exec exec = Exec::with_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) {
    MetricField m(ambient_chart(), g, exec);
    benchmark::DoNotOptimize(m.christoffel().size());
  }
}

void BM_Riemann(benchmark::State& state) {
  MetricField m(ambient_chart(), ambient(state.range(0) == 1), Exec::with_threads(static_cast<int>(state.range(1))));
  for (auto _ : state) {
    Curvature c = riemann_ricci(m);
    benchmark::DoNotOptimize(c.down.size());
  }
}

void BM_CovariantDerivative(benchmark::State& state) {
  MetricField m(ambient_chart(), ambient(state.range(0) == 1), Exec::with_threads(static_cast<int>(state.range(1))));
  Curvature c = riemann_ricci(m);
  for (auto _ : state) {
    Tensor d = covariant_derivative(m, c.down);
    benchmark::DoNotOptimize(d.size());
  }
}

void Args(benchmark::internal::Benchmark* b) {
  for (int family : {0, 1})
    for (int threads : {1, 2, 4}) b->Args({family, threads});
  b->ArgNames({"family", "threads"})->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_Christoffel)->Apply(Args);
BENCHMARK(BM_Riemann)->Apply(Args);
BENCHMARK(BM_CovariantDerivative)->Apply(Args);

BENCHMARK_MAIN();
