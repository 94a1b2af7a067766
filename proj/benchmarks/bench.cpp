#include "tlg/apv.hpp"
#include "tlg/experiment.hpp"
#include "tlg/henneberg.hpp"
#include "tlg/walks.hpp"

#include <benchmark/benchmark.h>

using namespace tlg;

namespace {

TlgInstance instance(int n) { return make_random_instance(n, 7); }

void bm_triangle_enumeration(benchmark::State& state) {
  Graph g = rhc_execute(random_rhc((int)state.range(0), 7));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triangles(g));
}
BENCHMARK(bm_triangle_enumeration)->Arg(16)->Arg(64)->Arg(256);

void bm_recognition(benchmark::State& state) {
  Graph g = rhc_execute(random_rhc((int)state.range(0), 7));
  for (auto _ : state) benchmark::DoNotOptimize(rhc_recognize(g));
}
BENCHMARK(bm_recognition)->Arg(16)->Arg(64)->Arg(256);

void bm_structured_product_step(benchmark::State& state) {
  TlgInstance inst = instance((int)state.range(0));
  auto walk = periodic_exhaustive_walk(inst.d, 0, 4096);
  ProductAccumulator acc(inst.g.node_count());
  size_t i = 0;
  for (auto _ : state) {
    const TriId t = walk[i++ % walk.size()];
    acc.apply(inst.d.triangles()[t], inst.w.at(t));
    benchmark::DoNotOptimize(acc.value());
  }
}
BENCHMARK(bm_structured_product_step)->Arg(16)->Arg(64)->Arg(256);

void bm_closed_form_limits(benchmark::State& state) {
  TlgInstance inst = instance((int)state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(normalized_apv(inst.d, inst.w, 0));
}
BENCHMARK(bm_closed_form_limits)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
