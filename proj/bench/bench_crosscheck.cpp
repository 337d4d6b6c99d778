#include <ckindex/aps_index.hpp>
#include <ckindex/graph_ktheory.hpp>

#include <benchmark/benchmark.h>

#include <memory>

using namespace ckindex;

namespace {

GraphPtr cycle3() {
  return std::make_shared<const Graph>(parse_graph(
      "vertex x\nvertex y\nvertex z\nedge a x y\nedge b y z\nedge c z x\nedge d x z\nedge f y x\n"));
}

GraphPtr cuntz(int n) {
  std::string text = "vertex v\n";
  for (int i = 0; i < n; ++i) text += "edge e" + std::to_string(i) + " v v\n";
  return std::make_shared<const Graph>(parse_graph(text));
}

void BM_Crosscheck(benchmark::State& state, Execution exec) {
  const GraphPtr g = state.range(0) == 0 ? cycle3() : cuntz(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pairing_crosscheck(g, 3, exec).all_agree);
}

void BM_Exactness(benchmark::State& state, Execution exec) {
  const GraphPtr g = state.range(0) == 0 ? cycle3() : cuntz(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exactness_report(g, 3, exec).composite_zero);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Crosscheck, serial, Execution::serial)->Arg(0)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Crosscheck, parallel, Execution::parallel)->Arg(0)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Exactness, serial, Execution::serial)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Exactness, parallel, Execution::parallel)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
