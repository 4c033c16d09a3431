#include <benchmark/benchmark.h>

#include "minorlab/chromatic.hpp"
#include "minorlab/contraction.hpp"
#include "minorlab/graph.hpp"
#include "minorlab/minor.hpp"
#include "minorlab/transparency.hpp"

namespace {

using minorlab::Graph;
using minorlab::TransparencyMatrix;

Graph random_connected(int n, double p) {
  for (std::uint64_t seed = 1;; ++seed) {
    Graph g = minorlab::make_gnp(n, p, seed);
    if (g.is_connected()) return g;
  }
}

std::pair<int, int> first_edge(const Graph& g) {
  for (int a : g.vertices())
    for (int b : g.vertices())
      if (a < b && g.has_edge(a, b)) return {a, b};
  return {-1, -1};
}

void BM_TransparencyCompute(benchmark::State& state) {
  const Graph g = minorlab::make_gnp(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(TransparencyMatrix::compute(g));
}
BENCHMARK(BM_TransparencyCompute)->Arg(8)->Arg(16)->Arg(32)->Arg(62);

// Incremental update of the distance matrix after one contraction ...
void BM_UpdateExact(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 0.3);
  const TransparencyMatrix t = TransparencyMatrix::compute(g);
  const auto [a, b] = first_edge(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(minorlab::update_exact(t, g, a, b));
}
BENCHMARK(BM_UpdateExact)->Arg(16)->Arg(32)->Arg(62);

// ... versus recomputing the matrix from the contracted graph.
void BM_RecomputeAfterContraction(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 0.3);
  const auto [a, b] = first_edge(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        TransparencyMatrix::compute(g.contract_edge(a, b)));
}
BENCHMARK(BM_RecomputeAfterContraction)->Arg(16)->Arg(32)->Arg(62);

void BM_GreedyContract(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 0.4);
  for (auto _ : state) benchmark::DoNotOptimize(minorlab::greedy_contract(g));
}
BENCHMARK(BM_GreedyContract)->Arg(10)->Arg(20)->Arg(40);

void BM_ChromaticNumber(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state)
    benchmark::DoNotOptimize(minorlab::chromatic_number(g));
}
BENCHMARK(BM_ChromaticNumber)->Arg(10)->Arg(14)->Arg(16);

void BM_HadwigerOracle(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 0.4);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        minorlab::hadwiger_number(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HadwigerOracle)->Arg(7)->Arg(8)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
