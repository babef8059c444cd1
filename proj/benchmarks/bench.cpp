#include <sstream>
#include <vector>

#include <benchmark/benchmark.h>

#include "sierpinski/base_graph.hpp"
#include "sierpinski/closed_form.hpp"
#include "sierpinski/sierpinski.hpp"

namespace {

using sierpinski::BaseGraph;
using sierpinski::BigInt;
using sierpinski::Params;

BaseGraph cycle4() { return BaseGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

BaseGraph petersen() {
  return BaseGraph(10, {{0, 1},
                        {1, 2},
                        {2, 3},
                        {3, 4},
                        {4, 0},
                        {0, 5},
                        {1, 6},
                        {2, 7},
                        {3, 8},
                        {4, 9},
                        {5, 7},
                        {7, 9},
                        {9, 6},
                        {6, 8},
                        {8, 5}});
}

void BM_EdgeStream(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  Params p(cycle4(), t);
  std::int64_t edges = 0;
  for (auto _ : state) {
    sierpinski::EdgeStream stream(p);
    edges = 0;
    while (auto e = stream.next()) {
      benchmark::DoNotOptimize(e->first.letters.data());
      ++edges;
    }
  }
  state.SetItemsProcessed(state.iterations() * edges);
}
BENCHMARK(BM_EdgeStream)->Arg(4)->Arg(6)->Arg(8);

void BM_DegreeSweep(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  Params p(petersen(), t);
  const int n = p.base().order();
  for (auto _ : state) {
    std::vector<int> letters(static_cast<std::size_t>(t), 0);
    long long sum = 0;
    do {
      sum += sierpinski::degree_of(p, sierpinski::Word{letters});
    } while (sierpinski::next_letters(letters, n));
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() *
                          p.explicit_vertex_count());
}
BENCHMARK(BM_DegreeSweep)->Arg(3)->Arg(4);

void BM_ClosedHistogram(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  Params p(petersen(), t);
  for (auto _ : state) {
    auto h = sierpinski::degree_histogram_closed(p);
    benchmark::DoNotOptimize(h.counts.size());
  }
}
BENCHMARK(BM_ClosedHistogram)->Arg(100)->Arg(1000)->Arg(10000);

void BM_ZagrebClosed(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  Params p(petersen(), t);
  for (auto _ : state) {
    BigInt z = sierpinski::zagreb_closed(p, 6);
    benchmark::DoNotOptimize(z.backend());
  }
}
BENCHMARK(BM_ZagrebClosed)->Arg(100)->Arg(1000)->Arg(10000);

void BM_RankRoundTrip(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  Params p(petersen(), t);
  BigInt rank = p.vertex_count() - 12345;
  for (auto _ : state) {
    auto w = sierpinski::word_unrank(p, rank);
    benchmark::DoNotOptimize(sierpinski::word_rank(p, w).backend());
  }
}
BENCHMARK(BM_RankRoundTrip)->Arg(100)->Arg(1000);

void BM_ParseEdgeList(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  const std::string text = sierpinski::serialize_edge_list(BaseGraph(n, edges));
  for (auto _ : state) {
    std::istringstream in(text);
    auto g = sierpinski::parse_edge_list(in);
    benchmark::DoNotOptimize(g.edge_count());
  }
  state.SetBytesProcessed(state.iterations() *
                          static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_ParseEdgeList)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
