#include <benchmark/benchmark.h>

#include "seplat/lattice.hpp"
#include "seplat/markov.hpp"
#include "seplat/separation.hpp"
#include "seplat/sweep.hpp"

namespace {

using namespace seplat;
using lattice::CellKind;

void BM_IsSeparatedDiamond(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const MixedGraph g = lattice::build_graph(CellKind::Diamond, {0, n - 1, 0, n - 1});
  const VertexIndex a = g.index_of(lattice::diamond(1, n - 2).label());
  const VertexIndex b = g.index_of(lattice::diamond(n - 2, 1).label());
  const VertexSet par = relatives(g, {a}, Relation::Parents);
  for (auto _ : state) benchmark::DoNotOptimize(is_separated(g, {a, b, par}).separated);
}
BENCHMARK(BM_IsSeparatedDiamond)->Arg(6)->Arg(12)->Arg(24);

void BM_IsSeparatedBox(benchmark::State& state) {
  const MixedGraph g = lattice::build_graph(CellKind::Box, {0, 5, 0, 8});
  const VertexIndex a = g.index_of("b(4,2)"), b = g.index_of("b(4,6)");
  const VertexSet par = relatives(g, {a}, Relation::Parents);
  for (auto _ : state) benchmark::DoNotOptimize(is_separated(g, {a, b, par}).separated);
}
BENCHMARK(BM_IsSeparatedBox);

void BM_OracleDiamond(benchmark::State& state) {
  const MixedGraph g = lattice::build_graph(CellKind::Diamond, {0, 4, 0, 4});
  const VertexIndex a = g.index_of("d(1,3)"), b = g.index_of("d(3,1)");
  const VertexSet par = relatives(g, {a}, Relation::Parents);
  for (auto _ : state) benchmark::DoNotOptimize(is_separated_oracle(g, {a, b, par}).separated);
}
BENCHMARK(BM_OracleDiamond);

void BM_MinimalSeparator(benchmark::State& state) {
  const MixedGraph g = lattice::build_graph(CellKind::Diamond, {0, 11, 0, 11});
  const VertexIndex a = g.index_of("d(2,9)"), b = g.index_of("d(9,2)");
  for (auto _ : state) benchmark::DoNotOptimize(minimal_separator(g, a, b));
}
BENCHMARK(BM_MinimalSeparator);

void BM_DiamondSweep(benchmark::State& state) {
  const lattice::Window w{0, 5, 0, 5};
  const MixedGraph g = lattice::build_graph(CellKind::Diamond, w);
  for (auto _ : state) {
    const auto r = lattice::prop1_sweep(g, lattice::diamond(1, 4), lattice::diamond(4, 1), w,
                                        lattice::L3Variant::Classical, 9);
    benchmark::DoNotOptimize(r.shielder_off_count);
  }
}
BENCHMARK(BM_DiamondSweep)->Unit(benchmark::kMillisecond);

void BM_BoxSweep(benchmark::State& state) {
  const lattice::Window w{0, 5, 0, 8};
  const MixedGraph g = lattice::build_graph(CellKind::Box, w);
  const auto max_cells = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto r = lattice::prop1_sweep(g, lattice::box(4, 2), lattice::box(4, 6), w,
                                        lattice::L3Variant::Classical, max_cells);
    benchmark::DoNotOptimize(r.shielder_off_count);
  }
}
BENCHMARK(BM_BoxSweep)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_AncestralJoint(benchmark::State& state) {
  const MixedGraph g = lattice::build_graph(CellKind::Diamond, {0, 5, 0, 5});
  const markov::CptSet cpts = markov::random_cpts(g, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(markov::ancestral_joint(g, cpts, {"d(1,4)", "d(4,1)"}).total());
  }
}
BENCHMARK(BM_AncestralJoint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
