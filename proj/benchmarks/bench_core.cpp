#include <benchmark/benchmark.h>

#include "bsfan/cone_a.hpp"
#include "bsfan/cone_s.hpp"
#include "bsfan/diagrams.hpp"
#include "bsfan/pairing.hpp"

using namespace bsfan;

namespace {

DegreeSequence linear_sequence(int codim, int gap) {
  std::vector<int> degrees;
  for (int k = 0; k <= codim; ++k) degrees.push_back(k * gap);
  return DegreeSequence(0, degrees);
}

void BM_PureDiagram(benchmark::State& state) {
  const auto d = linear_sequence(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(pure_diagram(d));
}
BENCHMARK(BM_PureDiagram)->DenseRange(2, 10, 4);

void BM_PairSupernatural(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BettiTable b = pure_diagram(linear_sequence(n + 1, 2), n);
  std::vector<int> roots;
  for (int k = 0; k < n; ++k) roots.push_back(-2 * k - 1);
  const CohomologyEvaluator e = SupernaturalSheaf(roots, 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(pair(b, e, n));
}
BENCHMARK(BM_PairSupernatural)->DenseRange(2, 6, 2);

void BM_DecomposeChain(benchmark::State& state) {
  const int n = 3;
  const int length = static_cast<int>(state.range(0));
  BettiTable b;
  std::vector<int> degrees{0, 1, 2, 3, 4};
  for (int k = 0; k < length; ++k) {
    b = b + pure_diagram(DegreeSequence(0, degrees), n);
    ++degrees[static_cast<std::size_t>(4 - k % 4)];
    for (std::size_t p = 1; p < degrees.size(); ++p)
      if (degrees[p] <= degrees[p - 1]) degrees[p] = degrees[p - 1] + 1;
  }
  const auto c = CodimensionSequence::constant(CodimValue::finite(n + 1), n);
  for (auto _ : state) benchmark::DoNotOptimize(decompose_s(b, c, n));
}
BENCHMARK(BM_DecomposeChain)->RangeMultiplier(2)->Range(2, 16);

void BM_MinChi(benchmark::State& state) {
  const BettiTable b = pure_diagram(linear_sequence(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(min_chi(b, chi_window(b)));
}
BENCHMARK(BM_MinChi)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
