#include <benchmark/benchmark.h>

#include <random>

#include "actforge/congruence.hpp"
#include "actforge/diagonal.hpp"
#include "actforge/family.hpp"
#include "actforge/suite.hpp"

namespace {

using namespace actforge;

std::vector<ElemPair> random_pairs(const FiniteAct& a, std::size_t k,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ElemPair> pairs;
  for (std::size_t i = 0; i < k; ++i) {
    pairs.push_back({static_cast<Elem>(rng() % a.size()),
                     static_cast<Elem>(rng() % a.size())});
  }
  return pairs;
}

void BM_closure_union_find(benchmark::State& state) {
  const auto s3 = symmetric_group(3);
  const FiniteAct diag = diagonal_act(s3).act;
  const auto pairs = random_pairs(diag, state.range(0), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(congruence_closure(diag, pairs));
  }
}
BENCHMARK(BM_closure_union_find)->Arg(2)->Arg(8)->Arg(32);

void BM_closure_naive_fixpoint(benchmark::State& state) {
  const auto s3 = symmetric_group(3);
  const FiniteAct rr = right_regular_act(s3);
  const auto pairs = random_pairs(rr, state.range(0), 42);
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_closure_partition(rr, pairs));
  }
}
BENCHMARK(BM_closure_naive_fixpoint)->Arg(2)->Arg(8);

void BM_connect_sequence(benchmark::State& state) {
  const auto s3 = symmetric_group(3);
  const FiniteAct diag = diagonal_act(s3).act;
  const auto pairs = random_pairs(diag, 8, 7);
  const auto closure = congruence_closure(diag, pairs);
  // pick a connected pair to search for
  Elem from = 0, to = 0;
  for (Elem a = 0; a < diag.size() && to == 0; ++a) {
    for (Elem b = a + 1; b < diag.size(); ++b) {
      if (closure.same(a, b)) {
        from = a;
        to = b;
        break;
      }
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(connect_sequence(diag, pairs, from, to));
  }
}
BENCHMARK(BM_connect_sequence);

}  // namespace
