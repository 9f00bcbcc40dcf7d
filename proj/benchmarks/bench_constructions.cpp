#include <benchmark/benchmark.h>

#include "actforge/diagonal.hpp"
#include "actforge/direct_product.hpp"
#include "actforge/family.hpp"
#include "actforge/presentation.hpp"
#include "actforge/wreath.hpp"

namespace {

using namespace actforge;

void BM_wreath_monoid_build(benchmark::State& state) {
  const auto z2 = cyclic_monoid(2);
  const auto z3 = cyclic_monoid(3);
  const FiniteAct a = right_regular_act(z2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wreath_monoid(z2, z3, a));  // |W| = 18, validated
  }
}
BENCHMARK(BM_wreath_monoid_build);

void BM_presentation_oracle(benchmark::State& state) {
  const auto s3 = symmetric_group(3);
  const FiniteAct rr = right_regular_act(s3);
  std::vector<Elem> all(s3->order());
  for (Elem e = 0; e < s3->order(); ++e) all[e] = e;
  const auto can = canonical_presentation(rr, all);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_presentation_of(can.pres, rr, can.assign));
  }
}
BENCHMARK(BM_presentation_oracle);

void BM_reduce_presentation(benchmark::State& state) {
  const auto z3 = cyclic_monoid(3);
  const FiniteAct rr = right_regular_act(z3);
  std::vector<Elem> all{0, 1, 2};
  const auto can = canonical_presentation(rr, all);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_presentation(can.pres, rr, can.assign));
  }
}
BENCHMARK(BM_reduce_presentation);

void BM_square_generating_set(benchmark::State& state) {
  const auto t2 = full_transformation_monoid(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(square_generating_set(t2));
  }
}
BENCHMARK(BM_square_generating_set);

void BM_dp_presentation_z2(benchmark::State& state) {
  const auto z2 = cyclic_monoid(2);
  const FiniteAct rr = right_regular_act(z2);
  const std::vector<Elem> x{0}, u{0, 1};
  const auto s = dp_setup(rr, x, rr, x, u, u);
  auto pa = presentation_on_generators(rr, x);
  auto pd = diagonal_uv_presentation(z2, u, u);
  pd.pres = reduce_presentation(pd.pres, diagonal_act(z2).act, pd.assign);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dp_presentation(s, pa.pres, pa.pres, pd.pres));
  }
}
BENCHMARK(BM_dp_presentation_z2);

}  // namespace

BENCHMARK_MAIN();
