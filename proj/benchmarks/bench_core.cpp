#include <benchmark/benchmark.h>

#include "bsym/bsymbol.hpp"
#include "bsym/codes.hpp"
#include "bsym/cyclotomy.hpp"
#include "bsym/enumerators.hpp"
#include "bsym/hierarchy.hpp"

namespace {

void BM_FieldMul(benchmark::State& state) {
  auto f = bsym::make_field(3, 8);
  bsym::Elem x = 5;
  for (auto _ : state) {
    x = f->mul(f->add(x, 7), 11);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul);

void BM_WeightB(benchmark::State& state) {
  auto code = bsym::build_code(2, 1, 12, 1);
  auto c = code.codeword_from_exponent(17);
  const auto b = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bsym::w_b(c, b));
}
BENCHMARK(BM_WeightB)->Arg(1)->Arg(4)->Arg(8);

void BM_PeriodSystem(benchmark::State& state) {
  auto f = bsym::make_field(2, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bsym::period_system(*f, 3));
}
BENCHMARK(BM_PeriodSystem)->Arg(8)->Arg(12);

void BM_UProfile(benchmark::State& state) {
  auto code = bsym::build_code(2, 2, 8, 4369);
  for (auto _ : state) benchmark::DoNotOptimize(bsym::u_profile(code, 5));
}
BENCHMARK(BM_UProfile);

void BM_ClosedFormWeight(benchmark::State& state) {
  auto code = bsym::build_code(2, 1, 12, 3);
  auto ps = bsym::period_system(*code.big(), code.N1());
  auto up = bsym::u_profile(code, 4);
  for (auto _ : state) benchmark::DoNotOptimize(bsym::closed_form_weight(code, 4, 1, ps, up));
}
BENCHMARK(BM_ClosedFormWeight);

void BM_ClassWeights(benchmark::State& state) {
  auto code = bsym::build_code(2, 1, 12, 3);
  for (auto _ : state) benchmark::DoNotOptimize(bsym::class_weights(code, 4));
}
BENCHMARK(BM_ClassWeights);

void BM_GhwBrute(benchmark::State& state) {
  auto code = bsym::build_code(2, 1, 8, 5);
  for (auto _ : state) benchmark::DoNotOptimize(bsym::ghw_brute(code, 2));
}
BENCHMARK(BM_GhwBrute);

}  // namespace

BENCHMARK_MAIN();
