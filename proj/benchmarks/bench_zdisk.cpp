#include <benchmark/benchmark.h>

#include "zdisk/oracle.hpp"
#include "zdisk/unitgroup.hpp"

namespace {

using namespace zdisk;

void BM_LaurentMul(benchmark::State& state) {
  LaurentPoly p = LaurentPoly::parse("3*t^2 - t + 4 - 2*t^-1 + t^-3");
  LaurentPoly q = LaurentPoly::parse("-t^4 + 5*t - 7 + 2*t^-2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(p * q);
  }
}
BENCHMARK(BM_LaurentMul);

void BM_EmbedAndNorm(benchmark::State& state) {
  DiscriminantData ctx = analyze_discriminant(-30);
  LaurentPoly p = LaurentPoly::parse("3*t^2 - t + 4 - 2*t^-1 + t^-3");
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_norm(embed(p, ctx)));
  }
}
BENCHMARK(BM_EmbedAndNorm);

void BM_Classify(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(n));
  }
}
BENCHMARK(BM_Classify)->Arg(-4)->Arg(-30)->Arg(6);

void BM_ClassNumber(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(class_number(Int(-119)));
  }
}
BENCHMARK(BM_ClassNumber);

void BM_FundamentalUnit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fundamental_unit(Int(94)));
  }
}
BENCHMARK(BM_FundamentalUnit);

void BM_OracleEnumerate(benchmark::State& state) {
  OracleConfig cfg;
  cfg.degree_bound = 2;
  cfg.coeff_bound = (int)state.range(0);
  cfg.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_unitary(-4, cfg));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleEnumerate)->Arg(3)->Arg(6);

void BM_OracleCount(benchmark::State& state) {
  OracleConfig cfg;
  cfg.degree_bound = 2;
  cfg.coeff_bound = 4;
  cfg.threads = 1;
  auto units = enumerate_unitary(-2, cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_classes(units, -2, cfg, 2));
  }
}
BENCHMARK(BM_OracleCount);

void BM_TShiftClass(benchmark::State& state) {
  DiscriminantData ctx = analyze_discriminant(-30);
  LambdaElement t_img = embed(LaurentPoly::t(), ctx);
  LambdaElement u = lambda_pow(t_img, 23);
  LambdaElement one = LambdaElement::one(ctx);
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_shift_class(u, one, ShiftMode::t_only));
  }
}
BENCHMARK(BM_TShiftClass);

}  // namespace

BENCHMARK_MAIN();
