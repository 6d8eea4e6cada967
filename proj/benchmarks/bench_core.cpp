#include <benchmark/benchmark.h>

#include "cubicbasis/factor.hpp"
#include "cubicbasis/pipeline.hpp"

namespace {

using namespace cubic;

Poly random_dense(const Field& f, int deg, Rng& rng) {
  std::vector<FElem> coeffs;
  for (int i = 0; i <= deg; ++i)
    coeffs.push_back(f.elem_at(rng() % f.order()));
  if (f.is_zero(coeffs.back())) coeffs.back() = f.one();
  return Poly::from_coeffs(f, std::move(coeffs));
}

void BM_poly_mul(benchmark::State& state) {
  Field f = Field::make(5);
  Rng rng(42);
  Poly a = random_dense(f, static_cast<int>(state.range(0)), rng);
  Poly b = random_dense(f, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_poly_mul)->Arg(16)->Arg(64)->Arg(256);

void BM_factor(benchmark::State& state) {
  Field f = Field::make(5);
  Rng rng(7);
  Poly a = random_dense(f, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(factor(a, 1));
}
BENCHMARK(BM_factor)->Arg(8)->Arg(16)->Arg(32);

void BM_pipeline(benchmark::State& state) {
  JobSpec job;
  job.field = Field::make(5);
  job.coeff = RatFn(Poly::one(job.field), Poly::from_ints(job.field, {0, 1}));
  job.level = VerifyLevel::full;
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(job));
}
BENCHMARK(BM_pipeline);

void BM_pipeline_p3(benchmark::State& state) {
  JobSpec job;
  job.field = Field::make(3);
  job.coeff = RatFn(Poly::one(job.field), Poly::from_ints(job.field, {0, 1}));
  job.mode = JobSpec::Mode::coeff_b;
  job.level = VerifyLevel::full;
  for (auto _ : state) benchmark::DoNotOptimize(run_pipeline(job));
}
BENCHMARK(BM_pipeline_p3);

}  // namespace
