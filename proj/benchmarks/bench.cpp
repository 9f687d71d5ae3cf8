#include <benchmark/benchmark.h>

#include "sgholder/campanato.hpp"
#include "sgholder/gamma.hpp"
#include "sgholder/holder.hpp"
#include "sgholder/models.hpp"
#include "sgholder/quantum_torus.hpp"
#include "sgholder/riesz_morrey.hpp"
#include "sgholder/sampling.hpp"
#include "sgholder/semigroup.hpp"

using namespace sgholder;

namespace {

Matrix theta(double t) {
  Matrix th(2, 2);
  th << 0.0, t, -t, 0.0;
  return th;
}

void BM_PoissonApplyCycle(benchmark::State& state) {
  const auto m = models::chain(models::cycle(static_cast<int>(state.range(0))), "C");
  const Function f = random_test_function(*m, 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(semigroup::poisson_apply(*m, 0.5, f));
}
BENCHMARK(BM_PoissonApplyCycle)->Arg(16)->Arg(64)->Arg(256);

void BM_PoissonApplyTorus(benchmark::State& state) {
  const auto t = models::torus(2, static_cast<int>(state.range(0)));
  const Function f = random_test_function(*t, 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(semigroup::poisson_apply(*t, 0.05, f));
}
BENCHMARK(BM_PoissonApplyTorus)->Arg(8)->Arg(32);

void BM_HolderSeminorm(benchmark::State& state) {
  const auto m = models::chain(models::cycle(16), "C16");
  const Function f = random_test_function(*m, 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(holder::holder_seminorm(*m, f, 0.5).value);
}
BENCHMARK(BM_HolderSeminorm);

void BM_Gamma2Check(benchmark::State& state) {
  const auto m = models::chain(models::cycle(static_cast<int>(state.range(0))), "C");
  for (auto _ : state) benchmark::DoNotOptimize(calculus::gamma2_psd_check(*m).min_eigenvalue);
}
BENCHMARK(BM_Gamma2Check)->Arg(16)->Arg(64);

void BM_CarlesonSeminorm(benchmark::State& state) {
  const auto m = models::chain(models::cycle(16), "C16");
  const Function f = random_test_function(*m, 1, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(campanato::carleson_seminorm(*m, f, 0.5, campanato::Form::GammaHat).value);
}
BENCHMARK(BM_CarlesonSeminorm);

void BM_QuantumTorusNorm(benchmark::State& state) {
  const auto e = qt::random_element(2, theta(0.3), 17, 0);
  for (auto _ : state)
    benchmark::DoNotOptimize(qt::operator_norm_on_box(e, static_cast<int>(state.range(0)), 1e-6));
}
BENCHMARK(BM_QuantumTorusNorm)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_QuantumHolderSeminorm(benchmark::State& state) {
  const auto e = qt::random_element(2, theta(0.3), 17, 0);
  qt::NormOptions opt;
  opt.check_boundary = false;
  for (auto _ : state) benchmark::DoNotOptimize(holder::qt_holder_seminorm(e, 0.5, opt).value);
}
BENCHMARK(BM_QuantumHolderSeminorm)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_CogrowthEstimate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(riesz::cogrowth_estimate(2, 4.0).verdict);
}
BENCHMARK(BM_CogrowthEstimate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
