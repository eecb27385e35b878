#include <benchmark/benchmark.h>

#include "llg/canonical.hpp"
#include "llg/catalog.hpp"
#include "llg/sampling.hpp"
#include "llg/verify.hpp"

namespace {

const llg::Framing& affine_product() {
  static const llg::Framing f(llg::get_example("affine_product").spec);
  return f;
}

const llg::Point& sample() {
  static const llg::Point p = llg::sample_points(affine_product().domain(), 1, 42).front();
  return p;
}

void BM_JetProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const llg::Jet2 a = llg::Jet2::variable(0.3, 0, n);
  const llg::Jet2 b = llg::Jet2::variable(1.7, n - 1, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b / (a + b));
  }
}
BENCHMARK(BM_JetProduct)->Arg(2)->Arg(4)->Arg(8);

void BM_EvalFrames(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(affine_product().eval_frames(sample()));
}
BENCHMARK(BM_EvalFrames);

void BM_StructureConstants(benchmark::State& state) {
  const llg::FrameJets fj = affine_product().eval_frames(sample());
  for (auto _ : state) benchmark::DoNotOptimize(llg::structure_constants(fj));
}
BENCHMARK(BM_StructureConstants);

void BM_LinearCurvature(benchmark::State& state) {
  const llg::FrameJets fj = affine_product().eval_frames(sample());
  for (auto _ : state) benchmark::DoNotOptimize(llg::linear_curvature(fj));
}
BENCHMARK(BM_LinearCurvature);

void BM_NijenhuisDirect(benchmark::State& state) {
  const llg::FrameJets fj = affine_product().eval_frames(sample());
  for (auto _ : state) benchmark::DoNotOptimize(llg::nijenhuis_direct(fj));
}
BENCHMARK(BM_NijenhuisDirect);

void BM_NijenhuisViaTorsion(benchmark::State& state) {
  const llg::FrameJets fj = affine_product().eval_frames(sample());
  for (auto _ : state) benchmark::DoNotOptimize(llg::nijenhuis_via_torsion(fj));
}
BENCHMARK(BM_NijenhuisViaTorsion);

void BM_MetricCurvature(benchmark::State& state) {
  const llg::FrameJets fj = affine_product().eval_frames(sample());
  for (auto _ : state) benchmark::DoNotOptimize(llg::metric_curvature(fj));
}
BENCHMARK(BM_MetricCurvature);

void BM_Develop(benchmark::State& state) {
  const llg::Framing f(llg::get_example("affine2").spec);
  const std::vector<double> x0{1.0, 0.0};
  const std::vector<double> y0{3.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(llg::develop(f, x0, y0, {{2.0, 0.0}}));
}
BENCHMARK(BM_Develop);

void BM_VerifySuite(benchmark::State& state) {
  llg::RunConfig c;
  c.points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(llg::run_verify(affine_product(), c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_VerifySuite)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
