#include <benchmark/benchmark.h>

#include "prachseq/correlate.hpp"
#include "prachseq/detect.hpp"
#include "prachseq/experiment.hpp"
#include "prachseq/fft.hpp"
#include "prachseq/metrics.hpp"
#include "prachseq/preamble_set.hpp"
#include "prachseq/rng.hpp"
#include "prachseq/zadoff_chu.hpp"

namespace {

using namespace prachseq;

void BM_FftForward139(benchmark::State& state) {
  FftPlan plan(139);
  FftScratch ws;
  ComplexSequence x = zc_root(1, 139);
  std::vector<Complex> out(139);
  for (auto _ : state) {
    plan.forward(x.data(), out.data(), ws);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_FftForward139);

void BM_FftForward4096(benchmark::State& state) {
  FftPlan plan(4096);
  FftScratch ws;
  std::vector<Complex> x(4096, Complex(1.0, 0.0)), out(4096);
  for (auto _ : state) {
    plan.forward(x.data(), out.data(), ws);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_FftForward4096);

void BM_CorrelateNaive139(benchmark::State& state) {
  ComplexSequence x = zc_root(1, 139), y = zc_root(2, 139);
  for (auto _ : state) {
    auto prof = periodic_correlation_naive(x, y);
    benchmark::DoNotOptimize(prof.values.data());
  }
}
BENCHMARK(BM_CorrelateNaive139);

void BM_CorrelateFft139(benchmark::State& state) {
  ComplexSequence x = zc_root(1, 139), y = zc_root(2, 139);
  for (auto _ : state) {
    auto prof = periodic_correlation_fft(x, y);
    benchmark::DoNotOptimize(prof.values.data());
  }
}
BENCHMARK(BM_CorrelateFft139);

void BM_NoiseTrial(benchmark::State& state) {
  const PreambleSet set = build_preamble_set(Family::ZC, 139, 11);
  const RootCorrelator corr(set.roots);
  PdpMatrix pdp = corr.make_pdp();
  ComplexSequence noise(139);
  FftScratch ws;
  std::uint64_t trial = 0;
  for (auto _ : state) {
    TrialRng rng = TrialRng::for_trial(1, "bench", trial++);
    for (auto& row : pdp.rows) std::fill(row.begin(), row.end(), 0.0);
    pdp.antenna_count = 0;
    for (auto& v : noise) v = rng.cgaussian(0.7071067811865476);
    corr.accumulate(noise, pdp, ws);
    auto out = normalize_and_threshold(pdp, 13.7, set.n_cs, kCellPreambleCount);
    benchmark::DoNotOptimize(out.peak_value);
  }
}
BENCHMARK(BM_NoiseTrial);

void BM_NoiseGenOnly(benchmark::State& state) {
  ComplexSequence noise(139);
  std::uint64_t trial = 0;
  for (auto _ : state) {
    TrialRng rng = TrialRng::for_trial(1, "bench", trial++);
    for (auto& v : noise) v = rng.cgaussian(0.7071067811865476);
    benchmark::DoNotOptimize(noise.data());
  }
}
BENCHMARK(BM_NoiseGenOnly);

void BM_OfdmMetrics(benchmark::State& state) {
  ComplexSequence seq = zc_root(5, 139);
  for (auto _ : state) {
    ComplexSequence sig = synthesize_ofdm(seq, OfdmConfig{});
    const double p = papr_db(sig);
    const double c = cubic_metric_db(sig);
    benchmark::DoNotOptimize(p + c);
  }
}
BENCHMARK(BM_OfdmMetrics);

}  // namespace

BENCHMARK_MAIN();
