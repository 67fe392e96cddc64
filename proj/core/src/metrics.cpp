#include "prachseq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "prachseq/fft.hpp"

namespace prachseq {

ComplexSequence synthesize_ofdm(const ComplexSequence& seq, const OfdmConfig& cfg) {
  if (seq.empty()) throw std::invalid_argument("synthesize_ofdm: empty sequence");
  if (cfg.ifft_size < 1 || cfg.cp_length < 0 || cfg.cp_length >= cfg.ifft_size)
    throw std::invalid_argument("synthesize_ofdm: bad ifft_size / cp_length");
  if (cfg.mapping_start < 0 ||
      cfg.mapping_start + static_cast<int>(seq.size()) > cfg.ifft_size)
    throw std::invalid_argument("synthesize_ofdm: subcarrier mapping overflows the grid");

  const std::size_t L = seq.size();
  FftPlan seq_plan(L);
  std::vector<Complex> bins = seq_plan.forward(seq);
  const double fwd_scale = 1.0 / std::sqrt(static_cast<double>(L));

  std::vector<Complex> grid(static_cast<std::size_t>(cfg.ifft_size), Complex(0.0, 0.0));
  for (std::size_t i = 0; i < L; ++i)
    grid[static_cast<std::size_t>(cfg.mapping_start) + i] = bins[i] * fwd_scale;

  FftPlan time_plan(static_cast<std::size_t>(cfg.ifft_size));
  std::vector<Complex> body = time_plan.inverse(grid);
  const double inv_scale = std::sqrt(static_cast<double>(cfg.ifft_size));
  for (Complex& v : body) v *= inv_scale;

  ComplexSequence out;
  out.reserve(body.size() + static_cast<std::size_t>(cfg.cp_length));
  out.insert(out.end(), body.end() - cfg.cp_length, body.end());
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

double papr_db(const ComplexSequence& x) {
  if (x.empty()) throw std::invalid_argument("papr: empty signal");
  double peak = 0.0;
  double sum = 0.0;
  for (const Complex& v : x) {
    const double p = v.real() * v.real() + v.imag() * v.imag();
    peak = std::max(peak, p);
    sum += p;
  }
  if (sum <= 0.0) throw std::domain_error("papr: all-zero signal has no defined ratio");
  const double mean = sum / static_cast<double>(x.size());
  return 10.0 * std::log10(peak / mean);
}

double cubic_metric_db(const ComplexSequence& x) {
  if (x.empty()) throw std::invalid_argument("cubic_metric: empty signal");
  double sum2 = 0.0;
  double sum6 = 0.0;
  for (const Complex& v : x) {
    const double p = v.real() * v.real() + v.imag() * v.imag();
    sum2 += p;
    sum6 += p * p * p;
  }
  if (sum2 <= 0.0) throw std::domain_error("cubic_metric: zero rms");
  const double n = static_cast<double>(x.size());
  const double rms2 = sum2 / n;          // rms[x]^2
  const double mean6 = sum6 / n;         // mean |x|^6
  const double rms_cubed_norm = std::sqrt(mean6 / (rms2 * rms2 * rms2));
  return (20.0 * std::log10(rms_cubed_norm) - 1.52) / 1.56;
}

double CdfCurve::percentile(double q) const {
  if (values.empty()) throw std::invalid_argument("percentile: empty CDF");
  if (!(q > 0.0) || q > 1.0) throw std::invalid_argument("percentile: q must be in (0, 1]");
  const std::size_t n = values.size();
  std::size_t idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(n)));
  if (idx == 0) idx = 1;
  if (idx > n) idx = n;
  return values[idx - 1];
}

CdfCurve metric_cdf(const std::vector<MetricSample>& samples, MetricKind which) {
  if (samples.empty()) throw std::invalid_argument("metric_cdf: no samples");
  CdfCurve cdf;
  cdf.values.reserve(samples.size());
  for (const MetricSample& s : samples)
    cdf.values.push_back(which == MetricKind::Papr ? s.papr_db : s.cm_db);
  std::sort(cdf.values.begin(), cdf.values.end());
  cdf.cum_prob.resize(cdf.values.size());
  const double n = static_cast<double>(cdf.values.size());
  for (std::size_t i = 0; i < cdf.values.size(); ++i)
    cdf.cum_prob[i] = static_cast<double>(i + 1) / n;
  return cdf;
}

}  // namespace prachseq
