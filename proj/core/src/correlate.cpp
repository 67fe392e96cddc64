#include "prachseq/correlate.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "prachseq/fft.hpp"

namespace prachseq {

CorrelationProfile periodic_correlation_naive(const ComplexSequence& x,
                                              const ComplexSequence& y) {
  if (x.empty() || x.size() != y.size())
    throw std::invalid_argument("periodic_correlation: sequences must have equal nonzero length");
  const std::size_t L = x.size();
  CorrelationProfile out;
  out.values.assign(L, Complex(0.0, 0.0));
  for (std::size_t tau = 0; tau < L; ++tau) {
    Complex acc(0.0, 0.0);
    for (std::size_t n = 0; n < L; ++n) acc += x[n] * std::conj(y[(n + tau) % L]);
    out.values[tau] = acc;
  }
  return out;
}

CorrelationProfile periodic_correlation_fft(const ComplexSequence& x,
                                            const ComplexSequence& y) {
  if (x.empty() || x.size() != y.size())
    throw std::invalid_argument("periodic_correlation: sequences must have equal nonzero length");
  const std::size_t L = x.size();
  FftPlan plan(L);
  FftScratch ws;
  std::vector<Complex> xf(L), yf(L), prod(L);
  plan.forward(x.data(), xf.data(), ws);
  plan.forward(y.data(), yf.data(), ws);
  const double inv = 1.0 / static_cast<double>(L);
  for (std::size_t k = 0; k < L; ++k) prod[k] = xf[k] * std::conj(yf[k]) * inv;
  CorrelationProfile out;
  out.values.assign(L, Complex(0.0, 0.0));
  plan.forward(prod.data(), out.values.data(), ws);
  return out;
}

std::vector<double> power_delay_profile(const CorrelationProfile& corr) {
  std::vector<double> p(corr.values.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Complex& v = corr.values[i];
    p[i] = v.real() * v.real() + v.imag() * v.imag();
  }
  return p;
}

CorrelationProfile cfo_autocorrelation(const ComplexSequence& x, const CfoSpec& cfo) {
  if (x.empty()) throw std::invalid_argument("cfo_autocorrelation: empty sequence");
  const std::size_t L = x.size();
  ComplexSequence ramped(L);
  const double step = 2.0 * std::numbers::pi * cfo.f0 / static_cast<double>(L);
  for (std::size_t n = 0; n < L; ++n) {
    const double ang = step * static_cast<double>(n);
    ramped[n] = x[n] * Complex(std::cos(ang), std::sin(ang));
  }
  CorrelationProfile out = periodic_correlation_fft(ramped, x);
  out.source_a = "cfo-ramped";
  out.source_b = "reference";
  return out;
}

void write_profile_csv(std::ostream& os, const CorrelationProfile& corr) {
  os << "lag,real,imag,magnitude\n";
  char buf[128];
  for (std::size_t i = 0; i < corr.values.size(); ++i) {
    const Complex& v = corr.values[i];
    std::snprintf(buf, sizeof(buf), "%zu,%.9g,%.9g,%.9g\n", i, v.real(), v.imag(), std::abs(v));
    os << buf;
  }
}

void write_profile_csv(const std::string& path, const CorrelationProfile& corr) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  write_profile_csv(f, corr);
}

}  // namespace prachseq
