#include "prachseq/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace prachseq {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

}  // namespace

FftPlan::FftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("FftPlan: length must be positive");
  m_ = is_pow2(n) ? n : next_pow2(2 * n - 1);

  bitrev_.assign(m_, 0);
  std::size_t log2m = 0;
  while ((std::size_t{1} << log2m) < m_) ++log2m;
  for (std::size_t i = 0; i < m_; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < log2m; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2m - 1 - b);
    bitrev_[i] = r;
  }

  twiddle_.resize(m_ / 2);
  for (std::size_t k = 0; k < m_ / 2; ++k) {
    const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m_);
    twiddle_[k] = Complex(std::cos(ang), std::sin(ang));
  }

  if (m_ != n_) {
    // chirp[k] = exp(+j*pi*k^2/n); k^2 reduced mod 2n keeps the angle small
    chirp_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      const long long kk = static_cast<long long>(k) * static_cast<long long>(k) %
                           (2LL * static_cast<long long>(n_));
      const double ang = std::numbers::pi * static_cast<double>(kk) / static_cast<double>(n_);
      chirp_[k] = Complex(std::cos(ang), std::sin(ang));
    }
    std::vector<Complex> kernel(m_, Complex(0.0, 0.0));
    kernel[0] = chirp_[0];
    for (std::size_t k = 1; k < n_; ++k) {
      kernel[k] = chirp_[k];
      kernel[m_ - k] = chirp_[k];
    }
    pow2_fft(kernel.data(), false);
    kernel_fft_ = std::move(kernel);
  }
}

// TODO: radix-4 butterflies would cut the work here by ~25%; this loop
// dominates the Monte Carlo runners.
void FftPlan::pow2_fft(Complex* a, bool invert) const {
  const std::size_t m = m_;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = bitrev_[i];
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= m; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t step = m / len;
    for (std::size_t base = 0; base < m; base += len) {
      for (std::size_t j = 0; j < half; ++j) {
        Complex w = twiddle_[j * step];
        if (invert) w = std::conj(w);
        const Complex t = a[base + j + half] * w;
        const Complex u = a[base + j];
        a[base + j] = u + t;
        a[base + j + half] = u - t;
      }
    }
  }
}

void FftPlan::transform(const Complex* in, Complex* out, FftScratch& ws, bool invert) const {
  if (n_ == 1) {
    out[0] = in[0];
    return;
  }
  if (m_ == n_) {
    for (std::size_t i = 0; i < n_; ++i) out[i] = in[i];
    pow2_fft(out, invert);
    if (invert) {
      const double s = 1.0 / static_cast<double>(n_);
      for (std::size_t i = 0; i < n_; ++i) out[i] *= s;
    }
    return;
  }

  // Bluestein: nk = (n^2 + k^2 - (k-n)^2) / 2 turns the DFT into a
  // convolution against the chirp, evaluated at the padded pow2 size.
  ws.a.assign(m_, Complex(0.0, 0.0));
  if (!invert) {
    for (std::size_t k = 0; k < n_; ++k) ws.a[k] = in[k] * std::conj(chirp_[k]);
  } else {
    for (std::size_t k = 0; k < n_; ++k) ws.a[k] = std::conj(in[k]) * std::conj(chirp_[k]);
  }
  pow2_fft(ws.a.data(), false);
  for (std::size_t k = 0; k < m_; ++k) ws.a[k] *= kernel_fft_[k];
  pow2_fft(ws.a.data(), true);
  const double minv = 1.0 / static_cast<double>(m_);
  if (!invert) {
    for (std::size_t k = 0; k < n_; ++k) out[k] = ws.a[k] * minv * std::conj(chirp_[k]);
  } else {
    const double s = minv / static_cast<double>(n_);
    for (std::size_t k = 0; k < n_; ++k)
      out[k] = std::conj(ws.a[k] * std::conj(chirp_[k])) * s;
  }
}

void FftPlan::forward(const Complex* in, Complex* out, FftScratch& ws) const {
  transform(in, out, ws, false);
}

void FftPlan::inverse(const Complex* in, Complex* out, FftScratch& ws) const {
  transform(in, out, ws, true);
}

std::vector<Complex> FftPlan::forward(const ComplexSequence& in) const {
  if (in.size() != n_) throw std::invalid_argument("FftPlan::forward: length mismatch");
  std::vector<Complex> out(n_);
  FftScratch ws;
  forward(in.data(), out.data(), ws);
  return out;
}

std::vector<Complex> FftPlan::inverse(const ComplexSequence& in) const {
  if (in.size() != n_) throw std::invalid_argument("FftPlan::inverse: length mismatch");
  std::vector<Complex> out(n_);
  FftScratch ws;
  inverse(in.data(), out.data(), ws);
  return out;
}

std::vector<Complex> dft_direct(const ComplexSequence& in, bool inverse) {
  const std::size_t n = in.size();
  std::vector<Complex> out(n, Complex(0.0, 0.0));
  const double sign = inverse ? 2.0 : -2.0;
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double ang = sign * std::numbers::pi *
                         static_cast<double>((j * k) % n) / static_cast<double>(n);
      acc += in[j] * Complex(std::cos(ang), std::sin(ang));
    }
    out[k] = inverse ? acc / static_cast<double>(n) : acc;
  }
  return out;
}

}  // namespace prachseq
