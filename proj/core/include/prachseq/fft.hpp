#pragma once

#include <cstddef>
#include <vector>

#include "prachseq/complex_sequence.hpp"

namespace prachseq {

// Reusable buffers for FftPlan::forward / inverse. Keep one per thread when
// transforming in a loop; plans themselves are immutable after construction
// and safe to share.
struct FftScratch {
  std::vector<Complex> a, b;
};

// Complex DFT of arbitrary length: radix-2 when n is a power of two,
// Bluestein's chirp-z embedding otherwise (e.g. the prime length 139).
//   forward: out[k] = sum_n in[n] * exp(-j*2*pi*n*k/N)        (unnormalized)
//   inverse: out[n] = (1/N) * sum_k in[k] * exp(+j*2*pi*n*k/N)
class FftPlan {
 public:
  explicit FftPlan(std::size_t n);

  std::size_t size() const { return n_; }

  void forward(const Complex* in, Complex* out, FftScratch& scratch) const;
  void inverse(const Complex* in, Complex* out, FftScratch& scratch) const;

  std::vector<Complex> forward(const ComplexSequence& in) const;
  std::vector<Complex> inverse(const ComplexSequence& in) const;

 private:
  void pow2_fft(Complex* data, bool invert) const;
  void transform(const Complex* in, Complex* out, FftScratch& scratch, bool invert) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;  // pow2 working size (== n_ when n_ is a power of two)
  std::vector<std::size_t> bitrev_;    // permutation for size m_
  std::vector<Complex> twiddle_;       // exp(-j*2*pi*k/m_), k < m_/2
  std::vector<Complex> chirp_;         // exp(+j*pi*k^2/n_), k < n_   (Bluestein only)
  std::vector<Complex> kernel_fft_;    // FFT_m of the wrapped chirp  (Bluestein only)
};

// O(N^2) reference transform, the oracle for FftPlan.
std::vector<Complex> dft_direct(const ComplexSequence& in, bool inverse = false);

}  // namespace prachseq
