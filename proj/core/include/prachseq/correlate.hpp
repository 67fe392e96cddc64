#pragma once

#include <iosfwd>
#include <string>

#include "prachseq/complex_sequence.hpp"

namespace prachseq {

// Periodic correlation R[tau] = sum_n x[n] * conj(y[(n+tau) mod L]).
//
// Lag convention: correlating a received sequence against a reference, a
// transmitted cyclic shift of +s (per cyclic_shift) puts the peak at lag
// tau = s, i.e. R_{shift(x,a), shift(x,b)} peaks at (a - b) mod L.
struct CorrelationProfile {
  std::vector<Complex> values;  // one per lag, length L
  std::string source_a;
  std::string source_b;
};

// O(L^2) reference implementation; the oracle for the FFT path.
CorrelationProfile periodic_correlation_naive(const ComplexSequence& x,
                                              const ComplexSequence& y);

// Same values via R = DFT(X .* conj(Y)) / L; supports any length, including
// the prime 139.
CorrelationProfile periodic_correlation_fft(const ComplexSequence& x,
                                            const ComplexSequence& y);

// Element-wise |R[tau]|^2.
std::vector<double> power_delay_profile(const CorrelationProfile& corr);

// Normalized frequency offset in subcarrier units.
struct CfoSpec {
  double f0 = 0.0;
};

// Autocorrelation with a frequency-offset phase ramp on one copy:
//   R[tau] = sum_n x[n] * conj(x[(n+tau) mod L]) * exp(+j*2*pi*f0*n/L)
CorrelationProfile cfo_autocorrelation(const ComplexSequence& x, const CfoSpec& cfo);

// CSV columns: lag,real,imag,magnitude (with header row).
void write_profile_csv(std::ostream& os, const CorrelationProfile& corr);
void write_profile_csv(const std::string& path, const CorrelationProfile& corr);

}  // namespace prachseq
