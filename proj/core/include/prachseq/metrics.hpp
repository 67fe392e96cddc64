#pragma once

#include <string>
#include <vector>

#include "prachseq/complex_sequence.hpp"

namespace prachseq {

// Frequency-domain mapping of a length-L preamble onto an OFDM symbol: the L
// transform bins land contiguously at mapping_start, everything else is
// zero, and the cyclic prefix copies the tail of the time body. Both
// transforms are unitary, so body energy equals bin energy.
struct OfdmConfig {
  int ifft_size = 4096;
  int cp_length = 288;
  int mapping_start = 1979;  // centers 139 bins in a 4096 grid
};

// Returns the cp_length + ifft_size time signal (CP first).
ComplexSequence synthesize_ofdm(const ComplexSequence& seq, const OfdmConfig& cfg);

// 10*log10(max |x(t)|^2 / mean |x(t)|^2); throws on an all-zero signal.
double papr_db(const ComplexSequence& time_signal);

// (20*log10 rms[x_norm^3] - 1.52) / 1.56 with x_norm = |x| / rms[x];
// throws on zero rms.
double cubic_metric_db(const ComplexSequence& time_signal);

struct MetricSample {
  std::string sequence_id;  // parameter tuple, e.g. "u=3,v=1"
  double papr_db = 0.0;
  double cm_db = 0.0;
};

enum class MetricKind { Papr, CubicMetric };

struct CdfCurve {
  std::vector<double> values;    // sorted ascending
  std::vector<double> cum_prob;  // (i+1)/n
  // Empirical quantile (smallest value whose cumulative probability reaches
  // q), q in (0, 1].
  double percentile(double q) const;
};

CdfCurve metric_cdf(const std::vector<MetricSample>& samples, MetricKind which);

}  // namespace prachseq
