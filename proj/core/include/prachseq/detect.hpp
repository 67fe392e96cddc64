// Correlation detector: per-root power delay profiles accumulated across
// antennas, per-row mean normalization, N_CS windowing and a threshold
// decision, plus the false-alarm calibration and detection-probability
// Monte Carlo built on top of it.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prachseq/complex_sequence.hpp"
#include "prachseq/fft.hpp"
#include "prachseq/preamble_set.hpp"

namespace prachseq {

struct PdpMatrix {
  std::vector<std::vector<double>> rows;  // one per root, length l_ra each
  int antenna_count = 0;
};

struct DetectionOutcome {
  bool detected = false;
  std::optional<int> root_index;
  std::optional<int> window_index;
  std::optional<int> preamble_id;
  // Largest window-max / row-mean statistic seen, whether or not it crossed
  // the threshold.
  double peak_value = 0.0;
};

struct AwgnChannelSpec {
  double snr_db = 0.0;
  std::uint64_t seed = 0;
};

// y[n] = x[n] + w[n], w circularly-symmetric complex Gaussian with total
// variance 10^(-snr_db/10) per sample (unit-power signal convention).
ComplexSequence apply_awgn(const ComplexSequence& x, const AwgnChannelSpec& channel);

// Correlates incoming signals against a fixed root bank through the FFT
// path, with the root spectra precomputed once. Immutable after
// construction; pass a per-thread FftScratch when running trials in
// parallel.
class RootCorrelator {
 public:
  explicit RootCorrelator(const std::vector<ComplexSequence>& roots);

  int l_ra() const { return l_ra_; }
  int root_count() const { return static_cast<int>(conj_spectra_.size()); }

  PdpMatrix make_pdp() const;
  // Adds |R_{signal,root}|^2 per lag into every row of pdp.
  void accumulate(const ComplexSequence& antenna_signal, PdpMatrix& pdp,
                  FftScratch& scratch) const;
  PdpMatrix accumulate_all(const std::vector<ComplexSequence>& per_antenna) const;

 private:
  int l_ra_ = 0;
  FftPlan plan_;
  std::vector<std::vector<Complex>> conj_spectra_;  // conj(DFT(root)) / L per root
};

// P_mu = sum_i |R_{s_i, k_mu}|^2 over antennas i.
PdpMatrix accumulate_pdp(const std::vector<ComplexSequence>& per_antenna,
                         const std::vector<ComplexSequence>& roots);

// Per row: mean over all l_ra lags, then floor(l_ra/n_cs) windows of length
// n_cs (trailing remainder lags excluded from windows). Detection declared
// when some window max reaches eta times the row mean; the reported slot is
// the global argmax of the normalized statistic, lower (root, window) on
// ties. When max_preambles > 0, slots with root*windows + window >=
// max_preambles are excluded (a 64-preamble cell does not fill every window
// of its last root).
DetectionOutcome normalize_and_threshold(const PdpMatrix& pdp, double eta, int n_cs,
                                         int max_preambles = 0);

// Calibrated thresholds indexed by (family, antenna count).
class ThresholdTable {
 public:
  void set(Family family, int antennas, double eta);
  double at(Family family, int antennas) const;
  bool contains(Family family, int antennas) const;
  std::size_t size() const { return eta_.size(); }

  // eta > 1 and non-increasing in antenna count within each family.
  void validate() const;

  // One `family,antennas,eta` line per entry.
  void save(const std::string& path) const;
  static ThresholdTable load(const std::string& path);

 private:
  std::map<std::pair<int, int>, double> eta_;  // (family index, antennas) -> eta
};

struct CalibrationOptions {
  double target_pfalse = 1e-3;
  std::uint64_t master_seed = 1;
  int threads = 0;  // <= 0: hardware concurrency
  int l_ra = 139;
  int zczc = 11;
  // Descending eta grid bounds, step 0.1.
  double eta_max = 20.0;
  double eta_min = 1.0;
};

struct CalibrationResult {
  double eta = 0.0;
  double p_false = 0.0;  // empirical rate at the returned eta
  long trials = 0;
};

// Noise-only trials through the full detector; returns the smallest grid eta
// whose empirical false-alarm rate meets the target. Throws when even the
// top of the grid fails.
CalibrationResult calibrate_threshold(Family family, int antenna_count, long trials,
                                      const CalibrationOptions& opt = {});

// Noise-only false-alarm rate at a fixed eta (for independent re-checks).
double measure_pfalse(Family family, int antenna_count, long trials, double eta,
                      const CalibrationOptions& opt = {});

struct DetectionRunOptions {
  std::uint64_t master_seed = 1;
  int threads = 0;
  int l_ra = 139;
  int zczc = 11;
};

// Fraction of trials in which a uniformly random preamble of the 64-cell
// set, sent through independent per-antenna AWGN, is detected at the exact
// (root, window) it was built from.
double detection_probability(Family family, int antenna_count, double snr_db, long trials,
                             double eta, const DetectionRunOptions& opt = {});

}  // namespace prachseq
