// Declarative experiment runner behind the CLI: config parsing, deterministic
// Monte Carlo sweeps, CSV emission.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "prachseq/detect.hpp"
#include "prachseq/metrics.hpp"
#include "prachseq/preamble_set.hpp"

namespace prachseq {

extern const char* const kLibraryVersion;

struct ExperimentConfig {
  std::string experiment;  // capacity|generate|correlate|cfo-sweep|calibrate|detect-sweep|papr-cm
  std::vector<Family> families = all_families();
  int l_ra = 139;
  int zczc = 11;
  std::vector<int> antennas = {1, 2, 4, 8};
  double snr_start = -20.0;
  double snr_stop = 0.0;
  double snr_step = 0.5;
  long trials = 100000;
  std::uint64_t seed = 7151;
  std::string out;             // file, directory for papr-cm, empty = stdout
  std::string threshold_file;  // calibrate writes it, detect-sweep reads it
  std::vector<double> cfo_grid = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
  int threads = 0;     // <= 0: hardware concurrency; excluded from the echo
  long papr_count = 0;  // 0 = built-in per-family evaluation grids
  double target_pfalse = 1e-3;
  std::vector<int> n_cs_list = {2, 23};

  void validate() const;
  // Canonical one-line key=value serialization; embedded in every output
  // file. Deliberately omits the worker count so identical experiments are
  // byte-identical regardless of parallelism.
  std::string echo() const;
  std::vector<double> snr_grid() const;
};

// Flat key=value text config; '#' starts a comment. Unknown keys are errors.
ExperimentConfig load_config_file(const std::string& path);
void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value);

// ---- capacity ---------------------------------------------------------------
struct CapacityRow {
  Family family;
  int n_cs = 0;
  std::int64_t capacity = 0;
};
std::vector<CapacityRow> run_capacity_report(int l_ra, const std::vector<int>& n_cs_list,
                                             const std::vector<Family>& families);
void write_capacity_csv(std::ostream& os, const ExperimentConfig& cfg,
                        const std::vector<CapacityRow>& rows);

// ---- calibrate --------------------------------------------------------------
struct CalibrationRow {
  Family family;
  int n_ant = 0;
  double eta = 0.0;
  double p_false = 0.0;
};
// Calibrates every (family, antenna) cell, persists cfg.threshold_file when
// set, and returns the table.
ThresholdTable run_calibration(const ExperimentConfig& cfg, std::vector<CalibrationRow>* rows);
void write_calibration_csv(std::ostream& os, const ExperimentConfig& cfg,
                           const std::vector<CalibrationRow>& rows);

// ---- detect-sweep -----------------------------------------------------------
struct DetectSweepRow {
  Family family;
  int n_ant = 0;
  double snr_db = 0.0;
  long trials = 0;
  double p_detect = 0.0;
  double std_err = 0.0;
};
std::vector<DetectSweepRow> run_detection_sweep(const ExperimentConfig& cfg,
                                                const ThresholdTable& thresholds);
void write_detect_sweep_csv(std::ostream& os, const ExperimentConfig& cfg,
                            const std::vector<DetectSweepRow>& rows);

// ---- cfo-sweep --------------------------------------------------------------
struct CfoSweepRow {
  Family family;
  double f0 = 0.0;
  int lag = 0;
  double magnitude = 0.0;
};
// The fixed per-family reference sequences swept over cfg.cfo_grid.
ComplexSequence cfo_reference_sequence(Family family, int l_ra, int zczc);
std::vector<CfoSweepRow> run_cfo_sweep(const ExperimentConfig& cfg);
void write_cfo_sweep_csv(std::ostream& os, const ExperimentConfig& cfg,
                         const std::vector<CfoSweepRow>& rows);

// ---- papr-cm ----------------------------------------------------------------
struct SeqParams {
  Family family = Family::ZC;
  bool plain_zc = false;  // the uncovered part of the mZC enumeration
  int root = 1;
  int shift_index = 0;
  int cover_shift = 0;
  int power = 1;
  int lambda = 0;
  int w = 0;
  std::string id() const;
  ComplexSequence build(int l_ra, int n_cs) const;
};

// Deterministic evaluation grid per family (ZC 828; mZC 58788; aZC 57960;
// mALL 57960 at N_CS = 23). max_count > 0 stride-subsamples the grid.
std::vector<SeqParams> papr_cm_enumeration(Family family, int l_ra, int n_cs,
                                           long max_count = 0);

struct PaprCmFamilyResult {
  Family family;
  std::vector<MetricSample> samples;
  CdfCurve papr_cdf;
  CdfCurve cm_cdf;
};
std::vector<PaprCmFamilyResult> run_papr_cm(const ExperimentConfig& cfg);
// Writes metrics_<family>.csv, cdf_papr_<family>.csv, cdf_cm_<family>.csv and
// summary.csv under the cfg.out directory.
void write_papr_cm_outputs(const ExperimentConfig& cfg,
                           const std::vector<PaprCmFamilyResult>& results);

// ---- generate / correlate helpers -------------------------------------------
// Parses "u=2,v=1" style tuples. Keys: u (ZC root), v (shift index),
// l (m-sequence cover shift for mZC, Alltop power for aZC/mALL),
// lambda, w, t (mALL cover shift).
ComplexSequence generate_from_params(Family family, const std::string& params, int l_ra,
                                     int n_cs);

}  // namespace prachseq
