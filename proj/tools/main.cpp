// prachseq CLI: preamble generation, correlation, threshold calibration,
// detection sweeps and PAPR/CM evaluation, all emitting CSV.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prachseq/complex_sequence.hpp"
#include "prachseq/correlate.hpp"
#include "prachseq/experiment.hpp"

namespace {

using prachseq::ExperimentConfig;

struct FlagCapture {
  CLI::App* cmd;
  std::vector<std::pair<CLI::Option*, std::function<void(ExperimentConfig&)>>> applied;
  std::string config_path;

  explicit FlagCapture(CLI::App* c) : cmd(c) {
    cmd->add_option("--config", config_path, "key=value config file (flags override it)");
  }

  // Binds a flag to a config key; parsing is shared with the config-file
  // reader so values behave identically in both places.
  void key_option(const std::string& flag, const std::string& key, const std::string& help) {
    auto holder = std::make_shared<std::string>();
    CLI::Option* opt = cmd->add_option(flag, *holder, help);
    applied.emplace_back(opt, [key, holder](ExperimentConfig& cfg) {
      prachseq::apply_config_entry(cfg, key, *holder);
    });
  }

  ExperimentConfig resolve(const std::string& experiment) const {
    ExperimentConfig cfg;
    if (!config_path.empty()) cfg = prachseq::load_config_file(config_path);
    cfg.experiment = experiment;
    for (const auto& [opt, apply] : applied)
      if (opt->count() > 0) apply(cfg);
    return cfg;
  }
};

void add_common_flags(FlagCapture& fc) {
  fc.key_option("--family", "families", "comma-separated families (ZC,mZC,aZC,mALL)");
  fc.key_option("--l-ra", "l_ra", "preamble length L_RA");
  fc.key_option("--zczc", "zczc", "zeroCorrelationZoneConfig (maps to N_CS)");
  fc.key_option("--seed", "seed", "master seed for deterministic runs");
  fc.key_option("--threads", "threads", "worker threads (0 = hardware)");
  fc.key_option("--out", "out", "output path (stdout when omitted)");
}

std::ostream& output_stream(const ExperimentConfig& cfg, std::ofstream& file) {
  if (cfg.out.empty()) return std::cout;
  file.open(cfg.out);
  if (!file) throw std::runtime_error("cannot open for write: " + cfg.out);
  return file;
}

void report_elapsed(const ExperimentConfig& cfg, std::size_t rows,
                    std::chrono::steady_clock::time_point start) {
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "# prachseq " << prachseq::kLibraryVersion << ": " << cfg.experiment << " -> "
            << (cfg.out.empty() ? std::string("<stdout>") : cfg.out) << " (" << rows
            << " rows, " << secs << " s)\n";
}

prachseq::Family single_family(const ExperimentConfig& cfg, const char* cmd) {
  if (cfg.families.size() != 1)
    throw std::invalid_argument(std::string(cmd) + " expects exactly one --family");
  return cfg.families.front();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"5G NR short-preamble sequence toolbox"};
  app.set_version_flag("--version", std::string("prachseq ") + prachseq::kLibraryVersion);
  app.require_subcommand(1);

  // capacity
  auto* capacity = app.add_subcommand("capacity", "closed-form preamble capacities");
  FlagCapture cap_fc(capacity);
  add_common_flags(cap_fc);
  cap_fc.key_option("--n-cs", "n_cs_list", "comma-separated N_CS values");

  // generate
  auto* generate = app.add_subcommand("generate", "emit one sequence as CSV or binary");
  FlagCapture gen_fc(generate);
  add_common_flags(gen_fc);
  std::string gen_params, gen_format = "csv";
  generate->add_option("--params", gen_params,
                       "sequence parameters, e.g. \"u=2,v=1\" or \"l=1,lambda=2,w=1,t=0\"");
  generate->add_option("--format", gen_format, "csv or bin")
      ->check(CLI::IsMember({"csv", "bin"}));

  // correlate
  auto* correlate = app.add_subcommand("correlate", "periodic correlation profile as CSV");
  FlagCapture corr_fc(correlate);
  add_common_flags(corr_fc);
  std::string corr_a, corr_b, corr_method = "fft";
  correlate->add_option("--a", corr_a, "first sequence parameters (key=value list)");
  correlate->add_option("--b", corr_b, "second sequence parameters (defaults to --a)");
  correlate->add_option("--method", corr_method, "fft or naive")
      ->check(CLI::IsMember({"fft", "naive"}));

  // cfo-sweep
  auto* cfo = app.add_subcommand("cfo-sweep", "autocorrelation vs carrier frequency offset");
  FlagCapture cfo_fc(cfo);
  add_common_flags(cfo_fc);
  cfo_fc.key_option("--cfo-grid", "cfo_grid", "comma-separated normalized offsets");

  // calibrate
  auto* calibrate = app.add_subcommand("calibrate", "false-alarm threshold calibration");
  FlagCapture cal_fc(calibrate);
  add_common_flags(cal_fc);
  cal_fc.key_option("--antennas", "antennas", "comma-separated antenna counts");
  cal_fc.key_option("--trials", "trials", "noise-only trials per cell");
  cal_fc.key_option("--target-pfalse", "target_pfalse", "false-alarm target (default 0.001)");
  cal_fc.key_option("--threshold-file", "threshold_file", "calibrated table output path");

  // detect-sweep
  auto* detect = app.add_subcommand("detect-sweep", "detection probability vs SNR");
  FlagCapture det_fc(detect);
  add_common_flags(det_fc);
  det_fc.key_option("--antennas", "antennas", "comma-separated antenna counts");
  det_fc.key_option("--trials", "trials", "Monte Carlo trials per grid point");
  det_fc.key_option("--snr-start", "snr_start", "first SNR (dB)");
  det_fc.key_option("--snr-stop", "snr_stop", "last SNR (dB)");
  det_fc.key_option("--snr-step", "snr_step", "SNR step (dB)");
  det_fc.key_option("--threshold-file", "threshold_file", "calibrated table to load");

  // papr-cm
  auto* papr = app.add_subcommand("papr-cm", "PAPR and cubic-metric CDFs");
  FlagCapture papr_fc(papr);
  add_common_flags(papr_fc);
  papr_fc.key_option("--papr-count", "papr_count",
                     "subsample size (0 = full built-in evaluation grid)");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto start = std::chrono::steady_clock::now();
    if (capacity->parsed()) {
      ExperimentConfig cfg = cap_fc.resolve("capacity");
      cfg.validate();
      const auto rows = prachseq::run_capacity_report(cfg.l_ra, cfg.n_cs_list, cfg.families);
      std::ofstream file;
      prachseq::write_capacity_csv(output_stream(cfg, file), cfg, rows);
      report_elapsed(cfg, rows.size(), start);
    } else if (generate->parsed()) {
      ExperimentConfig cfg = gen_fc.resolve("generate");
      const prachseq::Family fam = single_family(cfg, "generate");
      const int n_cs = prachseq::ncs_from_zczc(cfg.zczc);
      const auto seq = prachseq::generate_from_params(fam, gen_params, cfg.l_ra, n_cs);
      if (gen_format == "bin") {
        if (cfg.out.empty()) throw std::invalid_argument("generate --format bin needs --out");
        prachseq::write_sequence_binary(cfg.out, seq);
      } else if (cfg.out.empty()) {
        prachseq::write_sequence_csv(std::cout, seq);
      } else {
        prachseq::write_sequence_csv(cfg.out, seq);
      }
      report_elapsed(cfg, seq.size(), start);
    } else if (correlate->parsed()) {
      ExperimentConfig cfg = corr_fc.resolve("correlate");
      const prachseq::Family fam = single_family(cfg, "correlate");
      const int n_cs = prachseq::ncs_from_zczc(cfg.zczc);
      const auto a = prachseq::generate_from_params(fam, corr_a, cfg.l_ra, n_cs);
      const auto b = corr_b.empty()
                         ? a
                         : prachseq::generate_from_params(fam, corr_b, cfg.l_ra, n_cs);
      auto prof = corr_method == "naive" ? prachseq::periodic_correlation_naive(a, b)
                                         : prachseq::periodic_correlation_fft(a, b);
      prof.source_a = corr_a;
      prof.source_b = corr_b.empty() ? corr_a : corr_b;
      std::ofstream file;
      prachseq::write_profile_csv(output_stream(cfg, file), prof);
      report_elapsed(cfg, prof.values.size(), start);
    } else if (cfo->parsed()) {
      ExperimentConfig cfg = cfo_fc.resolve("cfo-sweep");
      cfg.validate();
      const auto rows = prachseq::run_cfo_sweep(cfg);
      std::ofstream file;
      prachseq::write_cfo_sweep_csv(output_stream(cfg, file), cfg, rows);
      report_elapsed(cfg, rows.size(), start);
    } else if (calibrate->parsed()) {
      ExperimentConfig cfg = cal_fc.resolve("calibrate");
      cfg.validate();
      std::vector<prachseq::CalibrationRow> rows;
      prachseq::run_calibration(cfg, &rows);
      std::ofstream file;
      prachseq::write_calibration_csv(output_stream(cfg, file), cfg, rows);
      report_elapsed(cfg, rows.size(), start);
    } else if (detect->parsed()) {
      ExperimentConfig cfg = det_fc.resolve("detect-sweep");
      cfg.validate();
      if (cfg.threshold_file.empty())
        throw std::invalid_argument(
            "detect-sweep needs --threshold-file; run `prachseq calibrate` first");
      prachseq::ThresholdTable table;
      try {
        table = prachseq::ThresholdTable::load(cfg.threshold_file);
      } catch (const std::runtime_error& e) {
        throw std::runtime_error(std::string(e.what()) +
                                 "; run `prachseq calibrate` to produce it");
      }
      const auto rows = prachseq::run_detection_sweep(cfg, table);
      std::ofstream file;
      prachseq::write_detect_sweep_csv(output_stream(cfg, file), cfg, rows);
      report_elapsed(cfg, rows.size(), start);
    } else if (papr->parsed()) {
      ExperimentConfig cfg = papr_fc.resolve("papr-cm");
      cfg.validate();
      const auto results = prachseq::run_papr_cm(cfg);
      prachseq::write_papr_cm_outputs(cfg, results);
      report_elapsed(cfg, results.size(), start);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
