#include "prachseq/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "prachseq/alltop.hpp"
#include "prachseq/correlate.hpp"
#include "prachseq/cover_sequences.hpp"
#include "prachseq/fft.hpp"
#include "prachseq/mseq.hpp"
#include "prachseq/zadoff_chu.hpp"

namespace prachseq {

const char* const kLibraryVersion = "0.1.0";

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string join_families(const std::vector<Family>& fams) {
  std::string s;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    if (i) s += ',';
    s += family_name(fams[i]);
  }
  return s;
}

template <typename T, typename F>
std::string join(const std::vector<T>& v, F to_str) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += to_str(v[i]);
  }
  return s;
}

void write_header(std::ostream& os, const ExperimentConfig& cfg, const char* schema) {
  os << "# prachseq " << kLibraryVersion << "\n";
  os << "# schema: " << schema << "\n";
  os << "# config: " << cfg.echo() << "\n";
}

std::ofstream open_file(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  return f;
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (families.empty()) throw std::invalid_argument("config: family list must not be empty");
  if (l_ra < 2) throw std::invalid_argument("config: l_ra must be >= 2");
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (!(snr_step > 0.0)) throw std::invalid_argument("config: snr_step must be positive");
  if (snr_stop < snr_start)
    throw std::invalid_argument("config: snr grid must be sorted (snr_stop >= snr_start)");
  if (antennas.empty()) throw std::invalid_argument("config: antenna list must not be empty");
  for (int a : antennas)
    if (a < 1) throw std::invalid_argument("config: antenna counts must be >= 1");
  if (!(target_pfalse > 0.0 && target_pfalse < 1.0))
    throw std::invalid_argument("config: target_pfalse must lie in (0, 1)");
  if (papr_count < 0) throw std::invalid_argument("config: papr_count must be >= 0");
}

std::string ExperimentConfig::echo() const {
  std::ostringstream ss;
  ss << "experiment=" << experiment;
  ss << " families=" << join_families(families);
  ss << " l_ra=" << l_ra;
  ss << " zczc=" << zczc;
  ss << " antennas=" << join(antennas, [](int a) { return std::to_string(a); });
  ss << " snr_start=" << fmt(snr_start) << " snr_stop=" << fmt(snr_stop)
     << " snr_step=" << fmt(snr_step);
  ss << " trials=" << trials;
  ss << " seed=" << seed;
  ss << " cfo_grid=" << join(cfo_grid, [](double f) { return fmt(f); });
  ss << " papr_count=" << papr_count;
  ss << " target_pfalse=" << fmt(target_pfalse);
  ss << " n_cs_list=" << join(n_cs_list, [](int n) { return std::to_string(n); });
  ss << " out=" << out;
  ss << " threshold_file=" << threshold_file;
  return ss.str();
}

std::vector<double> ExperimentConfig::snr_grid() const {
  std::vector<double> grid;
  const long count = static_cast<long>(std::floor((snr_stop - snr_start) / snr_step + 1e-9)) + 1;
  grid.reserve(count);
  for (long i = 0; i < count; ++i) grid.push_back(snr_start + snr_step * static_cast<double>(i));
  return grid;
}

namespace {

void apply_config_entry_impl(ExperimentConfig& cfg, const std::string& key,
                             const std::string& value);

}  // namespace

void apply_config_entry(ExperimentConfig& cfg, const std::string& key,
                        const std::string& value) {
  try {
    apply_config_entry_impl(cfg, key, value);
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    if (what.rfind("config:", 0) == 0 || what.rfind("unknown", 0) == 0) throw;
    throw std::invalid_argument("config: bad value for " + key + ": '" + value + "'");
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("config: value out of range for " + key + ": '" + value + "'");
  }
}

namespace {

void apply_config_entry_impl(ExperimentConfig& cfg, const std::string& key,
                             const std::string& value) {
  if (key == "experiment") {
    cfg.experiment = value;
  } else if (key == "families" || key == "family") {
    cfg.families.clear();
    for (const std::string& f : split(value, ','))
      if (!trim(f).empty()) cfg.families.push_back(parse_family(trim(f)));
  } else if (key == "l_ra") {
    cfg.l_ra = std::stoi(value);
  } else if (key == "zczc") {
    cfg.zczc = std::stoi(value);
  } else if (key == "antennas") {
    cfg.antennas.clear();
    for (const std::string& a : split(value, ','))
      if (!trim(a).empty()) cfg.antennas.push_back(std::stoi(trim(a)));
  } else if (key == "snr_start") {
    cfg.snr_start = std::stod(value);
  } else if (key == "snr_stop") {
    cfg.snr_stop = std::stod(value);
  } else if (key == "snr_step") {
    cfg.snr_step = std::stod(value);
  } else if (key == "trials") {
    cfg.trials = std::stol(value);
  } else if (key == "seed") {
    cfg.seed = std::stoull(value);
  } else if (key == "out") {
    cfg.out = value;
  } else if (key == "threshold_file") {
    cfg.threshold_file = value;
  } else if (key == "cfo_grid") {
    cfg.cfo_grid.clear();
    for (const std::string& f : split(value, ','))
      if (!trim(f).empty()) cfg.cfo_grid.push_back(std::stod(trim(f)));
  } else if (key == "threads") {
    cfg.threads = std::stoi(value);
  } else if (key == "papr_count") {
    cfg.papr_count = std::stol(value);
  } else if (key == "target_pfalse") {
    cfg.target_pfalse = std::stod(value);
  } else if (key == "n_cs_list") {
    cfg.n_cs_list.clear();
    for (const std::string& n : split(value, ','))
      if (!trim(n).empty()) cfg.n_cs_list.push_back(std::stoi(trim(n)));
  } else {
    throw std::invalid_argument("config: unknown key: " + key);
  }
}

}  // namespace

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open config file: " + path);
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected key=value");
    apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

// ---- capacity ---------------------------------------------------------------

std::vector<CapacityRow> run_capacity_report(int l_ra, const std::vector<int>& n_cs_list,
                                             const std::vector<Family>& families) {
  std::vector<CapacityRow> rows;
  for (int n_cs : n_cs_list)
    for (Family f : families) rows.push_back({f, n_cs, preamble_capacity(f, l_ra, n_cs)});
  return rows;
}

void write_capacity_csv(std::ostream& os, const ExperimentConfig& cfg,
                        const std::vector<CapacityRow>& rows) {
  write_header(os, cfg, "capacity v1");
  os << "family,n_cs,capacity\n";
  for (const CapacityRow& r : rows)
    os << family_name(r.family) << ',' << r.n_cs << ',' << r.capacity << '\n';
}

// ---- calibrate --------------------------------------------------------------

ThresholdTable run_calibration(const ExperimentConfig& cfg, std::vector<CalibrationRow>* rows) {
  cfg.validate();
  ThresholdTable table;
  CalibrationOptions opt;
  opt.target_pfalse = cfg.target_pfalse;
  opt.master_seed = cfg.seed;
  opt.threads = cfg.threads;
  opt.l_ra = cfg.l_ra;
  opt.zczc = cfg.zczc;
  for (Family f : cfg.families) {
    for (int n_ant : cfg.antennas) {
      const CalibrationResult res = calibrate_threshold(f, n_ant, cfg.trials, opt);
      table.set(f, n_ant, res.eta);
      if (rows) rows->push_back({f, n_ant, res.eta, res.p_false});
    }
  }
  if (!cfg.threshold_file.empty()) table.save(cfg.threshold_file);
  return table;
}

void write_calibration_csv(std::ostream& os, const ExperimentConfig& cfg,
                           const std::vector<CalibrationRow>& rows) {
  write_header(os, cfg, "calibration v1");
  os << "family,n_ant,eta,p_false\n";
  for (const CalibrationRow& r : rows)
    os << family_name(r.family) << ',' << r.n_ant << ',' << fmt(r.eta) << ','
       << fmt(r.p_false) << '\n';
}

// ---- detect-sweep -----------------------------------------------------------

std::vector<DetectSweepRow> run_detection_sweep(const ExperimentConfig& cfg,
                                                const ThresholdTable& thresholds) {
  cfg.validate();
  DetectionRunOptions opt;
  opt.master_seed = cfg.seed;
  opt.threads = cfg.threads;
  opt.l_ra = cfg.l_ra;
  opt.zczc = cfg.zczc;
  std::vector<DetectSweepRow> rows;
  for (Family f : cfg.families) {
    for (int n_ant : cfg.antennas) {
      const double eta = thresholds.at(f, n_ant);
      for (double snr : cfg.snr_grid()) {
        const double p = detection_probability(f, n_ant, snr, cfg.trials, eta, opt);
        const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.trials));
        rows.push_back({f, n_ant, snr, cfg.trials, p, se});
      }
    }
  }
  return rows;
}

void write_detect_sweep_csv(std::ostream& os, const ExperimentConfig& cfg,
                            const std::vector<DetectSweepRow>& rows) {
  write_header(os, cfg, "detect-sweep v1");
  os << "family,n_ant,snr_db,trials,p_detect,std_err\n";
  for (const DetectSweepRow& r : rows)
    os << family_name(r.family) << ',' << r.n_ant << ',' << fmt(r.snr_db) << ',' << r.trials
       << ',' << fmt(r.p_detect) << ',' << fmt(r.std_err) << '\n';
}

// ---- cfo-sweep --------------------------------------------------------------

ComplexSequence cfo_reference_sequence(Family family, int l_ra, int zczc) {
  const int n_cs = ncs_from_zczc(zczc);
  switch (family) {
    case Family::ZC:
      return zc_root(2, l_ra);
    case Family::mZC:
      return generate_mzc(
          {.cover_shift = 1, .root = 2, .shift_index = 0, .n_cs = n_cs, .l_ra = l_ra});
    case Family::aZC:
      return generate_azc({.power = 1,
                           .lambda = 1,
                           .w = 2,
                           .root = 1,
                           .shift_index = 0,
                           .n_cs = n_cs,
                           .l_ra = l_ra});
    case Family::mALL:
      return generate_mall({.power = 1,
                            .lambda = 2,
                            .w = 1,
                            .cover_shift = 0,
                            .shift_index = 0,
                            .n_cs = n_cs,
                            .l_ra = l_ra});
  }
  throw std::invalid_argument("cfo_reference_sequence: unknown family");
}

std::vector<CfoSweepRow> run_cfo_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<CfoSweepRow> rows;
  for (Family f : cfg.families) {
    const ComplexSequence seq = cfo_reference_sequence(f, cfg.l_ra, cfg.zczc);
    for (double f0 : cfg.cfo_grid) {
      const CorrelationProfile prof = cfo_autocorrelation(seq, {f0});
      for (std::size_t lag = 0; lag < prof.values.size(); ++lag)
        rows.push_back({f, f0, static_cast<int>(lag), std::abs(prof.values[lag])});
    }
  }
  return rows;
}

void write_cfo_sweep_csv(std::ostream& os, const ExperimentConfig& cfg,
                         const std::vector<CfoSweepRow>& rows) {
  write_header(os, cfg, "cfo-sweep v1");
  os << "family,f0,lag,magnitude\n";
  for (const CfoSweepRow& r : rows)
    os << family_name(r.family) << ',' << fmt(r.f0) << ',' << r.lag << ','
       << fmt(r.magnitude) << '\n';
}

// ---- papr-cm ----------------------------------------------------------------

std::string SeqParams::id() const {
  std::ostringstream ss;
  if (plain_zc || family == Family::ZC) {
    if (plain_zc) ss << "plain;";
    ss << "u=" << root << ";v=" << shift_index;
    return ss.str();
  }
  switch (family) {
    case Family::mZC:
      ss << "l=" << cover_shift << ";u=" << root << ";v=" << shift_index;
      break;
    case Family::aZC:
      ss << "l=" << power << ";lambda=" << lambda << ";w=" << w << ";u=" << root
         << ";v=" << shift_index;
      break;
    case Family::mALL:
      ss << "l=" << power << ";lambda=" << lambda << ";w=" << w << ";t=" << cover_shift
         << ";v=" << shift_index;
      break;
    default:
      break;
  }
  return ss.str();
}

ComplexSequence SeqParams::build(int l_ra, int n_cs) const {
  if (plain_zc || family == Family::ZC)
    return generate_zc({.root = root, .shift_index = shift_index, .n_cs = n_cs, .l_ra = l_ra});
  switch (family) {
    case Family::mZC:
      return generate_mzc({.cover_shift = cover_shift,
                           .root = root,
                           .shift_index = shift_index,
                           .n_cs = n_cs,
                           .l_ra = l_ra});
    case Family::aZC:
      return generate_azc({.power = power,
                           .lambda = lambda,
                           .w = w,
                           .root = root,
                           .shift_index = shift_index,
                           .n_cs = n_cs,
                           .l_ra = l_ra});
    case Family::mALL:
      return generate_mall({.power = power,
                            .lambda = lambda,
                            .w = w,
                            .cover_shift = cover_shift,
                            .shift_index = shift_index,
                            .n_cs = n_cs,
                            .l_ra = l_ra});
    default:
      throw std::invalid_argument("SeqParams::build: unknown family");
  }
}

std::vector<SeqParams> papr_cm_enumeration(Family family, int l_ra, int n_cs, long max_count) {
  const int windows = l_ra / n_cs;
  const int roots = l_ra - 1;
  std::vector<SeqParams> grid;
  switch (family) {
    case Family::ZC:
      for (int u = 1; u <= roots; ++u)
        for (int v = 0; v < windows; ++v)
          grid.push_back({.family = family, .root = u, .shift_index = v});
      break;
    case Family::mZC:
      // the uncovered ZC set plus covers stepped by 2 samples
      for (int u = 1; u <= roots; ++u)
        for (int v = 0; v < windows; ++v)
          grid.push_back({.family = family, .plain_zc = true, .root = u, .shift_index = v});
      for (int l = 0; l <= l_ra - 1; l += 2)
        for (int u = 1; u <= roots; ++u)
          for (int v = 0; v < windows; ++v)
            grid.push_back({.family = family, .root = u, .shift_index = v, .cover_shift = l});
      break;
    case Family::aZC:
      // the cover index here is the Alltop power, stepped by 2 like the mZC
      // cover shifts; power 0 is the uncovered ZC subset
      for (int l = 0; l <= l_ra - 1; l += 2)
        for (int u = 1; u <= roots; ++u)
          for (int v = 0; v < windows; ++v)
            grid.push_back(
                {.family = family, .root = u, .shift_index = v, .power = l, .lambda = 1, .w = 1});
      break;
    case Family::mALL:
      for (int lambda = 0; lambda <= l_ra - 2; ++lambda)
        for (int w = 0; w <= (l_ra - 1) / 2; ++w)
          for (int v = 0; v < windows; ++v)
            grid.push_back({.family = family,
                            .shift_index = v,
                            .cover_shift = 1,
                            .power = 1,
                            .lambda = lambda,
                            .w = w});
      break;
  }
  if (max_count > 0 && max_count < static_cast<long>(grid.size())) {
    std::vector<SeqParams> sub;
    sub.reserve(max_count);
    const double stride =
        static_cast<double>(grid.size()) / static_cast<double>(max_count);
    for (long i = 0; i < max_count; ++i)
      sub.push_back(grid[static_cast<std::size_t>(static_cast<double>(i) * stride)]);
    grid = std::move(sub);
  }
  return grid;
}

namespace {

// Plans built once; each worker synthesizes into its own buffers. The metric
// accumulation order matches papr_db / cubic_metric_db over the CP-included
// signal.
struct OfdmPipeline {
  OfdmConfig cfg;
  FftPlan seq_plan;
  FftPlan time_plan;

  OfdmPipeline(int l_ra, const OfdmConfig& c)
      : cfg(c), seq_plan(static_cast<std::size_t>(l_ra)),
        time_plan(static_cast<std::size_t>(c.ifft_size)) {}

  void metrics(const ComplexSequence& seq, FftScratch& ws, std::vector<Complex>& bins,
               std::vector<Complex>& grid, std::vector<Complex>& body, double* papr,
               double* cm) const {
    const std::size_t L = seq.size();
    bins.resize(L);
    seq_plan.forward(seq.data(), bins.data(), ws);
    const double fwd_scale = 1.0 / std::sqrt(static_cast<double>(L));
    grid.assign(static_cast<std::size_t>(cfg.ifft_size), Complex(0.0, 0.0));
    for (std::size_t i = 0; i < L; ++i)
      grid[static_cast<std::size_t>(cfg.mapping_start) + i] = bins[i] * fwd_scale;
    body.resize(grid.size());
    time_plan.inverse(grid.data(), body.data(), ws);
    const double inv_scale = std::sqrt(static_cast<double>(cfg.ifft_size));
    for (Complex& v : body) v *= inv_scale;

    const std::size_t n = body.size();
    const std::size_t cp = static_cast<std::size_t>(cfg.cp_length);
    double peak = 0.0, sum2 = 0.0, sum6 = 0.0;
    auto feed = [&](const Complex& v) {
      const double p = v.real() * v.real() + v.imag() * v.imag();
      peak = std::max(peak, p);
      sum2 += p;
      sum6 += p * p * p;
    };
    for (std::size_t i = n - cp; i < n; ++i) feed(body[i]);
    for (std::size_t i = 0; i < n; ++i) feed(body[i]);
    const double count = static_cast<double>(n + cp);
    const double mean2 = sum2 / count;
    const double mean6 = sum6 / count;
    *papr = 10.0 * std::log10(peak / mean2);
    *cm = (20.0 * std::log10(std::sqrt(mean6 / (mean2 * mean2 * mean2))) - 1.52) / 1.56;
  }
};

}  // namespace

std::vector<PaprCmFamilyResult> run_papr_cm(const ExperimentConfig& cfg) {
  cfg.validate();
  const int n_cs = ncs_from_zczc(cfg.zczc);
  const OfdmPipeline pipeline(cfg.l_ra, OfdmConfig{});
  std::vector<PaprCmFamilyResult> results;
  for (Family f : cfg.families) {
    const std::vector<SeqParams> grid = papr_cm_enumeration(f, cfg.l_ra, n_cs, cfg.papr_count);
    std::vector<MetricSample> samples(grid.size());

    const int workers = static_cast<int>(std::max<long>(
        1, std::min<long>(resolve_threads(cfg.threads), static_cast<long>(grid.size()))));
    std::vector<std::thread> pool;
    const std::size_t chunk = (grid.size() + workers - 1) / workers;
    auto work = [&](std::size_t begin, std::size_t end) {
      FftScratch ws;
      std::vector<Complex> bins, ofdm_grid, body;
      for (std::size_t i = begin; i < end; ++i) {
        const ComplexSequence seq = grid[i].build(cfg.l_ra, n_cs);
        double papr = 0.0, cm = 0.0;
        pipeline.metrics(seq, ws, bins, ofdm_grid, body, &papr, &cm);
        samples[i] = {grid[i].id(), papr, cm};
      }
    };
    if (workers == 1) {
      work(0, grid.size());
    } else {
      for (int w = 0; w < workers; ++w) {
        const std::size_t begin = static_cast<std::size_t>(w) * chunk;
        const std::size_t end = std::min(grid.size(), begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(work, begin, end);
      }
      for (auto& t : pool) t.join();
      pool.clear();
    }

    PaprCmFamilyResult res;
    res.family = f;
    res.papr_cdf = metric_cdf(samples, MetricKind::Papr);
    res.cm_cdf = metric_cdf(samples, MetricKind::CubicMetric);
    res.samples = std::move(samples);
    results.push_back(std::move(res));
  }
  return results;
}

void write_papr_cm_outputs(const ExperimentConfig& cfg,
                           const std::vector<PaprCmFamilyResult>& results) {
  if (cfg.out.empty()) throw std::invalid_argument("papr-cm: --out directory is required");
  std::filesystem::create_directories(cfg.out);
  const std::filesystem::path dir(cfg.out);

  auto cdf_csv = [&](const std::string& name, const CdfCurve& cdf) {
    std::ofstream f = open_file((dir / name).string());
    write_header(f, cfg, "cdf v1");
    f << "value_db,cumulative_prob\n";
    for (std::size_t i = 0; i < cdf.values.size(); ++i)
      f << fmt(cdf.values[i]) << ',' << fmt(cdf.cum_prob[i]) << '\n';
  };

  std::ofstream summary = open_file((dir / "summary.csv").string());
  write_header(summary, cfg, "papr-cm-summary v1");
  summary << "family,metric,count,p50_db,p99_db\n";

  for (const PaprCmFamilyResult& r : results) {
    const std::string fam = family_name(r.family);
    std::ofstream metrics = open_file((dir / ("metrics_" + fam + ".csv")).string());
    write_header(metrics, cfg, "metrics v1");
    metrics << "family,sequence_params,papr_db,cm_db\n";
    for (const MetricSample& s : r.samples)
      metrics << fam << ',' << s.sequence_id << ',' << fmt(s.papr_db) << ',' << fmt(s.cm_db)
              << '\n';
    cdf_csv("cdf_papr_" + fam + ".csv", r.papr_cdf);
    cdf_csv("cdf_cm_" + fam + ".csv", r.cm_cdf);
    summary << fam << ",papr," << r.samples.size() << ',' << fmt(r.papr_cdf.percentile(0.5))
            << ',' << fmt(r.papr_cdf.percentile(0.99)) << '\n';
    summary << fam << ",cm," << r.samples.size() << ',' << fmt(r.cm_cdf.percentile(0.5)) << ','
            << fmt(r.cm_cdf.percentile(0.99)) << '\n';
  }
}

// ---- generate / correlate helpers -------------------------------------------

ComplexSequence generate_from_params(Family family, const std::string& params, int l_ra,
                                     int n_cs) {
  std::map<std::string, int> kv;
  for (const std::string& part : split(params, ',')) {
    const std::string p = trim(part);
    if (p.empty()) continue;
    const auto eq = p.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("sequence params: expected key=value, got: " + p);
    kv[trim(p.substr(0, eq))] = std::stoi(trim(p.substr(eq + 1)));
  }
  auto take = [&kv](const char* key, int fallback) {
    auto it = kv.find(key);
    if (it == kv.end()) return fallback;
    const int v = it->second;
    kv.erase(it);
    return v;
  };
  ComplexSequence seq;
  switch (family) {
    case Family::ZC:
      seq = generate_zc(
          {.root = take("u", 1), .shift_index = take("v", 0), .n_cs = n_cs, .l_ra = l_ra});
      break;
    case Family::mZC:
      seq = generate_mzc({.cover_shift = take("l", 0),
                          .root = take("u", 1),
                          .shift_index = take("v", 0),
                          .n_cs = n_cs,
                          .l_ra = l_ra});
      break;
    case Family::aZC:
      seq = generate_azc({.power = take("l", 1),
                          .lambda = take("lambda", 0),
                          .w = take("w", 0),
                          .root = take("u", 1),
                          .shift_index = take("v", 0),
                          .n_cs = n_cs,
                          .l_ra = l_ra});
      break;
    case Family::mALL:
      seq = generate_mall({.power = take("l", 1),
                           .lambda = take("lambda", 0),
                           .w = take("w", 0),
                           .cover_shift = take("t", 0),
                           .shift_index = take("v", 0),
                           .n_cs = n_cs,
                           .l_ra = l_ra});
      break;
    default:
      throw std::invalid_argument("generate_from_params: unknown family");
  }
  if (!kv.empty())
    throw std::invalid_argument("sequence params: unknown key: " + kv.begin()->first);
  return seq;
}

}  // namespace prachseq
