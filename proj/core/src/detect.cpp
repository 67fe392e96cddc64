#include "prachseq/detect.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "prachseq/rng.hpp"

namespace prachseq {

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs body(begin, end, local) over contiguous chunks of [0, n); returns the
// per-worker locals for an order-independent merge.
template <typename Local, typename Body>
std::vector<Local> run_chunked(long n, int threads, const Local& init, Body body) {
  const int workers = static_cast<int>(
      std::max<long>(1, std::min<long>(resolve_threads(threads), n)));
  std::vector<Local> locals(static_cast<std::size_t>(workers), init);
  if (workers == 1) {
    body(0L, n, locals[0]);
    return locals;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const long chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const long begin = static_cast<long>(w) * chunk;
    const long end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&, w, begin, end] { body(begin, end, locals[w]); });
  }
  for (auto& t : pool) t.join();
  return locals;
}

void fill_noise(TrialRng& rng, double std_per_component, ComplexSequence& out) {
  for (Complex& v : out) v = rng.cgaussian(std_per_component);
}

}  // namespace

ComplexSequence apply_awgn(const ComplexSequence& x, const AwgnChannelSpec& channel) {
  if (!std::isfinite(channel.snr_db))
    throw std::invalid_argument("apply_awgn: snr_db must be finite");
  const double sigma2 = std::pow(10.0, -channel.snr_db / 10.0);
  const double std_pc = std::sqrt(sigma2 / 2.0);
  TrialRng rng(channel.seed);
  ComplexSequence y(x.size());
  for (std::size_t n = 0; n < x.size(); ++n) y[n] = x[n] + rng.cgaussian(std_pc);
  return y;
}

RootCorrelator::RootCorrelator(const std::vector<ComplexSequence>& roots)
    : l_ra_(roots.empty() ? 0 : static_cast<int>(roots.front().size())),
      plan_(roots.empty() ? 1 : roots.front().size()) {
  if (roots.empty()) throw std::invalid_argument("RootCorrelator: need at least one root");
  FftScratch ws;
  conj_spectra_.reserve(roots.size());
  const double inv = 1.0 / static_cast<double>(l_ra_);
  for (const ComplexSequence& root : roots) {
    if (static_cast<int>(root.size()) != l_ra_)
      throw std::invalid_argument("RootCorrelator: roots must share one length");
    std::vector<Complex> spec(root.size());
    plan_.forward(root.data(), spec.data(), ws);
    for (Complex& v : spec) v = std::conj(v) * inv;
    conj_spectra_.push_back(std::move(spec));
  }
}

PdpMatrix RootCorrelator::make_pdp() const {
  PdpMatrix pdp;
  pdp.rows.assign(conj_spectra_.size(), std::vector<double>(l_ra_, 0.0));
  pdp.antenna_count = 0;
  return pdp;
}

void RootCorrelator::accumulate(const ComplexSequence& signal, PdpMatrix& pdp,
                                FftScratch& ws) const {
  if (static_cast<int>(signal.size()) != l_ra_)
    throw std::invalid_argument("RootCorrelator: signal length mismatch");
  const std::size_t L = signal.size();
  std::vector<Complex> sigf(L), prod(L), corr(L);
  plan_.forward(signal.data(), sigf.data(), ws);
  for (std::size_t r = 0; r < conj_spectra_.size(); ++r) {
    const std::vector<Complex>& ks = conj_spectra_[r];
    for (std::size_t k = 0; k < L; ++k) prod[k] = sigf[k] * ks[k];
    plan_.forward(prod.data(), corr.data(), ws);
    std::vector<double>& row = pdp.rows[r];
    for (std::size_t tau = 0; tau < L; ++tau) {
      const Complex& v = corr[tau];
      row[tau] += v.real() * v.real() + v.imag() * v.imag();
    }
  }
  ++pdp.antenna_count;
}

PdpMatrix RootCorrelator::accumulate_all(const std::vector<ComplexSequence>& per_antenna) const {
  if (per_antenna.empty())
    throw std::invalid_argument("accumulate_pdp: need at least one antenna signal");
  PdpMatrix pdp = make_pdp();
  FftScratch ws;
  for (const ComplexSequence& s : per_antenna) accumulate(s, pdp, ws);
  return pdp;
}

PdpMatrix accumulate_pdp(const std::vector<ComplexSequence>& per_antenna,
                         const std::vector<ComplexSequence>& roots) {
  return RootCorrelator(roots).accumulate_all(per_antenna);
}

DetectionOutcome normalize_and_threshold(const PdpMatrix& pdp, double eta, int n_cs,
                                         int max_preambles) {
  if (eta <= 0.0) throw std::invalid_argument("normalize_and_threshold: eta must be positive");
  DetectionOutcome out;
  if (pdp.rows.empty()) return out;
  const int l_ra = static_cast<int>(pdp.rows.front().size());
  if (n_cs < 1 || n_cs > l_ra)
    throw std::invalid_argument("normalize_and_threshold: n_cs out of range [1, l_ra]");
  const int windows = l_ra / n_cs;

  double best = -1.0;
  int best_root = -1;
  int best_window = -1;
  for (std::size_t r = 0; r < pdp.rows.size(); ++r) {
    const std::vector<double>& row = pdp.rows[r];
    double sum = 0.0;
    for (double v : row) sum += v;
    const double mean = sum / static_cast<double>(l_ra);
    if (!(mean > 0.0)) continue;
    for (int w = 0; w < windows; ++w) {
      if (max_preambles > 0 &&
          static_cast<int>(r) * windows + w >= max_preambles)
        break;
      const int begin = w * n_cs;
      double wmax = row[begin];
      for (int i = begin + 1; i < begin + n_cs; ++i) wmax = std::max(wmax, row[i]);
      const double stat = wmax / mean;
      if (stat > best) {
        best = stat;
        best_root = static_cast<int>(r);
        best_window = w;
      }
    }
  }

  if (best_root >= 0) out.peak_value = best;
  if (best_root >= 0 && best >= eta) {
    out.detected = true;
    out.root_index = best_root;
    out.window_index = best_window;
    out.preamble_id = best_root * windows + best_window;
  }
  return out;
}

void ThresholdTable::set(Family family, int antennas, double eta) {
  eta_[{static_cast<int>(family), antennas}] = eta;
}

double ThresholdTable::at(Family family, int antennas) const {
  auto it = eta_.find({static_cast<int>(family), antennas});
  if (it == eta_.end()) {
    std::ostringstream msg;
    msg << "no calibrated threshold for " << family_name(family) << " with " << antennas
        << " antenna(s); run the calibrate step first";
    throw std::runtime_error(msg.str());
  }
  return it->second;
}

bool ThresholdTable::contains(Family family, int antennas) const {
  return eta_.count({static_cast<int>(family), antennas}) > 0;
}

void ThresholdTable::validate() const {
  for (Family f : all_families()) {
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& [key, eta] : eta_) {
      if (key.first != static_cast<int>(f)) continue;
      if (!(eta > 1.0)) {
        std::ostringstream msg;
        msg << "threshold table invalid: eta " << eta << " for " << family_name(f)
            << " must exceed 1";
        throw std::runtime_error(msg.str());
      }
      if (eta > prev) {
        std::ostringstream msg;
        msg << "threshold table invalid: eta for " << family_name(f)
            << " must be non-increasing in antenna count";
        throw std::runtime_error(msg.str());
      }
      prev = eta;
    }
  }
}

void ThresholdTable::save(const std::string& path) const {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  char buf[64];
  for (const auto& [key, eta] : eta_) {
    std::snprintf(buf, sizeof(buf), "%s,%d,%.6g\n",
                  family_name(static_cast<Family>(key.first)), key.second, eta);
    f << buf;
  }
}

ThresholdTable ThresholdTable::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open threshold file: " + path);
  ThresholdTable table;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string fam, ant, eta;
    if (!std::getline(ss, fam, ',') || !std::getline(ss, ant, ',') || !std::getline(ss, eta))
      throw std::runtime_error("threshold file: malformed line: " + line);
    table.set(parse_family(fam), std::stoi(ant), std::stod(eta));
  }
  table.validate();
  return table;
}

namespace {

struct TrialDetector {
  PreambleSet set;
  RootCorrelator correlator;

  TrialDetector(Family family, int l_ra, int zczc)
      : set(build_preamble_set(family, l_ra, zczc)), correlator(set.roots) {}
};

// Max normalized window statistic of one noise-only trial.
double noise_trial_statistic(const TrialDetector& det, int antennas, TrialRng& rng,
                             PdpMatrix& pdp, ComplexSequence& noise, FftScratch& ws) {
  for (auto& row : pdp.rows) std::fill(row.begin(), row.end(), 0.0);
  pdp.antenna_count = 0;
  constexpr double kStd = 0.70710678118654752440;  // unit total variance
  for (int a = 0; a < antennas; ++a) {
    fill_noise(rng, kStd, noise);
    det.correlator.accumulate(noise, pdp, ws);
  }
  return normalize_and_threshold(pdp, std::numeric_limits<double>::infinity(), det.set.n_cs,
                                 kCellPreambleCount)
      .peak_value;
}

std::string cell_tag(const char* what, Family family, int antennas) {
  std::ostringstream ss;
  ss << what << '/' << family_name(family) << '/' << antennas;
  return ss.str();
}

}  // namespace

CalibrationResult calibrate_threshold(Family family, int antenna_count, long trials,
                                      const CalibrationOptions& opt) {
  if (trials < 1) throw std::invalid_argument("calibrate_threshold: trials must be >= 1");
  if (antenna_count < 1)
    throw std::invalid_argument("calibrate_threshold: antenna_count must be >= 1");

  const TrialDetector det(family, opt.l_ra, opt.zczc);
  constexpr double kStep = 0.1;
  const int grid_size = static_cast<int>(std::lround((opt.eta_max - opt.eta_min) / kStep)) + 1;
  std::vector<double> grid(grid_size);
  for (int j = 0; j < grid_size; ++j) grid[j] = opt.eta_min + kStep * j;

  const std::string tag = cell_tag("calibrate", family, antenna_count);
  auto locals = run_chunked(
      trials, opt.threads, std::vector<long>(grid_size + 1, 0),
      [&](long begin, long end, std::vector<long>& hist) {
        PdpMatrix pdp = det.correlator.make_pdp();
        ComplexSequence noise(static_cast<std::size_t>(det.correlator.l_ra()));
        FftScratch ws;
        for (long i = begin; i < end; ++i) {
          TrialRng rng = TrialRng::for_trial(opt.master_seed, tag, static_cast<std::uint64_t>(i));
          const double t = noise_trial_statistic(det, antenna_count, rng, pdp, noise, ws);
          // hist[j+1] counts trials whose statistic reaches grid[j] but not
          // grid[j+1]; hist[0] collects trials below the whole grid.
          int j = 0;
          while (j < grid_size && t >= grid[j]) ++j;
          ++hist[j];
        }
      });

  std::vector<long> hist(grid_size + 1, 0);
  for (const auto& local : locals)
    for (int j = 0; j <= grid_size; ++j) hist[j] += local[j];

  // fired[j] = #trials with statistic >= grid[j]
  std::vector<long> fired(grid_size, 0);
  long acc = 0;
  for (int j = grid_size - 1; j >= 0; --j) {
    acc += hist[j + 1];
    fired[j] = acc;
  }

  for (int j = 0; j < grid_size; ++j) {
    const double p = static_cast<double>(fired[j]) / static_cast<double>(trials);
    if (p <= opt.target_pfalse) {
      return {grid[j], p, trials};
    }
  }
  std::ostringstream msg;
  msg << "calibration failed: false-alarm target " << opt.target_pfalse
      << " not reached at eta " << opt.eta_max << " for " << family_name(family) << " with "
      << antenna_count << " antenna(s)";
  throw std::runtime_error(msg.str());
}

double measure_pfalse(Family family, int antenna_count, long trials, double eta,
                      const CalibrationOptions& opt) {
  if (trials < 1) throw std::invalid_argument("measure_pfalse: trials must be >= 1");
  const TrialDetector det(family, opt.l_ra, opt.zczc);
  const std::string tag = cell_tag("pfalse-check", family, antenna_count);
  auto locals = run_chunked(trials, opt.threads, 0L, [&](long begin, long end, long& count) {
    PdpMatrix pdp = det.correlator.make_pdp();
    ComplexSequence noise(static_cast<std::size_t>(det.correlator.l_ra()));
    FftScratch ws;
    for (long i = begin; i < end; ++i) {
      TrialRng rng = TrialRng::for_trial(opt.master_seed, tag, static_cast<std::uint64_t>(i));
      if (noise_trial_statistic(det, antenna_count, rng, pdp, noise, ws) >= eta) ++count;
    }
  });
  long fired = 0;
  for (long c : locals) fired += c;
  return static_cast<double>(fired) / static_cast<double>(trials);
}

double detection_probability(Family family, int antenna_count, double snr_db, long trials,
                             double eta, const DetectionRunOptions& opt) {
  if (trials < 1) throw std::invalid_argument("detection_probability: trials must be >= 1");
  if (antenna_count < 1)
    throw std::invalid_argument("detection_probability: antenna_count must be >= 1");
  const TrialDetector det(family, opt.l_ra, opt.zczc);
  const double sigma2 = std::pow(10.0, -snr_db / 10.0);
  const double std_pc = std::sqrt(sigma2 / 2.0);

  char snr_txt[32];
  std::snprintf(snr_txt, sizeof(snr_txt), "%.6g", snr_db);
  const std::string tag =
      cell_tag("detect", family, antenna_count) + '/' + snr_txt;

  auto locals = run_chunked(trials, opt.threads, 0L, [&](long begin, long end, long& correct) {
    PdpMatrix pdp = det.correlator.make_pdp();
    const std::size_t L = static_cast<std::size_t>(det.correlator.l_ra());
    ComplexSequence received(L);
    FftScratch ws;
    for (long i = begin; i < end; ++i) {
      TrialRng rng = TrialRng::for_trial(opt.master_seed, tag, static_cast<std::uint64_t>(i));
      const int id = static_cast<int>(rng.uniform_int(kCellPreambleCount));
      const ComplexSequence& tx = det.set.preambles[static_cast<std::size_t>(id)];
      for (auto& row : pdp.rows) std::fill(row.begin(), row.end(), 0.0);
      pdp.antenna_count = 0;
      for (int a = 0; a < antenna_count; ++a) {
        for (std::size_t n = 0; n < L; ++n) received[n] = tx[n] + rng.cgaussian(std_pc);
        det.correlator.accumulate(received, pdp, ws);
      }
      const DetectionOutcome out =
          normalize_and_threshold(pdp, eta, det.set.n_cs, kCellPreambleCount);
      if (out.detected && out.preamble_id && *out.preamble_id == id) ++correct;
    }
  });
  long correct = 0;
  for (long c : locals) correct += c;
  return static_cast<double>(correct) / static_cast<double>(trials);
}

}  // namespace prachseq
