#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "prachseq/correlate.hpp"
#include "prachseq/cover_sequences.hpp"
#include "prachseq/fft.hpp"
#include "prachseq/rng.hpp"
#include "prachseq/zadoff_chu.hpp"

using namespace prachseq;

namespace {

ComplexSequence random_sequence(TrialRng& rng, std::size_t n, double amp = 1.0) {
  ComplexSequence x(n);
  for (auto& v : x) v = Complex(rng.gaussian() * amp, rng.gaussian() * amp);
  return x;
}

double max_lag_deviation(const CorrelationProfile& a, const CorrelationProfile& b) {
  REQUIRE(a.values.size() == b.values.size());
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

std::size_t argmax_mag(const CorrelationProfile& p) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < p.values.size(); ++i)
    if (std::abs(p.values[i]) > std::abs(p.values[best])) best = i;
  return best;
}

}  // namespace

TEST_CASE("fft transform against the direct DFT") {
  TrialRng rng(11);
  for (std::size_t n : {1u, 2u, 3u, 8u, 127u, 128u, 139u}) {
    const ComplexSequence x = random_sequence(rng, n);
    const FftPlan plan(n);
    const auto fwd = plan.forward(x);
    const auto ref = dft_direct(x, false);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(fwd[k] - ref[k]) < 1e-9);

    const auto inv = plan.inverse(fwd);
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(inv[k] - x[k]) < 1e-9);
  }
}

TEST_CASE("zero-lag value is the sequence energy") {
  const ComplexSequence x = zc_root(3, 139);
  const CorrelationProfile prof = periodic_correlation_naive(x, x);
  CHECK(prof.values[0].real() == doctest::Approx(139.0).epsilon(1e-13));
  CHECK(std::abs(prof.values[0].imag()) < 1e-12);

  TrialRng rng(5);
  const ComplexSequence y = random_sequence(rng, 101, 3.0);
  const CorrelationProfile prof2 = periodic_correlation_naive(y, y);
  double energy = 0.0;
  for (const Complex& v : y) energy += std::norm(v);
  CHECK(prof2.values[0].real() == doctest::Approx(energy).epsilon(1e-12));
  CHECK(std::abs(prof2.values[0].imag()) < 1e-12);
}

TEST_CASE("constant sequences correlate to a constant") {
  const ComplexSequence ones(4, Complex(1.0, 0.0));
  const CorrelationProfile prof = periodic_correlation_naive(ones, ones);
  for (const Complex& v : prof.values) {
    CHECK(v.real() == 4.0);
    CHECK(v.imag() == 0.0);
  }
}

TEST_CASE("lag convention: shifted first argument peaks at +s") {
  const ComplexSequence x = zc_root(1, 139);
  const ComplexSequence shifted = cyclic_shift(x, 5);

  const CorrelationProfile rx = periodic_correlation_naive(shifted, x);
  CHECK(argmax_mag(rx) == 5);
  CHECK(std::abs(rx.values[5]) == doctest::Approx(139.0).epsilon(1e-12));

  // and a shifted second argument lands at L - s
  const CorrelationProfile ry = periodic_correlation_naive(x, shifted);
  CHECK(argmax_mag(ry) == 134);
  CHECK(std::abs(ry.values[134]) == doctest::Approx(139.0).epsilon(1e-12));
}

TEST_CASE("peak magnitude is invariant under the shift amount") {
  const ComplexSequence x = zc_root(7, 139);
  for (long s : {1L, 23L, 69L, 115L, 138L}) {
    const CorrelationProfile prof = periodic_correlation_naive(cyclic_shift(x, s), x);
    CHECK(argmax_mag(prof) == static_cast<std::size_t>(s));
    CHECK(std::abs(prof.values[s]) == doctest::Approx(139.0).epsilon(1e-12));
  }
}

TEST_CASE("fft correlation equals the naive oracle") {
  TrialRng rng(17);
  SUBCASE("one hundred random pairs at length 139") {
    for (int rep = 0; rep < 100; ++rep) {
      const ComplexSequence x = random_sequence(rng, 139);
      const ComplexSequence y = random_sequence(rng, 139);
      CHECK(max_lag_deviation(periodic_correlation_fft(x, y),
                              periodic_correlation_naive(x, y)) < 1e-9);
    }
  }
  SUBCASE("awkward lengths") {
    for (std::size_t n : {1u, 2u, 7u, 127u}) {
      const ComplexSequence x = random_sequence(rng, n);
      const ComplexSequence y = random_sequence(rng, n);
      CHECK(max_lag_deviation(periodic_correlation_fft(x, y),
                              periodic_correlation_naive(x, y)) < 1e-9);
    }
  }
  SUBCASE("zc autocorrelation through the fft path") {
    const ComplexSequence x = zc_root(3, 139);
    const CorrelationProfile prof = periodic_correlation_fft(x, x);
    CHECK(std::abs(prof.values[0]) == doctest::Approx(139.0).epsilon(1e-12));
    for (std::size_t tau = 1; tau < prof.values.size(); ++tau)
      CHECK(std::abs(prof.values[tau]) < 1e-9);
  }
  SUBCASE("length one") {
    const ComplexSequence x = {Complex(2.0, 1.0)};
    const ComplexSequence y = {Complex(-1.0, 3.0)};
    const CorrelationProfile prof = periodic_correlation_fft(x, y);
    CHECK(std::abs(prof.values[0] - x[0] * std::conj(y[0])) < 1e-12);
  }
}

TEST_CASE("correlation input validation") {
  const ComplexSequence a(10, Complex(1.0, 0.0));
  const ComplexSequence b(11, Complex(1.0, 0.0));
  CHECK_THROWS_AS(periodic_correlation_naive(a, b), std::invalid_argument);
  CHECK_THROWS_AS(periodic_correlation_fft(a, b), std::invalid_argument);
  CHECK_THROWS_AS(periodic_correlation_naive({}, {}), std::invalid_argument);
}

TEST_CASE("autocorrelation conjugate symmetry") {
  TrialRng rng(23);
  const ComplexSequence x = random_sequence(rng, 139);
  const CorrelationProfile prof = periodic_correlation_naive(x, x);
  const std::size_t L = prof.values.size();
  for (std::size_t tau = 0; tau < L; ++tau) {
    const Complex expect = std::conj(prof.values[(L - tau) % L]);
    CHECK(std::abs(prof.values[tau] - expect) < 1e-10);
  }
}

TEST_CASE("power delay profile") {
  CorrelationProfile prof;
  prof.values = {Complex(139.0, 0.0), Complex(0.0, 0.0), Complex(3.0, -4.0)};
  const std::vector<double> pdp = power_delay_profile(prof);
  CHECK(pdp[0] == 19321.0);
  CHECK(pdp[1] == 0.0);
  CHECK(pdp[2] == 25.0);

  TrialRng rng(31);
  CorrelationProfile rnd;
  rnd.values = random_sequence(rng, 64, 2.0);
  const std::vector<double> p = power_delay_profile(rnd);
  for (std::size_t i = 0; i < p.size(); ++i) {
    CHECK(p[i] >= 0.0);
    CHECK(p[i] ==
          rnd.values[i].real() * rnd.values[i].real() +
              rnd.values[i].imag() * rnd.values[i].imag());
  }
}

TEST_CASE("cfo autocorrelation") {
  SUBCASE("zero offset reduces to the plain autocorrelation") {
    const ComplexSequence x = zc_root(2, 139);
    CHECK(max_lag_deviation(cfo_autocorrelation(x, {0.0}),
                            periodic_correlation_naive(x, x)) < 1e-9);
  }

  SUBCASE("matches the modulated-sum definition") {
    TrialRng rng(41);
    const ComplexSequence x = random_sequence(rng, 64);
    const double f0 = 1.7;
    const CorrelationProfile prof = cfo_autocorrelation(x, {f0});
    const std::size_t L = x.size();
    for (std::size_t tau = 0; tau < L; ++tau) {
      Complex acc(0.0, 0.0);
      for (std::size_t n = 0; n < L; ++n) {
        const double ang = 2.0 * 3.14159265358979323846 * f0 * double(n) / double(L);
        acc += x[n] * std::conj(x[(n + tau) % L]) * Complex(std::cos(ang), std::sin(ang));
      }
      CHECK(std::abs(prof.values[tau] - acc) < 1e-8);
    }
  }

  SUBCASE("integer offsets relocate the zc peak at full strength") {
    const ComplexSequence x = zc_root(2, 139);
    // mu*tau + f0 = 0 mod 139 puts the false peak at tau = -f0 * mu^{-1}
    const CorrelationProfile p1 = cfo_autocorrelation(x, {1.0});
    CHECK(argmax_mag(p1) == 69);
    CHECK(std::abs(p1.values[69]) == doctest::Approx(139.0).epsilon(1e-9));
    const CorrelationProfile p2 = cfo_autocorrelation(x, {2.0});
    CHECK(argmax_mag(p2) == 138);
    CHECK(std::abs(p2.values[138]) == doctest::Approx(139.0).epsilon(1e-9));
  }

  SUBCASE("mall reference stays far below the peak under integer offsets") {
    const ComplexSequence z = generate_mall(
        {.power = 1, .lambda = 2, .w = 1, .cover_shift = 0, .shift_index = 0, .n_cs = 23});
    for (double f0 : {-2.0, -1.0, 1.0, 2.0}) {
      const CorrelationProfile prof = cfo_autocorrelation(z, {f0});
      double peak = 0.0;
      for (const Complex& v : prof.values) peak = std::max(peak, std::abs(v));
      CHECK(peak < 0.5 * 139.0);
    }
  }
}
