// Deterministic per-trial random streams. Every Monte Carlo trial derives its
// generator from (master_seed, tag, trial_index), so results do not depend on
// execution order or worker count.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

#include "prachseq/complex_sequence.hpp"

namespace prachseq {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

  static TrialRng for_trial(std::uint64_t master_seed, std::string_view tag,
                            std::uint64_t trial_index) {
    std::uint64_t s = splitmix64(master_seed ^ fnv1a64(tag));
    s = splitmix64(s ^ trial_index);
    return TrialRng(s);
  }

  // [0, 1)
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // [0, bound), rejection-sampled
  std::uint32_t uniform_int(std::uint32_t bound) {
    const std::uint64_t limit = (~std::uint64_t{0} / bound) * bound;
    std::uint64_t v;
    do {
      v = engine_();
    } while (v >= limit);
    return static_cast<std::uint32_t>(v % bound);
  }

  // Standard normal via Box-Muller (explicit, so streams are identical across
  // standard libraries).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Circularly-symmetric complex Gaussian with the given per-component std.
  Complex cgaussian(double std_per_component) {
    const double re = gaussian() * std_per_component;
    const double im = gaussian() * std_per_component;
    return Complex(re, im);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace prachseq
