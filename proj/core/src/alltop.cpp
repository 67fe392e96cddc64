#include "prachseq/alltop.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace prachseq {

ComplexSequence generate_alltop(const AlltopParams& p) {
  if (p.l_ra < 2) throw std::invalid_argument("generate_alltop: l_ra must be >= 2");
  const long long L = p.l_ra;
  auto in_range = [L](int v) { return v >= 0 && v < L; };
  if (!in_range(p.lambda) || !in_range(p.w) || !in_range(p.power))
    throw std::invalid_argument("generate_alltop: lambda, w, power must lie in [0, l_ra-1]");

  ComplexSequence x(static_cast<std::size_t>(L));
  const double step = -2.0 * std::numbers::pi / static_cast<double>(L);
  for (long long n = 0; n < L; ++n) {
    // integer phase index reduced mod L before the float multiply
    const long long cubic = (n + p.w) * (n + p.w) % L * ((n + p.w) % L) % L;
    const long long idx = (cubic + p.lambda * n) % L * p.power % L;
    const double phase = step * static_cast<double>(idx);
    x[n] = Complex(std::cos(phase), std::sin(phase));
  }
  return x;
}

}  // namespace prachseq
