#include "prachseq/zadoff_chu.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace prachseq {

ComplexSequence zc_root(int root, int l_ra) {
  if (l_ra < 2) throw std::invalid_argument("zc_root: l_ra must be >= 2");
  if (root < 1 || root > l_ra - 1)
    throw std::invalid_argument("zc_root: root out of range [1, l_ra-1]");
  if (std::gcd(root, l_ra) != 1)
    throw std::invalid_argument("zc_root: root must be coprime to l_ra");
  ComplexSequence x(static_cast<std::size_t>(l_ra));
  const double scale = std::numbers::pi * static_cast<double>(root) / static_cast<double>(l_ra);
  for (int n = 0; n < l_ra; ++n) {
    // phase argument reduced mod 2*L before multiply to keep precision at large n
    const long long nn = static_cast<long long>(n) * (n + 1) % (2LL * l_ra);
    const double phase = -scale * static_cast<double>(nn);
    x[n] = Complex(std::cos(phase), std::sin(phase));
  }
  return x;
}

ComplexSequence generate_zc(const ZcParams& p) {
  if (p.n_cs < 1 || p.n_cs > p.l_ra)
    throw std::invalid_argument("generate_zc: n_cs out of range [1, l_ra]");
  const int windows = p.l_ra / p.n_cs;
  if (p.shift_index < 0 || p.shift_index >= windows)
    throw std::invalid_argument("generate_zc: shift_index out of range [0, floor(l_ra/n_cs))");
  ComplexSequence x = zc_root(p.root, p.l_ra);
  if (p.shift_index == 0) return x;
  return cyclic_shift(x, static_cast<long>(p.shift_index) * p.n_cs);
}

}  // namespace prachseq
