#include "prachseq/cover_sequences.hpp"

#include <stdexcept>

#include "prachseq/alltop.hpp"
#include "prachseq/mseq.hpp"
#include "prachseq/zadoff_chu.hpp"

namespace prachseq {

namespace {

void require_139(int l_ra, const char* who) {
  if (l_ra != 139)
    throw std::invalid_argument(std::string(who) +
                                ": m-sequence covers are defined for l_ra = 139 only");
}

ComplexSequence elementwise_product(const ComplexSequence& a, const ComplexSequence& b) {
  ComplexSequence z(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) z[n] = a[n] * b[n];
  return z;
}

}  // namespace

ComplexSequence generate_mzc(const MzcParams& p) {
  require_139(p.l_ra, "generate_mzc");
  if (p.cover_shift < 0 || p.cover_shift > p.l_ra - 1)
    throw std::invalid_argument("generate_mzc: cover_shift out of range [0, l_ra-1]");
  const ComplexSequence cover = mseq_cover_139(p.cover_shift);
  const ComplexSequence zc =
      generate_zc({.root = p.root, .shift_index = p.shift_index, .n_cs = p.n_cs, .l_ra = p.l_ra});
  return elementwise_product(cover, zc);
}

ComplexSequence generate_azc(const AzcParams& p) {
  const ComplexSequence cover =
      generate_alltop({.lambda = p.lambda, .w = p.w, .power = p.power, .l_ra = p.l_ra});
  const ComplexSequence zc =
      generate_zc({.root = p.root, .shift_index = p.shift_index, .n_cs = p.n_cs, .l_ra = p.l_ra});
  return elementwise_product(cover, zc);
}

ComplexSequence generate_mall(const MallParams& p) {
  require_139(p.l_ra, "generate_mall");
  if (p.cover_shift < 0 || p.cover_shift > p.l_ra - 1)
    throw std::invalid_argument("generate_mall: cover_shift out of range [0, l_ra-1]");
  if (p.n_cs < 1 || p.n_cs > p.l_ra)
    throw std::invalid_argument("generate_mall: n_cs out of range [1, l_ra]");
  const int windows = p.l_ra / p.n_cs;
  if (p.shift_index < 0 || p.shift_index >= windows)
    throw std::invalid_argument("generate_mall: shift_index out of range [0, floor(l_ra/n_cs))");

  const ComplexSequence alltop =
      generate_alltop({.lambda = p.lambda, .w = p.w, .power = p.power, .l_ra = p.l_ra});
  const ComplexSequence cover = cyclic_shift(mseq_cover_139(0), p.cover_shift);
  ComplexSequence z = elementwise_product(alltop, cover);
  if (p.shift_index == 0) return z;
  return cyclic_shift(z, static_cast<long>(p.shift_index) * p.n_cs);
}

}  // namespace prachseq
