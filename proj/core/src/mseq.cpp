#include "prachseq/mseq.hpp"

#include <algorithm>
#include <stdexcept>

namespace prachseq {

MSeqParams default_mseq_params() {
  MSeqParams p;
  p.taps = {1, 1, 0, 0, 0, 0, 0, 1};  // g_0=1, g_1=1, g_7=1
  p.initial_state.assign(7, 1);
  return p;
}

std::vector<std::uint8_t> lfsr_bits(const std::vector<std::uint8_t>& taps,
                                    const std::vector<std::uint8_t>& initial_state,
                                    std::size_t count) {
  if (taps.size() < 2) throw std::invalid_argument("lfsr: need polynomial order m >= 1");
  const std::size_t m = taps.size() - 1;
  if (taps[m] != 1 || taps[0] != 1)
    throw std::invalid_argument("lfsr: g_m and g_0 must both be 1");
  if (initial_state.size() != m)
    throw std::invalid_argument("lfsr: initial state length must equal polynomial order");
  if (std::all_of(initial_state.begin(), initial_state.end(),
                  [](std::uint8_t b) { return b == 0; }))
    throw std::invalid_argument("lfsr: all-zero initial state is degenerate");

  std::vector<std::uint8_t> a(std::max(count, m));
  std::copy(initial_state.begin(), initial_state.end(), a.begin());
  for (std::size_t n = m; n < a.size(); ++n) {
    std::uint8_t f = 0;
    for (std::size_t j = 0; j < m; ++j)
      if (taps[j]) f ^= a[n - m + j];
    a[n] = f;
  }
  a.resize(count);
  return a;
}

ComplexSequence generate_mseq(const MSeqParams& p) {
  const std::size_t m = p.taps.empty() ? 0 : p.taps.size() - 1;
  const std::size_t native = (std::size_t{1} << m) - 1;
  std::vector<std::uint8_t> bits = lfsr_bits(p.taps, p.initial_state, native);

  std::size_t out_len = native;
  if (p.extend_to != 0) {
    if (p.extend_to < 0 || static_cast<std::size_t>(p.extend_to) < native)
      throw std::invalid_argument("generate_mseq: extend_to must be >= native length 2^m-1");
    out_len = static_cast<std::size_t>(p.extend_to);
  }

  long shift = p.cyclic_shift % static_cast<long>(native);
  if (shift < 0) shift += static_cast<long>(native);

  ComplexSequence x(out_len);
  for (std::size_t n = 0; n < out_len; ++n) {
    const std::uint8_t b = bits[(n + static_cast<std::size_t>(shift)) % native];
    x[n] = Complex(b ? -1.0 : 1.0, 0.0);
  }
  return x;
}

ComplexSequence mseq_cover_139(int cyclic_shift) {
  MSeqParams p = default_mseq_params();
  p.cyclic_shift = cyclic_shift;
  p.extend_to = 139;
  return generate_mseq(p);
}

}  // namespace prachseq
