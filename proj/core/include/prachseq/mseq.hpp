#pragma once

#include <cstdint>
#include <vector>

#include "prachseq/complex_sequence.hpp"

namespace prachseq {

// Maximal-length sequences from a Fibonacci LFSR.
//
// taps[i] holds the coefficient g_i of the generator polynomial
// g(P) = g_m P^m + ... + g_1 P + g_0 (so taps.size() == m+1, taps[m] and
// taps[0] must be 1 for a valid primitive polynomial). The register realizes
// the recurrence
//   a[n+m] = XOR of a[n+j] over all j < m with g_j = 1,
// seeded with initial_state = (a[0], ..., a[m-1]); the emitted stream is
// a[0], a[1], .... For primitive taps its period is N_m = 2^m - 1.
struct MSeqParams {
  std::vector<std::uint8_t> taps;           // g_0 .. g_m
  std::vector<std::uint8_t> initial_state;  // a_0 .. a_{m-1}, not all zero
  int cyclic_shift = 0;                     // applied mod N_m on the native stream
  int extend_to = 0;                        // 0 = native length; else >= N_m, periodic extension
};

// g(P) = P^7 + P + 1, all-ones register: the default length-127 generator.
MSeqParams default_mseq_params();

// Raw bit stream a[0..count-1] of the LFSR (no shift, no extension).
std::vector<std::uint8_t> lfsr_bits(const std::vector<std::uint8_t>& taps,
                                    const std::vector<std::uint8_t>& initial_state,
                                    std::size_t count);

// Shifted, optionally extended, bipolar-mapped sequence: bit b -> (-1)^b.
ComplexSequence generate_mseq(const MSeqParams& params);

// Length-139 bipolar cover used by the combination families: the default m=7
// sequence, cyclic shift applied mod 127 on the native stream, then extended
// by appending its first 12 samples.
ComplexSequence mseq_cover_139(int cyclic_shift);

}  // namespace prachseq
