#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prachseq/complex_sequence.hpp"

namespace prachseq {

enum class Family { ZC, mZC, aZC, mALL };

constexpr int kCellPreambleCount = 64;

const char* family_name(Family f);
Family parse_family(const std::string& name);  // case-insensitive
const std::vector<Family>& all_families();

// zeroCorrelationZoneConfig -> N_CS for the short preamble (unrestricted set).
// Config 0 (N_CS = 0, single-root operation) is not supported here.
int ncs_from_zczc(int zero_correlation_zone_config);

// The cell set of 64 preambles plus the root sequences the detector
// correlates against. Preambles enumerate roots in the outer loop and the
// N_CS-granular shifts v = 0..window_count-1 in the inner loop, truncated at
// 64, so preamble id = root_index * window_count + v.
struct PreambleSet {
  Family family = Family::ZC;
  int l_ra = 139;
  int n_cs = 23;
  int window_count = 6;  // floor(l_ra / n_cs)
  std::vector<ComplexSequence> roots;
  std::vector<ComplexSequence> preambles;  // exactly 64

  int root_of(int preamble_id) const { return preamble_id / window_count; }
  int shift_of(int preamble_id) const { return preamble_id % window_count; }
  int preamble_id(int root_index, int window) const {
    return root_index * window_count + window;
  }
};

// Root parameterization per family (u for ZC/mZC/aZC, lambda for mALL runs
// from 1 upward; covers are fixed at l=1, w=1, t=1 where applicable).
PreambleSet build_preamble_set(Family family, int l_ra, int zero_correlation_zone_config);

// Closed-form family capacity:
//   ZC        (L-1)   * floor(L/N_CS)
//   mZC, aZC  (L^2-1) * floor(L/N_CS)
//   mALL      L^3     * floor(L/N_CS)
std::int64_t preamble_capacity(Family family, int l_ra, int n_cs);

}  // namespace prachseq
