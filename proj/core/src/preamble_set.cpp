#include "prachseq/preamble_set.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

#include "prachseq/alltop.hpp"
#include "prachseq/cover_sequences.hpp"
#include "prachseq/zadoff_chu.hpp"

namespace prachseq {

const char* family_name(Family f) {
  switch (f) {
    case Family::ZC: return "ZC";
    case Family::mZC: return "mZC";
    case Family::aZC: return "aZC";
    case Family::mALL: return "mALL";
  }
  throw std::invalid_argument("family_name: unknown family");
}

Family parse_family(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "zc") return Family::ZC;
  if (s == "mzc") return Family::mZC;
  if (s == "azc") return Family::aZC;
  if (s == "mall") return Family::mALL;
  throw std::invalid_argument("unknown sequence family: " + name);
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> fams = {Family::ZC, Family::mZC, Family::aZC, Family::mALL};
  return fams;
}

int ncs_from_zczc(int cfg) {
  // TS 38.211 Table 6.3.3.1-7, unrestricted set, short preamble.
  static constexpr std::array<int, 16> ncs = {0,  2,  4,  6,  8,  10, 12, 13,
                                              15, 17, 19, 23, 27, 34, 46, 69};
  if (cfg < 0 || cfg >= static_cast<int>(ncs.size()))
    throw std::invalid_argument("zeroCorrelationZoneConfig out of range [0, 15]");
  if (ncs[cfg] == 0)
    throw std::invalid_argument("zeroCorrelationZoneConfig 0 (N_CS = 0) is not supported");
  return ncs[cfg];
}

PreambleSet build_preamble_set(Family family, int l_ra, int cfg) {
  const int n_cs = ncs_from_zczc(cfg);
  if (n_cs > l_ra) throw std::invalid_argument("build_preamble_set: N_CS exceeds l_ra");
  const int windows = l_ra / n_cs;
  const int root_count = (kCellPreambleCount + windows - 1) / windows;
  if (root_count > l_ra - 1)
    throw std::invalid_argument("build_preamble_set: not enough roots for a 64-preamble set");

  PreambleSet set;
  set.family = family;
  set.l_ra = l_ra;
  set.n_cs = n_cs;
  set.window_count = windows;

  set.roots.reserve(root_count);
  for (int r = 1; r <= root_count; ++r) {
    switch (family) {
      case Family::ZC:
        set.roots.push_back(zc_root(r, l_ra));
        break;
      case Family::mZC:
        set.roots.push_back(generate_mzc(
            {.cover_shift = 1, .root = r, .shift_index = 0, .n_cs = n_cs, .l_ra = l_ra}));
        break;
      case Family::aZC:
        set.roots.push_back(generate_azc({.power = 1,
                                          .lambda = 1,
                                          .w = 1,
                                          .root = r,
                                          .shift_index = 0,
                                          .n_cs = n_cs,
                                          .l_ra = l_ra}));
        break;
      case Family::mALL:
        set.roots.push_back(generate_mall({.power = 1,
                                           .lambda = r,
                                           .w = 1,
                                           .cover_shift = 1,
                                           .shift_index = 0,
                                           .n_cs = n_cs,
                                           .l_ra = l_ra}));
        break;
    }
  }

  set.preambles.reserve(kCellPreambleCount);
  for (int id = 0; id < kCellPreambleCount; ++id) {
    const int r = id / windows;
    const int v = id % windows;
    set.preambles.push_back(cyclic_shift(set.roots[r], static_cast<long>(v) * n_cs));
  }
  return set;
}

std::int64_t preamble_capacity(Family family, int l_ra, int n_cs) {
  if (l_ra < 2) throw std::invalid_argument("preamble_capacity: l_ra must be >= 2");
  if (n_cs < 1 || n_cs > l_ra)
    throw std::invalid_argument("preamble_capacity: n_cs out of range [1, l_ra]");
  const std::int64_t L = l_ra;
  const std::int64_t windows = L / n_cs;
  switch (family) {
    case Family::ZC: return (L - 1) * windows;
    case Family::mZC:
    case Family::aZC: return (L * L - 1) * windows;
    case Family::mALL: return L * L * L * windows;
  }
  throw std::invalid_argument("preamble_capacity: unknown family");
}

}  // namespace prachseq
