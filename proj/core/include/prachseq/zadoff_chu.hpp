#pragma once

#include "prachseq/complex_sequence.hpp"

namespace prachseq {

// Zadoff-Chu root sequence with an N_CS-granular cyclic shift:
//   x_u[n]      = exp(-j*pi*u*n*(n+1) / L)
//   x_u^v[n]    = x_u[(n + v*n_cs) mod L]
// The physical root u is used directly (no logical-index table).
struct ZcParams {
  int root = 1;       // u, 1 <= u <= l_ra-1
  int shift_index = 0;  // v, 0 <= v < floor(l_ra/n_cs)
  int n_cs = 23;
  int l_ra = 139;
};

ComplexSequence generate_zc(const ZcParams& params);

// Unshifted root, x_u[n].
ComplexSequence zc_root(int root, int l_ra);

}  // namespace prachseq
