#pragma once

#include "prachseq/complex_sequence.hpp"

namespace prachseq {

// Cubic-phase (Alltop) sequence over a prime length:
//   a_{lambda,w}[n] = exp(-j*2*pi*((n+w)^3 + lambda*n) / L),  0 <= n < L.
// The optional power p yields (a_{lambda,w}[n])^p, the cover form used by the
// combination families; p = 0 degenerates to the all-ones sequence.
struct AlltopParams {
  int lambda = 0;  // [0, l_ra-1]
  int w = 0;       // [0, l_ra-1]
  int power = 1;   // l in [0, l_ra-1]
  int l_ra = 139;  // prime
};

ComplexSequence generate_alltop(const AlltopParams& params);

}  // namespace prachseq
