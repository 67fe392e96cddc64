// Combination preambles: a bipolar m-sequence or powered Alltop sequence used
// as an element-wise cover on top of a base sequence.
#pragma once

#include "prachseq/complex_sequence.hpp"

namespace prachseq {

// m-sequence cover times shifted Zadoff-Chu:
//   z[n] = c_l[n] * x_u[(n + v*n_cs) mod L]
// c_l is the length-139 extended bipolar cover, shift l applied mod 127 on
// the native stream.
struct MzcParams {
  int cover_shift = 0;  // l
  int root = 1;         // u, 1 <= u <= l_ra-1
  int shift_index = 0;  // v
  int n_cs = 23;
  int l_ra = 139;
};
ComplexSequence generate_mzc(const MzcParams& params);

// Powered Alltop cover times shifted Zadoff-Chu:
//   z[n] = (a_{lambda,w}[n])^l * x_u[(n + v*n_cs) mod L]
// power = 0 reproduces the plain ZC sequence exactly.
struct AzcParams {
  int power = 1;  // l
  int lambda = 0;
  int w = 0;
  int root = 1;         // u
  int shift_index = 0;  // v
  int n_cs = 23;
  int l_ra = 139;
};
ComplexSequence generate_azc(const AzcParams& params);

// Powered Alltop covered by a shifted m-sequence, then cyclically shifted by
// v*n_cs as a whole:
//   z[n] = (a_{lambda,w}[(n+C_v) mod L])^l * c[(n + t + C_v) mod L]
// The cover shift t acts mod 139 on the extended cover so that the
// (w, t) -> (w+d, t+d) shift ambiguity of this family is exact.
struct MallParams {
  int power = 1;  // l
  int lambda = 0;
  int w = 0;
  int cover_shift = 0;  // t
  int shift_index = 0;  // v
  int n_cs = 23;
  int l_ra = 139;
};
ComplexSequence generate_mall(const MallParams& params);

}  // namespace prachseq
