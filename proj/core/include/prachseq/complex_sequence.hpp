// Core sample container shared by every sequence family plus cyclic-shift
// and import/export helpers.
#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace prachseq {

using Complex = std::complex<double>;
using ComplexSequence = std::vector<Complex>;

// x'[n] = x[(n + shift) mod L]. shift may be any integer; it is reduced mod L.
ComplexSequence cyclic_shift(const ComplexSequence& x, long shift);

// True when every sample has |x[n]| = 1 within tol. CAZAC families and their
// bipolar-covered products must satisfy this.
bool is_unit_modulus(const ComplexSequence& x, double tol = 1e-12);

// CSV columns: index,real,imag (with header row).
void write_sequence_csv(std::ostream& os, const ComplexSequence& x);
void write_sequence_csv(const std::string& path, const ComplexSequence& x);

// Binary record: uint32 little-endian sample count, then interleaved
// real/imag IEEE-754 doubles, little-endian.
void write_sequence_binary(std::ostream& os, const ComplexSequence& x);
void write_sequence_binary(const std::string& path, const ComplexSequence& x);
ComplexSequence read_sequence_binary(std::istream& is);
ComplexSequence read_sequence_binary(const std::string& path);

}  // namespace prachseq
