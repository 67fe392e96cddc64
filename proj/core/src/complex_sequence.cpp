#include "prachseq/complex_sequence.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace prachseq {

ComplexSequence cyclic_shift(const ComplexSequence& x, long shift) {
  if (x.empty()) throw std::invalid_argument("cyclic_shift: empty sequence");
  const long n = static_cast<long>(x.size());
  long s = shift % n;
  if (s < 0) s += n;
  ComplexSequence y(x.size());
  for (long i = 0; i < n; ++i) y[i] = x[(i + s) % n];
  return y;
}

bool is_unit_modulus(const ComplexSequence& x, double tol) {
  for (const Complex& v : x) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    if (std::abs(std::abs(v) - 1.0) > tol) return false;
  }
  return !x.empty();
}

void write_sequence_csv(std::ostream& os, const ComplexSequence& x) {
  os << "index,real,imag\n";
  char buf[96];
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i, x[i].real(), x[i].imag());
    os << buf;
  }
}

void write_sequence_csv(const std::string& path, const ComplexSequence& x) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  write_sequence_csv(f, x);
}

namespace {

void put_u32_le(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64_le(std::ostream& os, double d) {
  auto v = std::bit_cast<std::uint64_t>(d);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint32_t get_u32_le(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw std::runtime_error("binary sequence: truncated length field");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

double get_f64_le(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw std::runtime_error("binary sequence: truncated samples");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return std::bit_cast<double>(v);
}

}  // namespace

void write_sequence_binary(std::ostream& os, const ComplexSequence& x) {
  put_u32_le(os, static_cast<std::uint32_t>(x.size()));
  for (const Complex& v : x) {
    put_f64_le(os, v.real());
    put_f64_le(os, v.imag());
  }
}

void write_sequence_binary(const std::string& path, const ComplexSequence& x) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for write: " + path);
  write_sequence_binary(f, x);
}

ComplexSequence read_sequence_binary(std::istream& is) {
  const std::uint32_t n = get_u32_le(is);
  ComplexSequence x(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const double re = get_f64_le(is);
    const double im = get_f64_le(is);
    x[i] = Complex(re, im);
  }
  return x;
}

ComplexSequence read_sequence_binary(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for read: " + path);
  return read_sequence_binary(f);
}

}  // namespace prachseq
