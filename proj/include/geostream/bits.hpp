#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "geostream/coord.hpp"
#include "geostream/geometry.hpp"

namespace geostream {

// Canonical self-delimiting bit encoding used to measure algorithm state.
//
//   gamma(v)    Elias gamma code of v + 1: 2*floor(log2(v+1)) + 1 bits
//   bigint(v)   sign bit, gamma(bit_length(|v|)), then the magnitude bits
//               below the leading one
//   coord(c)    integer flag, bigint(numerator), then gamma-prefixed
//               bigint(denominator) only when the flag is clear
//
// Widths are a function of the values only, never of machine word sizes.

class BitWriter {
 public:
  void put_bit(bool b);
  /// Writes the low `width` bits of v, most significant first.
  void put_bits(std::uint64_t v, unsigned width);
  void put_gamma(std::uint64_t v);
  void put_bigint(const BigInt& v);
  void put_coord(const Coord& c);
  void put_interval(const Interval& iv);

  std::size_t size() const { return size_; }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

/// Decoder for BitWriter output. Reads past the end throw std::out_of_range.
class BitReader {
 public:
  BitReader(const std::vector<std::uint8_t>& bytes, std::size_t size)
      : bytes_(bytes), size_(size) {}

  bool get_bit();
  std::uint64_t get_bits(unsigned width);
  std::uint64_t get_gamma();
  BigInt get_bigint();
  Coord get_coord();
  Interval get_interval();

  std::size_t position() const { return pos_; }
  bool at_end() const { return pos_ == size_; }

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::size_t size_;
  std::size_t pos_ = 0;
};

/// Bit length of gamma(v).
std::size_t gamma_bits(std::uint64_t v);

/// ceil(log2(v + 1)): bits needed to store any value in [0, v].
unsigned width_for(std::uint64_t v);

}  // namespace geostream
