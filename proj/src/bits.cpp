#include "geostream/bits.hpp"

#include <bit>
#include <stdexcept>

namespace geostream {

void BitWriter::put_bit(bool b) {
  if (size_ % 8 == 0) bytes_.push_back(0);
  if (b) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ % 8));
  ++size_;
}

void BitWriter::put_bits(std::uint64_t v, unsigned width) {
  for (unsigned i = width; i-- > 0;) put_bit((v >> i) & 1u);
}

void BitWriter::put_gamma(std::uint64_t v) {
  if (v == UINT64_MAX) throw std::overflow_error("gamma code argument too large");
  const std::uint64_t x = v + 1;
  const unsigned n = static_cast<unsigned>(std::bit_width(x));
  for (unsigned i = 1; i < n; ++i) put_bit(false);
  put_bits(x, n);
}

void BitWriter::put_bigint(const BigInt& v) {
  put_bit(v < 0);
  const BigInt mag = abs(v);
  const std::size_t len = bit_length(mag);
  put_gamma(len);
  // The leading one is implied by the length.
  for (std::size_t i = len == 0 ? 0 : len - 1; i-- > 0;) put_bit(mpz_tstbit(mag.get_mpz_t(), i) != 0);
}

void BitWriter::put_coord(const Coord& c) {
  put_bit(c.is_integer());
  put_bigint(c.numerator());
  if (!c.is_integer()) put_bigint(c.denominator());
}

void BitWriter::put_interval(const Interval& iv) {
  put_coord(iv.lo);
  put_coord(iv.hi);
}

bool BitReader::get_bit() {
  if (pos_ >= size_) throw std::out_of_range("bit stream exhausted");
  const bool b = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
  ++pos_;
  return b;
}

std::uint64_t BitReader::get_bits(unsigned width) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | (get_bit() ? 1u : 0u);
  return v;
}

std::uint64_t BitReader::get_gamma() {
  unsigned zeros = 0;
  while (!get_bit()) {
    if (++zeros >= 64) throw std::runtime_error("malformed gamma code");
  }
  std::uint64_t x = 1;
  for (unsigned i = 0; i < zeros; ++i) x = (x << 1) | (get_bit() ? 1u : 0u);
  return x - 1;
}

BigInt BitReader::get_bigint() {
  const bool negative = get_bit();
  const std::uint64_t len = get_gamma();
  BigInt mag = 0;
  if (len > 0) {
    mag = 1;
    for (std::uint64_t i = 1; i < len; ++i) {
      mag <<= 1;
      if (get_bit()) mag += 1;
    }
  }
  return negative ? BigInt(-mag) : mag;
}

Coord BitReader::get_coord() {
  const bool integer = get_bit();
  BigInt num = get_bigint();
  if (integer) return Coord(num);
  return Coord(num, get_bigint());
}

Interval BitReader::get_interval() {
  Coord lo = get_coord();
  Coord hi = get_coord();
  return Interval(std::move(lo), std::move(hi));
}

std::size_t gamma_bits(std::uint64_t v) {
  return 2 * (static_cast<std::size_t>(std::bit_width(v + 1)) - 1) + 1;
}

unsigned width_for(std::uint64_t v) { return static_cast<unsigned>(std::bit_width(v)); }

}  // namespace geostream
