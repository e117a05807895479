#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace geostream {

using BigInt = mpz_class;

/// Exact rational coordinate. Every value is kept in canonical form
/// (reduced, positive denominator), so equality is structural.
///
/// Text form is a decimal integer ("-12") or "p/q" ("7/2"). Integers always
/// print without a denominator, which makes integer coordinates round-trip
/// bit-exactly.
class Coord {
 public:
  Coord() = default;

  template <std::integral T>
  Coord(T v) : value_(to_bigint(v)) {}  // NOLINT(google-explicit-constructor)

  Coord(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  Coord(const BigInt& num, const BigInt& den);

  /// Parses "n" or "p/q". Throws std::invalid_argument on malformed input or
  /// a zero denominator.
  static Coord parse(std::string_view text);

  std::string str() const;

  bool is_integer() const { return value_.get_den() == 1; }
  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  /// Largest integer <= value (rounds toward negative infinity).
  BigInt floor() const;

  int sign() const { return sgn(value_); }

  Coord& operator+=(const Coord& o) { value_ += o.value_; return *this; }
  Coord& operator-=(const Coord& o) { value_ -= o.value_; return *this; }
  Coord& operator*=(const Coord& o) { value_ *= o.value_; return *this; }
  Coord& operator/=(const Coord& o);

  friend Coord operator+(Coord a, const Coord& b) { return a += b; }
  friend Coord operator-(Coord a, const Coord& b) { return a -= b; }
  friend Coord operator*(Coord a, const Coord& b) { return a *= b; }
  friend Coord operator/(Coord a, const Coord& b) { return a /= b; }
  friend Coord operator-(const Coord& a) { return Coord{} - a; }

  friend bool operator==(const Coord& a, const Coord& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Coord& a, const Coord& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  template <std::integral T>
  static BigInt to_bigint(T v) {
    if constexpr (std::is_signed_v<T>) {
      return BigInt(static_cast<long>(v));
    } else {
      return BigInt(static_cast<unsigned long>(v));
    }
  }

  mpq_class value_;
};

Coord abs(const Coord& c);

/// Number of bits in |v| (0 for v == 0).
std::size_t bit_length(const BigInt& v);

}  // namespace geostream
