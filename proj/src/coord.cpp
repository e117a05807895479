#include "geostream/coord.hpp"

#include <stdexcept>

namespace geostream {

namespace {

bool is_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_text(s)) {
    throw std::invalid_argument("malformed coordinate: '" + std::string(s) + "'");
  }
  if (s[0] == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

Coord::Coord(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("coordinate with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Coord Coord::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Coord(parse_integer(text));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("coordinate with zero denominator");
  return Coord(parse_integer(text.substr(0, slash)), den);
}

std::string Coord::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

BigInt Coord::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Coord& Coord::operator/=(const Coord& o) {
  if (o.value_ == 0) throw std::domain_error("coordinate division by zero");
  value_ /= o.value_;
  return *this;
}

Coord abs(const Coord& c) { return c.sign() < 0 ? -c : c; }

std::size_t bit_length(const BigInt& v) {
  if (v == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace geostream
