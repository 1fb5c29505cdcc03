#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace polyguard {

namespace bmp = boost::multiprecision;

// Exact arbitrary-precision rational. GMP keeps values canonical (lowest
// terms, positive denominator) through arithmetic; construction paths below
// canonicalize explicitly where GMP does not.
using Rational = bmp::number<bmp::gmp_rational, bmp::et_off>;
using BigInt = bmp::number<bmp::gmp_int, bmp::et_off>;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline Rational rat_from(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  mpq_canonicalize(r.backend().data());
  return r;
}

// Parses "p/q" or "p". Whitespace is not accepted.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("bad rational literal: " + s);
  }
  auto slash = s.find('/');
  if (slash != std::string::npos && s.substr(slash + 1).empty())
    throw std::invalid_argument("bad rational literal: " + s);
  Rational r(s);
  if (denominator(r) == 0) throw std::invalid_argument("zero denominator: " + s);
  mpq_canonicalize(r.backend().data());
  return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline int sign(const Rational& q) { return q.sign(); }

inline Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// floor(q) as a BigInt (round toward -inf).
inline BigInt rat_floor(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt quo, rem;
  divide_qr(n, d, quo, rem);
  if (rem != 0 && n < 0) --quo;
  return quo;
}

inline BigInt rat_ceil(const Rational& q) { return -rat_floor(-q); }

inline long long floor_ll(const Rational& q) { return rat_floor(q).convert_to<long long>(); }

inline std::size_t hash_rational(const Rational& q) { return std::hash<Rational>{}(q); }

inline void hash_combine(std::size_t& seed, std::size_t h) {
  seed ^= h + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
}

}  // namespace polyguard
