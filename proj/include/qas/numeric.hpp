#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace qas {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;

inline std::int64_t to_int64(const Int& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
  }
  return static_cast<std::int64_t>(v);
}

/// b^e for integer e of either sign; b must be nonzero when e < 0.
inline Rational rational_pow(const Rational& base, std::int64_t e) {
  if (e < 0) {
    if (base == 0) throw std::domain_error("zero base with negative exponent");
    return rational_pow(Rational(1) / base, -e);
  }
  Rational acc(1);
  Rational b = base;
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

inline std::string rational_str(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p", "-p" or "p/q" with arbitrary-precision parts.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { throw std::invalid_argument("not a rational: '" + text + "'"); };
  if (text.empty()) bad();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(text));
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den == 0) bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational(0);  // unreachable
}

inline IntVec to_intvec(const std::vector<std::int64_t>& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

}  // namespace qas
