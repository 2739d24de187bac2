#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lorentz/errors.hpp"

namespace lorentz {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rat& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(double d) { return d; }

inline BigInt parse_bigint(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw ParseError("empty integer literal");
  for (char c : digits) {
    if (c < '0' || c > '9') throw ParseError("bad integer literal '" + std::string(text) + "'");
  }
  // cpp_int rejects a leading '+'.
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text));
}

/// Accepts "p", "-p", or "p/q".
inline Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_bigint(text));
  const BigInt num = parse_bigint(text.substr(0, slash));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rat(num, den);
}

inline std::string to_string(const Rat& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

inline BigInt factorial(long n) {
  BigInt out = 1;
  for (long k = 2; k <= n; ++k) out *= k;
  return out;
}

/// Product of factorials of the entries, i.e. alpha!.
inline BigInt multi_factorial(const std::vector<int>& alpha) {
  BigInt out = 1;
  for (int a : alpha) out *= factorial(a);
  return out;
}

}  // namespace lorentz
