#pragma once
#include "nullplane/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace nullplane {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "-5", "1/10", "-7/3".  Whitespace is not accepted.
inline Rational rational_from_string(const std::string& s) {
  auto bad = [&] { return EngineError("bad rational literal: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw bad();
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

inline std::string rational_str(const Rational& r) {
  return r.str();
}

inline double rational_double(const Rational& r) {
  return r.convert_to<double>();
}

inline Rational factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return Rational(f);
}

} // namespace nullplane
