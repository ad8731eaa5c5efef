#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <random>
#include <stdexcept>
#include <string>

namespace hgt {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

/// Uniform draw from [0, n) with explicit arithmetic: the engine output is
/// pinned by the standard, so seeded runs are reproducible across toolchains.
inline uint64_t sample_below(Rng& rng, uint64_t n) { return n ? rng() % n : 0; }

/// Small rational, suitable for structure constants and bodies.
inline Rational sample_rational(Rng& rng, int span = 3, int max_den = 3) {
  int num = static_cast<int>(sample_below(rng, 2 * static_cast<uint64_t>(span) + 1)) - span;
  int den = static_cast<int>(sample_below(rng, static_cast<uint64_t>(max_den))) + 1;
  return Rational(num, den);
}

inline Rational sample_nonzero_rational(Rng& rng, int span = 3, int max_den = 3) {
  for (;;) {
    Rational r = sample_rational(rng, span, max_den);
    if (r != 0) return r;
  }
}

inline std::string rational_str(const Rational& r) { return r.str(); }

/// Parses "p", "-p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw error("bad rational literal: " + s);
  }
}

}  // namespace hgt
