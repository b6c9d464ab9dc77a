#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lospec {

// Arbitrary-precision rational, always canonical: lowest terms, positive
// denominator, zero stored as 0/1.  mpq_class maintains exactly this form.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// "p/q", or just "p" when q = 1.
std::string rational_text(const Rational& r);

// Accepts "p", "-p", "p/q"; canonicalizes. Throws std::invalid_argument on
// malformed input or zero denominator.
Rational parse_rational(const std::string& s);

Integer factorial(unsigned n);

// r = s^2 for rational s >= 0?  On success stores s in `root`.
bool rational_square_root(const Rational& r, Rational& root);

Rational pow_rational(const Rational& base, unsigned e);

// FNV-1a, used for content hashes of cached artifacts.
std::uint64_t fnv1a(const std::string& data);

}  // namespace lospec
