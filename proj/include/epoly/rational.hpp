#ifndef EPOLY_RATIONAL_HPP
#define EPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace epoly {

// Exact arbitrary-precision rationals, always kept canonical.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "3", "-3", "3/4". Throws std::invalid_argument on malformed input.
Rational rational_from_string(std::string_view text);

// Canonical "num" or "num/den" form.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

}  // namespace epoly

#endif
