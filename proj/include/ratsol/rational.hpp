#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ratsol {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "p/q", with optional leading sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

// Euclidean division with remainder in [0, |d|).
long floor_div(long a, long d);
long euclid_mod(long a, long d);

}  // namespace ratsol
