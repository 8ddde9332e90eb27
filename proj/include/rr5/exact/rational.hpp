#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rr5::exact {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }
inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "123", "-7/12". Throws rr5::DomainError on malformed input.
Rational parse_rational(std::string_view text);

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Exact x^n for n >= 0.
Integer ipow(const Integer& base, unsigned long n);
Rational ipow(const Rational& base, unsigned long n);

}  // namespace rr5::exact
