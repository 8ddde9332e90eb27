#pragma once

// Helpers for polynomials with rational coefficients viewed as integer polynomials.

#include <string_view>
#include <utility>
#include <vector>

#include "rr5/exact/poly.hpp"
#include "rr5/exact/rational.hpp"

namespace rr5::exact {

using QPoly = Poly<Rational>;
using ZPoly = Poly<Integer>;

/// Parses coefficients given lowest degree first as decimal or p/q strings.
QPoly qpoly_from_strings(const std::vector<std::string>& coeffs);

/// Convenience for literals: coefficients lowest degree first.
QPoly qpoly(std::initializer_list<long> coeffs);

/// Same, but coefficients listed highest degree first (as polynomials are usually written).
QPoly qpoly_hi(std::initializer_list<long> coeffs);

/// Parses text such as "x^{16} - 2x^3 + 3*x/2 - 7" in the variable `var`.
/// Braces around exponents and spaces are ignored; coefficients may be p/q.
/// Throws DomainError on malformed input.
QPoly parse_qpoly(std::string_view text, char var = 'x');

bool is_integral(const QPoly& p);

/// Throws DomainError when some coefficient is not an integer.
ZPoly to_zpoly(const QPoly& p);
QPoly to_qpoly(const ZPoly& p);

/// gcd of the coefficients (nonnegative); 0 for the zero polynomial.
Integer content(const ZPoly& p);

/// Positive rational c with p / c integral and primitive.
Rational content(const QPoly& p);

/// p scaled to a primitive integral polynomial with positive leading coefficient.
QPoly primitive_part(const QPoly& p);

bool is_squarefree(const QPoly& p);

/// Decimal strings, lowest degree first.
std::vector<std::string> coeff_strings(const QPoly& p);

/// Prime factorization of a nonzero integer by trial division up to `bound`;
/// a remaining cofactor above the bound is appended as-is with exponent 1
/// (flagged by `complete` = false when it is not a probable prime).
struct Factorization {
  int sign = 1;
  std::vector<std::pair<Integer, unsigned>> factors;
  bool complete = true;

  Integer value() const;
  std::string to_string() const;
};

Factorization factor_integer(const Integer& n, unsigned long bound);

}  // namespace rr5::exact
