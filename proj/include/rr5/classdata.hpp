#pragma once

// Binary quadratic forms of discriminant -d, Heegner arguments and class polynomials.

#include <string>
#include <vector>

#include "rr5/exact/intpoly.hpp"
#include "rr5/hp/bigfloat.hpp"
#include "rr5/hp/roots.hpp"

namespace rr5::classdata {

using exact::QPoly;
using hp::BigComplex;
using hp::prec_t;

struct QuadForm {
  long a = 1, b = 0, c = 0;

  long discriminant() const { return b * b - 4 * a * c; }
  bool is_primitive() const;
  bool is_reduced() const;
  /// (-b + sqrt(disc)) / (2a) in the upper half plane.
  BigComplex root(prec_t prec) const;

  friend bool operator==(const QuadForm&, const QuadForm&) = default;
};

std::string to_string(const QuadForm& f);

struct ClassData {
  long d = 0;    // the discriminant is -d
  long d_K = 0;  // fundamental discriminant (negative)
  long f = 0;    // conductor, -d = d_K f^2
  long h = 0;    // class number
  std::vector<QuadForm> forms;
};

/// True when -d = 0 or 1 mod 4 and d > 0.
bool is_discriminant(long d);

/// Legendre symbol (n / p) for an odd prime p.
int legendre(long n, long p);

/// (-d / 5) = +1.
bool is_admissible(long d);

/// Largest f with -d / f^2 a fundamental discriminant.
long conductor(long d);

/// All primitive reduced forms of discriminant -d, sorted by (a, b).
/// Throws DomainError when -d is not a discriminant.
ClassData reduced_forms(long d);

struct VChoice {
  long v = 0;
  /// No solution was coprime to f; v solves the congruence alone.
  bool relaxed = false;
};

/// Smallest positive v with v^2 + d = 0 mod 100 and gcd(v, f) = 1 (relaxed
/// when impossible). Throws AdmissibilityError when the congruence has no solution.
VChoice choose_v(long d, long f);

struct HeegnerArg {
  QuadForm form;  // equivalent to a reduced form, with 5 not dividing a
  long b_adj = 0;

  /// w = (-b_adj + sqrt(-d)) / (2a).
  BigComplex w(prec_t prec) const;
};

/// One argument per class with b_adj = form.b mod 2a and b_adj = -v mod 2N.
/// N must be 5 or 25. Throws DomainError when N is unsupported.
std::vector<HeegnerArg> n_system(const ClassData& cd, long v, long N);

/// H_{-d}(x) = prod (x - j(tau_A)) over reduced forms, rounded to integers,
/// escalating precision per `policy`.
QPoly class_poly(const ClassData& cd, const hp::PrecisionPolicy& policy);

/// Default policy for a discriminant: initial bits from d and h.
hp::PrecisionPolicy default_policy(const ClassData& cd, prec_t max_bits = prec_t(1) << 20);

}  // namespace rr5::classdata
