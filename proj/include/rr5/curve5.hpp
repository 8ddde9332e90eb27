#pragma once

// The Tate normal form E5(b): Y^2 + (1+b)XY + bY = X^3 + bX^2, its
// 5-division polynomial, the explicit u-parametrized X-coordinates of its
// points of order 5, the involution tau(b) and the 5-isogeny to E55(b), and
// numeric checks of the resulting solutions of X^5 + Y^5 = eps^5 (1 - X^5 Y^5).

#include <vector>

#include "rr5/exact/cyclo.hpp"
#include "rr5/exact/intpoly.hpp"
#include "rr5/hp/bigfloat.hpp"
#include "rr5/report.hpp"

namespace rr5::curve5 {

using exact::Q5;
using exact::QPoly;
using hp::BigComplex;
using hp::prec_t;

/// Polynomials in X whose coefficients are polynomials in b; index = power of X.
using BPoly = std::vector<QPoly>;

/// Long Weierstrass coefficients as polynomials in b.
struct LongForm {
  QPoly a1, a2, a3, a4, a6;
};

LongForm tate_form();  // E5(b)
LongForm e55_form();   // E55(b)

struct Invariants {
  QPoly b2, b4, b6, b8, c4, c6;
  /// Y^2 = 4X^3 - g2 X - g3 after completing the square.
  QPoly g2() const;
  QPoly g3() const;
  /// g2^3 - 27 g3^2.
  QPoly delta() const;
};

Invariants invariants(const LongForm& e);

/// psi_5 of E5(b) as a polynomial of degree 12 in X over Q[b].
BPoly division_poly_5();

/// psi_5 / (X (X + b)); throws IntegrityError when the division is not exact.
BPoly division_poly_5_cofactor();

/// The central identity psi_5(X(u), b(u)) = 0 in Q(sqrt5)(u), with
/// b(u) = (eps^5 u^5 + epsbar^5)/(u^5 + 1) and X(u) the explicit
/// (5 - sqrt5)/100 (A4 u^4 + ... + A0), u replaced by zeta^twist u.
/// perturb_a1 adds 1 to A1 (negative control).
bool torsion_x_identity(int twist = 0, bool perturb_a1 = false);

/// The 5x5 determinant of the system sum A_k zeta^(k i) u^k = B_i against
/// its closed form, the product with its sqrt5-conjugate, and vanishing on
/// b^2 + b - 1.
Report det_D_identity();

/// Exact identities around tau(b) = (-b + eps^5)/(eps^5 b + 1), phi(b) and the
/// 5-isogeny E5(b1) -> E55(b1) ~ E5(tau(b1)).
Report tau_and_isogeny_checks();

/// Discriminant, kernel points, the two forms of j5 and j55, and the
/// g2 g3 / Delta rewrite in z = b - 1/b.
Report weierstrass_identities();

/// Numeric group law on a long Weierstrass curve.
struct NumCurve {
  BigComplex a1, a2, a3, a4, a6;
};
struct Point {
  BigComplex x, y;
  bool infinity = false;
};

NumCurve numeric_curve(const LongForm& e, const BigComplex& b);
BigComplex on_curve_residual(const NumCurve& e, const Point& p);
Point negate(const NumCurve& e, const Point& p);
Point add(const NumCurve& e, const Point& p, const Point& q);
Point multiply(const NumCurve& e, long n, const Point& p);
/// A point with the given x (one of the two y).
Point lift_x(const NumCurve& e, const BigComplex& x);

/// Numeric roots of psi_5 at b: each is the X-coordinate of a point P with
/// 5P = O (checked as 4P = -P by the group law).
Report numeric_division_points(const BigComplex& b, prec_t prec);

struct C5Result {
  Report report;
  int j = 0;  // the zeta_5 power matching r(-1/w) to a root of p_d, 0 when none
};

/// For the principal argument w of d: X = r(w/5), Y = r(-1/w) solve the
/// quintic curve, p_d(X) = 0, p_d(zeta^j Y) = 0 for exactly one j in 1..4,
/// and Y^5 = tau(X^5).
C5Result verify_C5_solution(long d, const QPoly& p, prec_t prec);

/// r^5(-1/(5t)) = tau(r^5(t)), r(-1/(5t)) = (epsbar r(5t) + 1)/(r(5t) - epsbar),
/// r(-1/t) = T(r(t)), 1/r(t) - 1 - r(t) = eta(t/5)/eta(5t), and T(T(r)) = r.
Report verify_r_transformations(const std::vector<BigComplex>& taus, prec_t prec);

/// eps^5 = (-11 + 5 sqrt5)/2 and its conjugate.
Q5 eps5();
Q5 epsbar5();

}  // namespace rr5::curve5
