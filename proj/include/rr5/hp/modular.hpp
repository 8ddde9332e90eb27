#pragma once

// Dedekind eta, the Rogers-Ramanujan continued fraction and j on the upper half plane.
//
// All q-powers use the principal branch q^(1/k) = exp(2 pi i tau / k).  The
// argument tau should carry at least `prec` bits; results are rounded to `prec`.

#include "rr5/hp/bigfloat.hpp"

namespace rr5::hp {

/// (p + q sqrt(-d)) / r.
BigComplex quadratic_point(const Integer& p, const Integer& q, long d, const Integer& r,
                           prec_t prec);

/// exp(2 pi i tau / k).
BigComplex nome(const BigComplex& tau, long k, prec_t prec);

/// eta(tau) = q^(1/24) prod (1 - q^n), summed as Euler's pentagonal series.
BigComplex eta(const BigComplex& tau, prec_t prec);

/// eta(tau / m) / eta(tau).
BigComplex eta_quotient(const BigComplex& tau, long m, prec_t prec);

/// r(tau) = q^(1/5) prod (1 - q^n)^(n/5), evaluated through the two
/// triple-product series sum (-1)^k q^(k(5k-3)/2) / sum (-1)^k q^(k(5k-1)/2).
BigComplex rr_r(const BigComplex& tau, prec_t prec);

/// r(tau) by the truncated product itself; slower, kept as an independent route.
BigComplex rr_r_product(const BigComplex& tau, prec_t prec);

/// (eta(tau/5) / eta(tau))^6.
BigComplex weber_x3(const BigComplex& tau, prec_t prec);

/// j(tau) = (X^2 + 10 X + 5)^3 / X with X = weber_x3(tau).
BigComplex j_weber(const BigComplex& tau, prec_t prec);

/// j(tau) from r = r(tau): (r^20 - 228 r^15 + 494 r^10 + 228 r^5 + 1)^3 / (r^5 (1 - 11 r^5 - r^10)^5).
BigComplex j_icosahedral(const BigComplex& tau, prec_t prec);

/// j(tau) by the eta route, cross-checked against the r route to a relative
/// 2^(-prec+32); disagreement throws PrecisionError.
BigComplex j_from_tau(const BigComplex& tau, prec_t prec);

/// Extra working bits used for evaluating q-series at tau.
prec_t series_guard_bits(const BigComplex& tau);

}  // namespace rr5::hp
