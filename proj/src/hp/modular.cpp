#include "rr5/hp/modular.hpp"

#include <cmath>

#include "rr5/errors.hpp"

namespace rr5::hp {

namespace {

void require_upper(const BigComplex& tau) {
  if (tau.im().sign() <= 0) throw DomainError("tau must lie in the upper half plane");
}

/// log2 |q| for q = exp(2 pi i tau), i.e. -2 pi Im(tau) / ln 2.
double log2_abs_q(const BigComplex& tau) {
  return -2.0 * M_PI * tau.im().to_double() / std::log(2.0);
}

/// sum over all integers k of (-1)^k q^((A k^2 + B k) / 2), with A > |B| and A = B mod 2.
BigComplex signed_theta(const BigComplex& q, long A, long B, prec_t wp, double lq) {
  BigComplex qA = pow(q, A);
  BigComplex total(1L, wp);
  for (int side = 0; side < 2; ++side) {
    long b = side == 0 ? B : -B;
    // e(k+1) - e(k) = A k + (A + b) / 2
    BigComplex step = pow(q, (A + b) / 2);
    BigComplex term(1L, wp);
    for (long k = 0;; ++k) {
      term *= step;
      step *= qA;
      long e = (A * (k + 1) * (k + 1) + b * (k + 1)) / 2;
      if (static_cast<double>(e) * lq < -static_cast<double>(wp) - 8) break;
      if (k & 1) total += term;
      else total -= term;
    }
  }
  return total;
}

}  // namespace

BigComplex quadratic_point(const Integer& p, const Integer& q, long d, const Integer& r,
                           prec_t prec) {
  if (d <= 0 || r == 0) throw DomainError("quadratic point needs d > 0 and r != 0");
  BigFloat rr(r, prec + 8);
  BigFloat re = BigFloat(p, prec + 8) / rr;
  BigFloat im = BigFloat(q, prec + 8) * sqrt(BigFloat(d, prec + 8)) / rr;
  return BigComplex(re, im).with_prec(prec);
}

prec_t series_guard_bits(const BigComplex& tau) {
  // |prod (1 - q^n)| can be as small as exp(-pi^2 / (6 t)) with t = 2 pi Im(tau).
  double t = 2.0 * M_PI * tau.im().to_double();
  return 64 + static_cast<prec_t>(std::ceil(M_PI * M_PI / (6.0 * t * std::log(2.0))));
}

BigComplex nome(const BigComplex& tau, long k, prec_t prec) {
  prec_t wp = prec + 32 + static_cast<prec_t>(std::max(0L, tau.re().exponent()));
  BigComplex t = tau.with_prec(wp);
  BigFloat s = pi(wp) * 2L / k;
  // 2 pi i tau / k = s (i re - im)
  return exp(BigComplex(-(t.im() * s), t.re() * s)).with_prec(prec);
}

BigComplex eta(const BigComplex& tau, prec_t prec) {
  require_upper(tau);
  prec_t wp = prec + series_guard_bits(tau);
  BigComplex q = nome(tau, 1, wp);
  BigComplex s = signed_theta(q, 3, -1, wp, log2_abs_q(tau));
  return (nome(tau, 24, wp) * s).with_prec(prec);
}

BigComplex eta_quotient(const BigComplex& tau, long m, prec_t prec) {
  require_upper(tau);
  BigComplex t = tau.with_prec(prec + 16);
  prec_t wp = prec + 16 + std::max(series_guard_bits(t / m), series_guard_bits(t));
  BigComplex tw = tau.with_prec(wp);
  return (eta(tw / m, wp) / eta(tw, wp)).with_prec(prec);
}

BigComplex rr_r(const BigComplex& tau, prec_t prec) {
  require_upper(tau);
  prec_t wp = prec + series_guard_bits(tau);
  double lq = log2_abs_q(tau);
  BigComplex q = nome(tau, 1, wp);
  BigComplex num = signed_theta(q, 5, -3, wp, lq);
  BigComplex den = signed_theta(q, 5, -1, wp, lq);
  return (nome(tau, 5, wp) * num / den).with_prec(prec);
}

BigComplex rr_r_product(const BigComplex& tau, prec_t prec) {
  require_upper(tau);
  prec_t wp = prec + series_guard_bits(tau);
  double lq = log2_abs_q(tau);
  BigComplex q = nome(tau, 1, wp);
  BigComplex num(1L, wp), den(1L, wp), qn(1L, wp);
  for (long n = 1; static_cast<double>(n) * lq >= -static_cast<double>(wp) - 8; ++n) {
    qn *= q;
    long r = n % 5;
    if (r == 1 || r == 4) num *= (BigComplex(1L, wp) - qn);
    else if (r == 2 || r == 3) den *= (BigComplex(1L, wp) - qn);
  }
  return (nome(tau, 5, wp) * num / den).with_prec(prec);
}

BigComplex weber_x3(const BigComplex& tau, prec_t prec) {
  return pow(eta_quotient(tau, 5, prec + 16), 6).with_prec(prec);
}

BigComplex j_weber(const BigComplex& tau, prec_t prec) {
  prec_t wp = prec + 32;
  BigComplex X = weber_x3(tau, wp);
  BigComplex t = X * X + X * 10L + 5L;
  return (t * t * t / X).with_prec(prec);
}

BigComplex j_icosahedral(const BigComplex& tau, prec_t prec) {
  prec_t wp = prec + 32;
  BigComplex r5 = pow(rr_r(tau, wp), 5);
  BigComplex r10 = r5 * r5;
  BigComplex n = r10 * r10 - r10 * r5 * 228L + r10 * 494L + r5 * 228L + 1L;
  BigComplex d = BigComplex(1L, wp) - r5 * 11L - r10;
  return (n * n * n / (r5 * pow(d, 5))).with_prec(prec);
}

BigComplex j_from_tau(const BigComplex& tau, prec_t prec) {
  require_upper(tau);
  BigComplex a = j_weber(tau, prec);
  BigComplex b = j_icosahedral(tau, prec);
  BigFloat scale = a.abs();
  if (scale < BigFloat(1L, prec)) scale = BigFloat(1L, prec);
  if (dist(a, b) > ldexp(scale, -static_cast<long>(prec) + 32))
    throw PrecisionError("j routes disagree at tau = " + tau.to_string(20));
  return a;
}

}  // namespace rr5::hp
