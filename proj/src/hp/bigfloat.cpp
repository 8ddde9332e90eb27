#include "rr5/hp/bigfloat.hpp"

#include <cstdlib>
#include <memory>

#include "rr5/errors.hpp"

namespace rr5::hp {

BigFloat::BigFloat(const std::string& text, prec_t prec) : BigFloat(prec) {
  if (mpfr_set_str(v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("malformed number: " + text);
}

Integer BigFloat::round() const {
  if (!is_finite()) throw PrecisionError("rounding a non-finite value");
  Integer r;
  mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  if (is_zero()) return "0";
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {
template <class F>
BigFloat unary(const BigFloat& x, F f) {
  BigFloat r(x.prec());
  f(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
}  // namespace

BigFloat pi(prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
BigFloat sqrt(const BigFloat& x) { return unary(x, mpfr_sqrt); }
BigFloat exp(const BigFloat& x) { return unary(x, mpfr_exp); }
BigFloat log(const BigFloat& x) { return unary(x, mpfr_log); }
BigFloat sin(const BigFloat& x) { return unary(x, mpfr_sin); }
BigFloat cos(const BigFloat& x) { return unary(x, mpfr_cos); }
BigFloat abs(const BigFloat& x) { return unary(x, mpfr_abs); }

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::min(x.prec(), y.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::min(x.prec(), y.prec()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.prec());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat pow2(long e, prec_t prec) { return ldexp(BigFloat(1L, prec), e); }

BigComplex BigComplex::root_of_unity(long k, long n, prec_t prec) {
  k %= n;
  if (k < 0) k += n;
  BigFloat t = pi(prec + 16) * (2 * k) / n;
  return {cos(t).with_prec(prec), sin(t).with_prec(prec)};
}

std::string BigComplex::to_string(int digits) const {
  std::string r = re_.to_string(digits), i = hp::abs(im_).to_string(digits);
  return r + (im_.sign() < 0 ? " - " : " + ") + i + "*i";
}

BigComplex exp(const BigComplex& z) {
  BigFloat m = exp(z.re());
  return {m * cos(z.im()), m * sin(z.im())};
}

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw DomainError("log of zero");
  return {log(z.abs()), z.arg()};
}

BigComplex sqrt(const BigComplex& z) {
  if (z.is_zero()) return z;
  // sqrt((|z| + |re|) / 2) on the dominant component avoids cancellation.
  BigFloat m = z.abs();
  BigFloat t = sqrt((m + abs(z.re())) / 2L);
  if (z.re().sign() >= 0) return {t, z.im() / (t * 2L)};
  BigFloat u = z.im().sign() < 0 ? -t : t;
  return {abs(z.im()) / (t * 2L), u};
}

BigComplex root(const BigComplex& z, long n) {
  if (n <= 0) throw DomainError("root index must be positive");
  if (z.is_zero()) return z;
  if (n == 1) return z;
  if (n == 2) return sqrt(z);
  BigComplex w = log(z);
  return exp(w / n);
}

BigComplex pow(const BigComplex& z, long n) {
  if (n < 0) return BigComplex(1L, z.prec()) / pow(z, -n);
  BigComplex r(1L, z.prec()), b = z;
  while (n) {
    if (n & 1) r *= b;
    n >>= 1;
    if (n) b *= b;
  }
  return r;
}

BigFloat dist(const BigComplex& a, const BigComplex& b) { return (a - b).abs(); }

}  // namespace rr5::hp
