#pragma once

// Arbitrary-precision real and complex numbers on top of MPFR.
//
// Every value carries its own binary precision; the result of a binary
// operation has the smaller precision of its operands.  All rounding is
// to nearest.

#include <cstdio>

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "rr5/exact/rational.hpp"

namespace rr5::hp {

using exact::Integer;
using exact::Rational;

using prec_t = mpfr_prec_t;

class BigFloat {
 public:
  static constexpr prec_t kDefaultPrec = 128;

  BigFloat() : BigFloat(kDefaultPrec) {}
  explicit BigFloat(prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(long x, prec_t prec) : BigFloat(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
  BigFloat(int x, prec_t prec) : BigFloat(static_cast<long>(x), prec) {}
  BigFloat(double x, prec_t prec) : BigFloat(prec) { mpfr_set_d(v_, x, MPFR_RNDN); }
  BigFloat(const Integer& x, prec_t prec) : BigFloat(prec) {
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  BigFloat(const Rational& x, prec_t prec) : BigFloat(prec) {
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  /// Decimal text such as "-1.25e3".
  BigFloat(const std::string& text, prec_t prec);

  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  /// Copy rounded (or zero-extended) to the given precision.
  BigFloat with_prec(prec_t prec) const {
    BigFloat r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; very negative for zero.
  long exponent() const { return is_zero() ? -(1L << 40) : mpfr_get_exp(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Nearest integer.
  Integer round() const;
  /// Decimal rendering with the given number of significant digits.
  std::string to_string(int digits = 30) const;

  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

#define RR5_BIGFLOAT_BINOP(op, fn)                                        \
  friend BigFloat operator op(const BigFloat& a, const BigFloat& b) {     \
    BigFloat r(std::min(a.prec(), b.prec()));                             \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                      \
    return r;                                                             \
  }
  RR5_BIGFLOAT_BINOP(+, mpfr_add)
  RR5_BIGFLOAT_BINOP(-, mpfr_sub)
  RR5_BIGFLOAT_BINOP(*, mpfr_mul)
  RR5_BIGFLOAT_BINOP(/, mpfr_div)
#undef RR5_BIGFLOAT_BINOP

  friend BigFloat operator+(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, long b) {
    BigFloat r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(long b, const BigFloat& a) { return a * b; }
  friend BigFloat operator+(long b, const BigFloat& a) { return a + b; }
  friend BigFloat operator-(long b, const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_si_sub(r.v_, b, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a) {
    BigFloat r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

BigFloat pi(prec_t prec);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat abs(const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
/// x * 2^e.
BigFloat ldexp(const BigFloat& x, long e);
/// 2^e at the given precision.
BigFloat pow2(long e, prec_t prec);

class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(prec_t prec) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
    if (re_.prec() != im_.prec()) {
      prec_t p = std::min(re_.prec(), im_.prec());
      re_ = re_.with_prec(p);
      im_ = im_.with_prec(p);
    }
  }
  BigComplex(const BigFloat& re) : BigComplex(re, BigFloat(re.prec())) {}  // NOLINT
  BigComplex(long re, prec_t prec) : re_(re, prec), im_(prec) {}
  BigComplex(int re, prec_t prec) : re_(re, prec), im_(prec) {}
  BigComplex(double re, double im, prec_t prec) : re_(re, prec), im_(im, prec) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  prec_t prec() const { return re_.prec(); }
  BigComplex with_prec(prec_t p) const { return {re_.with_prec(p), im_.with_prec(p)}; }

  static BigComplex i(prec_t prec) { return {BigFloat(prec), BigFloat(1L, prec)}; }
  /// exp(2 pi i k / n).
  static BigComplex root_of_unity(long k, long n, prec_t prec);

  BigComplex conj() const { return {re_, -im_}; }
  /// |z|^2.
  BigFloat norm() const { return re_ * re_ + im_ * im_; }
  BigFloat abs() const { return hypot(re_, im_); }
  BigFloat arg() const { return atan2(im_, re_); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  std::string to_string(int digits = 30) const;

  BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
  BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }
  BigComplex& operator/=(const BigComplex& o) { return *this = *this / o; }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend BigComplex operator-(const BigComplex& a) { return {-a.re_, -a.im_}; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) {
    return {a.re_ * s, a.im_ * s};
  }
  friend BigComplex operator*(const BigComplex& a, long s) { return {a.re_ * s, a.im_ * s}; }
  friend BigComplex operator*(long s, const BigComplex& a) { return a * s; }
  friend BigComplex operator+(const BigComplex& a, long s) { return {a.re_ + s, a.im_}; }
  friend BigComplex operator-(const BigComplex& a, long s) { return {a.re_ - s, a.im_}; }
  friend BigComplex operator/(const BigComplex& a, long s) { return {a.re_ / s, a.im_ / s}; }
  friend BigComplex operator/(const BigComplex& a, const BigFloat& s) {
    return {a.re_ / s, a.im_ / s};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat n = b.norm();
    return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
  }

 private:
  BigFloat re_, im_;
};

BigComplex exp(const BigComplex& z);
/// Principal logarithm, arg in (-pi, pi].
BigComplex log(const BigComplex& z);
/// Principal square root.
BigComplex sqrt(const BigComplex& z);
/// exp(log(z) / n), the principal n-th root.
BigComplex root(const BigComplex& z, long n);
/// z^n for any integer n (repeated squaring).
BigComplex pow(const BigComplex& z, long n);
/// |a - b|.
BigFloat dist(const BigComplex& a, const BigComplex& b);

}  // namespace rr5::hp
