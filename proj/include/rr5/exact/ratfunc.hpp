#pragma once

// Rational functions over an exact field, kept in lowest terms with a monic denominator.

#include <string>
#include <utility>

#include "rr5/errors.hpp"
#include "rr5/exact/poly.hpp"

namespace rr5::exact {

template <class K>
class RatFunc {
 public:
  using P = Poly<K>;

  RatFunc() : num_(), den_(K(1)) {}
  RatFunc(P num) : num_(std::move(num)), den_(K(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc x() { return RatFunc(P::x()); }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// max(deg num, deg den).
  int height() const { return std::max(num_.degree(), den_.degree()); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RatFunc operator-(const RatFunc& a) { return {-a.num_, a.den_}; }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("rational function division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  /// Value at a point; throws DomainError at a pole.
  K eval(const K& t) const {
    K d = den_.eval(t);
    if (detail::zero_coeff(d)) throw DomainError("rational function evaluated at a pole");
    return num_.eval(t) / d;
  }

  /// this(g(x)).
  RatFunc compose(const RatFunc& g) const {
    const auto h = static_cast<std::size_t>(std::max(height(), 0));
    auto lift = [](const K& c) { return P(c); };
    P n = homogeneous_eval(num_.coeffs(), g.num_, g.den_, h, lift);
    P d = homogeneous_eval(den_.coeffs(), g.num_, g.den_, h, lift);
    return {std::move(n), std::move(d)};
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = P(K(1));
      return;
    }
    P g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = *exact_quotient(num_, g);
      den_ = *exact_quotient(den_, g);
    }
    K lc = den_.leading();
    if (!(lc == K(1))) {
      K inv = K(1) / lc;
      num_ *= inv;
      den_ *= inv;
    }
  }

  P num_;
  P den_;
};

template <class K>
std::string to_string(const RatFunc<K>& f, const std::string& var = "x") {
  if (f.den().degree() == 0) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ") / (" + to_string(f.den(), var) + ")";
}

}  // namespace rr5::exact
