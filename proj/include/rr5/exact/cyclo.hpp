#pragma once

// Exact arithmetic in the cyclotomic fields Q(zeta_5) and Q(zeta_20).
//
// Elements are coordinate vectors on the power basis 1, z, ..., z^(phi(N)-1)
// where z = exp(2 pi i / N).  Q(sqrt 5) sits inside Q(zeta_5) via the Gauss
// sum z - z^2 - z^3 + z^4 = sqrt 5, and Q(zeta_5) inside Q(zeta_20) via
// zeta_5 = zeta_20^4.

#include <array>
#include <numeric>
#include <sstream>
#include <string>

#include "rr5/errors.hpp"
#include "rr5/exact/poly.hpp"
#include "rr5/exact/rational.hpp"

namespace rr5::exact {

template <int N>
class Cyclo {
  static_assert(N == 5 || N == 20, "only Q(zeta_5) and Q(zeta_20) are supported");

 public:
  static constexpr int kDegree = N == 5 ? 4 : 8;
  using Coords = std::array<Rational, kDegree>;

  Cyclo() = default;
  Cyclo(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
  explicit Cyclo(const Coords& c) : c_(c) {}

  /// Low coefficients of the cyclotomic polynomial; z^kDegree = -sum phi[i] z^i.
  static const std::array<long, kDegree>& phi_low() {
    static const std::array<long, kDegree> phi = [] {
      std::array<long, kDegree> p{};
      if constexpr (N == 5) {
        p = {1, 1, 1, 1};
      } else {
        p = {1, 0, -1, 0, 1, 0, -1, 0};  // x^8 - x^6 + x^4 - x^2 + 1
      }
      return p;
    }();
    return phi;
  }

  static Poly<Rational> minimal_polynomial() {
    std::vector<Rational> v(kDegree + 1);
    for (int i = 0; i < kDegree; ++i) v[i] = phi_low()[i];
    v[kDegree] = 1;
    return Poly<Rational>(std::move(v));
  }

  /// z^k for any integer k.
  static Cyclo zeta(long k = 1) {
    long e = ((k % N) + N) % N;
    std::vector<Rational> v(static_cast<std::size_t>(e + 1));
    v[static_cast<std::size_t>(e)] = 1;
    return reduce(v);
  }

  static Cyclo sqrt5() {
    if constexpr (N == 5) {
      return zeta(1) - zeta(2) - zeta(3) + zeta(4);
    } else {
      return zeta(4) - zeta(8) - zeta(12) + zeta(16);
    }
  }

  /// i = zeta_20^5; only in Q(zeta_20).
  static Cyclo imag_unit() {
    static_assert(N == 20, "i is not in Q(zeta_5)");
    return zeta(5);
  }

  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Coords& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (sgn(x) != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (int i = 1; i < kDegree; ++i)
      if (sgn(c_[i]) != 0) return false;
    return true;
  }
  const Rational& rational_value() const {
    if (!is_rational()) throw DomainError("cyclotomic element is not rational");
    return c_[0];
  }

  Cyclo& operator+=(const Cyclo& o) {
    for (int i = 0; i < kDegree; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Cyclo& operator-=(const Cyclo& o) {
    for (int i = 0; i < kDegree; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo& operator/=(const Cyclo& o) { return *this = *this * o.inverse(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator-(Cyclo a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    if (b.is_rational()) return a.scaled(b.c_[0]);
    if (a.is_rational()) return b.scaled(a.c_[0]);
    std::vector<Rational> v(2 * kDegree - 1);
    for (int i = 0; i < kDegree; ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (int j = 0; j < kDegree; ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return reduce(v);
  }
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
  friend bool operator==(const Cyclo& a, const Cyclo& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  /// Lexicographic order on coordinates; only for canonical sorting.
  friend bool operator<(const Cyclo& a, const Cyclo& b) {
    for (int i = 0; i < kDegree; ++i) {
      if (a.c_[i] < b.c_[i]) return true;
      if (b.c_[i] < a.c_[i]) return false;
    }
    return false;
  }

  Cyclo scaled(const Rational& s) const {
    Cyclo r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  Cyclo inverse() const {
    if (is_zero()) throw DomainError("division by zero in cyclotomic field");
    if (is_rational()) return Cyclo(Rational(1 / c_[0]));
    std::vector<Rational> v(c_.begin(), c_.end());
    auto [g, s, t] = xgcd(Poly<Rational>(std::move(v)), minimal_polynomial());
    (void)t;
    if (g.degree() != 0) throw DomainError("non-invertible cyclotomic element");
    return reduce(s.coeffs());
  }

  /// Galois automorphism z -> z^k, gcd(k, N) = 1.
  Cyclo galois(long k) const {
    if (std::gcd(((k % N) + N) % N, static_cast<long>(N)) != 1)
      throw DomainError("galois exponent not coprime to conductor");
    Cyclo r;
    for (int i = 0; i < kDegree; ++i)
      if (sgn(c_[i]) != 0) r += zeta(k * i).scaled(c_[i]);
    return r;
  }

  Cyclo conj() const { return galois(-1); }

  static Cyclo reduce(std::vector<Rational> v) {
    const auto& phi = phi_low();
    for (int i = static_cast<int>(v.size()) - 1; i >= kDegree; --i) {
      if (sgn(v[i]) == 0) continue;
      Rational t = v[i];
      v[i] = 0;
      for (int j = 0; j < kDegree; ++j)
        if (phi[j] != 0) v[i - kDegree + j] -= t * phi[j];
    }
    Cyclo r;
    for (int i = 0; i < kDegree && i < static_cast<int>(v.size()); ++i) r.c_[i] = v[i];
    return r;
  }

 private:
  Coords c_{};
};

template <int N>
bool is_zero(const Cyclo<N>& x) {
  return x.is_zero();
}

template <int N>
std::string to_string(const Cyclo<N>& x) {
  if (x.is_rational()) return x[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < Cyclo<N>::kDegree; ++i) {
    const Rational& c = x[i];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i > 0) {
      if (a != 1) os << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

using Q5 = Cyclo<5>;
using Q20 = Cyclo<20>;

/// Image of Q(zeta_5) in Q(zeta_20).
inline Q20 embed(const Q5& x) {
  Q20 r;
  for (int i = 0; i < Q5::kDegree; ++i)
    if (sgn(x[i]) != 0) r += Q20::zeta(4 * i).scaled(x[i]);
  return r;
}

/// Coefficients of p mapped into Q(zeta_N).
template <int N>
Poly<Cyclo<N>> lift(const Poly<Rational>& p) {
  return p.map([](const Rational& c) { return Cyclo<N>(c); });
}

/// Back to Q[x] when every coefficient is rational; throws DomainError otherwise.
template <int N>
Poly<Rational> to_rational_poly(const Poly<Cyclo<N>>& p) {
  return p.map([](const Cyclo<N>& c) { return c.rational_value(); });
}

}  // namespace rr5::exact
