#pragma once

// Dense univariate polynomials over an exact coefficient ring.
//
// Coefficients are stored lowest degree first and trimmed so the leading
// coefficient is nonzero; the zero polynomial has no coefficients and
// degree -1.  The coefficient type R must provide R(long), +, -, *, ==
// and a free is_zero(const R&) found by ADL or declared in rr5::exact.
// Division-based routines additionally need R to be a field (operator/).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rr5/errors.hpp"
#include "rr5/exact/rational.hpp"

namespace rr5::exact {

namespace detail {
template <class R>
bool zero_coeff(const R& c) {
  return is_zero(c);
}
}  // namespace detail

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  explicit Poly(long c) : Poly(R(c)) {}
  explicit Poly(R c) {
    c_.push_back(std::move(c));
    trim();
  }
  Poly(std::initializer_list<R> cs) : c_(cs) { trim(); }
  explicit Poly(std::vector<R> cs) : c_(std::move(cs)) { trim(); }

  static Poly x() { return Poly{R(0), R(1)}; }
  static Poly monomial(R c, std::size_t k) {
    std::vector<R> v(k + 1, R(0));
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of x^i; zero beyond the degree.
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& operator[](std::size_t i) const { return c_[i]; }
  const R& leading() const { return c_.back(); }
  const std::vector<R>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const R& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& c : a.c_) c = -c;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::zero_coeff(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const R& s) { return a *= s; }
  friend Poly operator*(const R& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Multiplication by x^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> v(k, R(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }

  /// p(x^k).
  Poly inflate(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<R> v((c_.size() - 1) * k + 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
    return Poly(std::move(v));
  }

  /// x^n p(1/x) with n = deg p.
  Poly reversed() const {
    std::vector<R> v(c_.rbegin(), c_.rend());
    return Poly(std::move(v));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> v(c_.size() - 1, R(0));
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = R(static_cast<long>(i)) * c_[i];
    return Poly(std::move(v));
  }

  R eval(const R& x) const {
    R acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation in another ring V; conv maps a coefficient into V.
  template <class V, class Conv>
  V eval_in(const V& x, Conv conv, V zero) const {
    V acc = std::move(zero);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + conv(*it);
    return acc;
  }

  /// Applies f to every coefficient.
  template <class F>
  auto map(F f) const -> Poly<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<S> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(f(c));
    return Poly<S>(std::move(v));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::zero_coeff(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
  return p.is_zero();
}

template <class R>
Poly<R> pow(const Poly<R>& p, unsigned long n) {
  Poly<R> result(R(1)), base = p;
  while (n) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

/// Long division over a field: a = q*b + r with deg r < deg b.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<R>(), a};
  std::vector<R> rem = a.coeffs();
  const int db = b.degree();
  std::vector<R> quo(static_cast<std::size_t>(a.degree() - db + 1), R(0));
  const R inv = R(1) / b.leading();
  const bool monic = b.leading() == R(1);
  for (int i = a.degree(); i >= db; --i) {
    if (is_zero(rem[i])) continue;
    R t = monic ? rem[i] : R(rem[i] * inv);
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= t * b[j];
    quo[i - db] = std::move(t);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly<R>(std::move(quo)), Poly<R>(std::move(rem))};
}

/// Exact quotient a / b, or nullopt when b does not divide a.
template <class R>
std::optional<Poly<R>> exact_quotient(const Poly<R>& a, const Poly<R>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

template <class R>
bool divides(const Poly<R>& b, const Poly<R>& a) {
  return divmod(a, b).second.is_zero();
}

template <class R>
Poly<R> make_monic(const Poly<R>& p) {
  if (p.is_zero() || p.leading() == R(1)) return p;
  return p * R(R(1) / p.leading());
}

/// Monic gcd over a field; gcd(0, 0) = 0.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

/// Extended gcd over a field: returns (g, s, t) with s*a + t*b = g, g monic.
template <class R>
std::tuple<Poly<R>, Poly<R>, Poly<R>> xgcd(const Poly<R>& a, const Poly<R>& b) {
  Poly<R> r0 = a, r1 = b, s0(R(1)), s1, t0, t1(R(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<R> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const R inv = R(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// p(q(x)).
template <class R>
Poly<R> compose(const Poly<R>& p, const Poly<R>& q) {
  Poly<R> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + Poly<R>(p[static_cast<std::size_t>(i)]);
  return acc;
}

/// Sum over k of c_k num^k den^(h-k) for k = 0..h, evaluated by homogeneous Horner.
///
/// T is the ring holding num/den (a polynomial ring, or a scalar ring);
/// lift maps each coefficient c_k into T. Coefficients past the end of
/// `coeffs` are taken as zero, so h may exceed the degree.
template <class T, class C, class Lift>
T homogeneous_eval(const std::vector<C>& coeffs, const T& num, const T& den, std::size_t h,
                   Lift lift) {
  if (coeffs.size() > h + 1) throw DomainError("homogeneous degree below polynomial degree");
  std::vector<T> den_pow;
  den_pow.reserve(h + 1);
  den_pow.push_back(lift(C(1)));
  for (std::size_t k = 1; k <= h; ++k) den_pow.push_back(den_pow.back() * den);
  auto coeff = [&](std::size_t k) { return k < coeffs.size() ? coeffs[k] : C(0); };
  T acc = lift(coeff(h));
  for (std::size_t k = h; k-- > 0;) {
    acc = acc * num;
    C c = coeff(k);
    if (!is_zero(c)) acc = acc + lift(c) * den_pow[h - k];
  }
  return acc;
}

/// Denominator-cleared substitution p(num/den) * den^h over the same coefficient ring.
template <class R>
Poly<R> compose_homogeneous(const Poly<R>& p, const Poly<R>& num, const Poly<R>& den,
                            std::size_t h) {
  return homogeneous_eval(p.coeffs(), num, den, h, [](const R& c) { return Poly<R>(c); });
}

namespace detail {
inline std::string coeff_text(const Rational& c) { return c.get_str(); }
inline bool coeff_is_simple(const Rational&) { return true; }
inline bool coeff_negative(const Rational& c) { return sgn(c) < 0; }

template <class R>
std::string coeff_text(const R& c) {
  return "(" + to_string(c) + ")";
}
template <class R>
bool coeff_is_simple(const R&) {
  return false;
}
template <class R>
bool coeff_negative(const R&) {
  return false;
}
}  // namespace detail

/// Human-readable form, highest degree first, e.g. "x^4 - x^3 + x^2 + x + 1".
template <class R>
std::string to_string(const Poly<R>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const R& c = p[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    const bool simple = detail::coeff_is_simple(c);
    const bool neg = simple && detail::coeff_negative(c);
    R mag = neg ? R(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = simple && mag == R(1);
    if (i == 0 || !unit) os << detail::coeff_text(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace rr5::exact
