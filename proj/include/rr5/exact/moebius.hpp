#pragma once

// Linear fractional maps z -> (a z + b) / (c z + d) over an exact field, up to scalars.

#include <array>
#include <optional>

#include "rr5/errors.hpp"
#include "rr5/exact/cyclo.hpp"
#include "rr5/exact/intpoly.hpp"
#include "rr5/exact/poly.hpp"
#include "rr5/exact/ratfunc.hpp"

namespace rr5::exact {

template <class K>
struct Moebius {
  K a{1}, b{0}, c{0}, d{1};

  Moebius() = default;
  Moebius(K a_, K b_, K c_, K d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
    if (detail::zero_coeff(det())) throw DomainError("singular linear fractional map");
  }

  static Moebius identity() { return {}; }

  K det() const { return a * d - b * c; }

  /// Matrix product; as maps (M * N)(z) = M(N(z)).
  friend Moebius operator*(const Moebius& m, const Moebius& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c,
            m.c * n.b + m.d * n.d};
  }

  /// Value at z; nullopt for the point at infinity.
  std::optional<K> apply(const K& z) const {
    K den = c * z + d;
    if (detail::zero_coeff(den)) return std::nullopt;
    return (a * z + b) / den;
  }

  Moebius inverse() const { return {d, -b, -c, a}; }

  /// Scaled so the first nonzero of (a, b, c, d) is 1.
  Moebius canonical() const {
    const K* lead = &a;
    if (detail::zero_coeff(a)) lead = detail::zero_coeff(b) ? &c : &b;
    K inv = K(1) / *lead;
    Moebius r;
    r.a = a * inv;
    r.b = b * inv;
    r.c = c * inv;
    r.d = d * inv;
    return r;
  }

  /// Equal as maps of the projective line.
  bool same_map(const Moebius& o) const {
    return a * o.b == b * o.a && a * o.c == c * o.a && a * o.d == d * o.a && b * o.c == c * o.b &&
           b * o.d == d * o.b && c * o.d == d * o.c;
  }

  bool is_identity_map() const {
    return detail::zero_coeff(b) && detail::zero_coeff(c) && a == d;
  }

  /// Smallest n in 1..limit with M^n the identity map, or 0.
  int order(int limit = 120) const {
    Moebius p = *this;
    for (int n = 1; n <= limit; ++n) {
      if (p.is_identity_map()) return n;
      p = p * *this;
    }
    return 0;
  }

  RatFunc<K> as_ratfunc() const { return {Poly<K>{b, a}, Poly<K>{d, c}}; }

  friend bool operator==(const Moebius& m, const Moebius& n) {
    return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
  }
};

/// (c x + d)^deg p * p((a x + b) / (c x + d)), without normalization.
/// This is a right action up to scalars: acting by M then N matches acting by M * N.
template <class K>
Poly<K> pullback(const Moebius<K>& m, const Poly<K>& p) {
  if (p.is_zero()) throw DomainError("pullback of the zero polynomial");
  return compose_homogeneous(p, Poly<K>{m.b, m.a}, Poly<K>{m.d, m.c},
                             static_cast<std::size_t>(p.degree()));
}

/// Canonical representative of the line K^* p: monic, and when that is
/// rational, rescaled to a primitive integral polynomial with positive
/// leading coefficient.
template <int N>
Poly<Cyclo<N>> projective_normal_form(const Poly<Cyclo<N>>& p) {
  if (p.is_zero()) throw DomainError("normal form of the zero polynomial");
  Poly<Cyclo<N>> m = make_monic(p);
  for (const auto& c : m.coeffs())
    if (!c.is_rational()) return m;
  return lift<N>(primitive_part(to_rational_poly(m)));
}

inline QPoly projective_normal_form(const QPoly& p) {
  if (p.is_zero()) throw DomainError("normal form of the zero polynomial");
  return primitive_part(p);
}

/// Pullback followed by projective normalization.
template <class K>
Poly<K> act_on_poly(const Moebius<K>& m, const Poly<K>& p) {
  return projective_normal_form(pullback(m, p));
}

/// p and q span the same line (p = c q for a nonzero constant c).
template <class K>
bool projectively_equal(const Poly<K>& p, const Poly<K>& q) {
  if (p.degree() != q.degree()) return false;
  if (p.is_zero()) return true;
  return p * q.leading() == q * p.leading();
}

}  // namespace rr5::exact
