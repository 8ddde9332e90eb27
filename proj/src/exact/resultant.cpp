#include "rr5/exact/resultant.hpp"

#include "rr5/errors.hpp"

namespace rr5::exact {

namespace {

ZPoly divide_exact(const ZPoly& p, const Integer& c) {
  return p.map([&](const Integer& x) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return q;
  });
}

Integer divexact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  const int db = b.degree();
  if (a.degree() < db) return a;
  std::vector<Integer> r = a.coeffs();
  const Integer& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Integer t = r[i];
    for (auto& x : r) x *= lb;
    if (t != 0)
      for (int j = 0; j <= db; ++j) r[i - db + j] -= t * b[j];
  }
  r.resize(static_cast<std::size_t>(db));
  return ZPoly(std::move(r));
}

Integer resultant(const ZPoly& p, const ZPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return 0;
  ZPoly A = p, B = q;
  int s = 1;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) s = -1;
  }
  if (B.degree() == 0) return s * ipow(B[0], static_cast<unsigned long>(A.degree()));
  Integer ca = content(A), cb = content(B);
  A = divide_exact(A, ca);
  B = divide_exact(B, cb);
  Integer t = ipow(ca, static_cast<unsigned long>(B.degree())) *
              ipow(cb, static_cast<unsigned long>(A.degree()));
  Integer g = 1, h = 1;
  while (true) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    ZPoly R = pseudo_remainder(A, B);
    A = std::move(B);
    if (R.is_zero()) return 0;
    B = divide_exact(R, g * ipow(h, static_cast<unsigned long>(delta)));
    g = A.leading();
    // h <- h^(1 - delta) g^delta
    if (delta > 0)
      h = divexact(ipow(g, static_cast<unsigned long>(delta)),
                   ipow(h, static_cast<unsigned long>(delta - 1)));
    if (B.degree() <= 0) break;
  }
  const auto da = static_cast<unsigned long>(A.degree());
  Integer hh = divexact(ipow(B.leading(), da), ipow(h, da - 1));
  return s * t * hh;
}

Rational resultant(const QPoly& p, const QPoly& q) {
  if (p.is_zero() && q.is_zero()) throw DomainError("resultant of two zero polynomials");
  if (p.is_zero() || q.is_zero()) return 0;
  // p = cp * P with P integral primitive, so Res(p, q) = cp^deg q cq^deg p Res(P, Q).
  Rational cp = content(p), cq = content(q);
  ZPoly P = to_zpoly(p * Rational(1 / cp)), Q = to_zpoly(q * Rational(1 / cq));
  Rational r = resultant(P, Q);
  r *= ipow(cp, static_cast<unsigned long>(q.degree()));
  r *= ipow(cq, static_cast<unsigned long>(p.degree()));
  return r;
}

Rational discriminant(const QPoly& p) {
  const int n = p.degree();
  if (n < 2) throw DomainError("discriminant needs degree at least 2");
  Rational r = resultant(p, p.derivative()) / p.leading();
  if ((static_cast<long>(n) * (n - 1) / 2) & 1) r = -r;
  return r;
}

}  // namespace rr5::exact
