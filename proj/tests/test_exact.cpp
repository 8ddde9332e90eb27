#include <doctest.h>

#include <random>

#include "rr5/exact/cyclo.hpp"
#include "rr5/exact/intpoly.hpp"
#include "rr5/exact/moebius.hpp"
#include "rr5/exact/ratfunc.hpp"
#include "rr5/exact/resultant.hpp"

using namespace rr5::exact;

namespace {

QPoly j5_num() { return pow(qpoly({1, -12, 14, 12, 1}), 3); }
QPoly j5_den() { return qpoly({0, 0, 0, 0, 0, 1}) * qpoly({1, -11, -1}); }

QPoly random_poly(std::mt19937_64& rng, int max_deg, long range) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-range, range);
  std::vector<Rational> v(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& c : v) c = coef(rng);
  if (v.back() == 0) v.back() = 1;
  return QPoly(std::move(v));
}

Q5 random_q5(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-5, 5);
  Q5::Coords c;
  for (auto& x : c) x = Rational(coef(rng), 1 + std::abs(coef(rng)));
  for (auto& x : c) x.canonicalize();
  return Q5(c);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  QPoly p = qpoly_hi({1, -1, 1, 1, 1});
  CHECK(p.degree() == 4);
  CHECK(to_string(p) == "x^4 - x^3 + x^2 + x + 1");
  CHECK((p - p).is_zero());
  auto [q, r] = divmod(p * qpoly({3, 2}) + qpoly({5}), qpoly({3, 2}));
  CHECK(q == p);
  CHECK(r == qpoly({5}));
  CHECK(!exact_quotient(p, qpoly({1, 1})).has_value());
  CHECK(gcd(p * qpoly({1, 1}), qpoly({-1, 0, 1})) == qpoly({1, 1}));
  CHECK(p.inflate(5).degree() == 20);
  CHECK(compose(qpoly({0, 0, 1}), qpoly({1, 1})) == qpoly({1, 2, 1}));
  CHECK(p.reversed().reversed() == p);
  CHECK(primitive_part(qpoly({-2, 4, -6})) == qpoly({1, -2, 3}));
}

TEST_CASE("resultants and discriminants") {
  CHECK(resultant(qpoly({-1, 1}), qpoly({1, 0, 1})) == 2);
  QPoly p = qpoly({3, -1, 4, 1});
  CHECK(resultant(p, p) == 0);
  CHECK(resultant(qpoly({1, 0, 1}), qpoly({-2, 0, 1})) == 9);
  CHECK_THROWS_AS(resultant(QPoly(), QPoly()), rr5::DomainError);

  CHECK(discriminant(qpoly_hi({1, -11, -114, -66, -589})) == -ipow(Rational(5), 16) * 19);
  CHECK(discriminant(qpoly_hi({1, 7, 4, 18, 1})) == -ipow(Rational(5), 8) * 19);
  CHECK(discriminant(qpoly({0, 0, 1})) == 0);
  CHECK_THROWS_AS(discriminant(qpoly({1, 1})), rr5::DomainError);
  CHECK(discriminant(qpoly({-2, 0, 1})) == 8);
  CHECK(discriminant(qpoly({1, 0, 3})) == -12);
}

TEST_CASE("resultant multiplicativity on random polynomials") {
  std::mt19937_64 rng(20240607);
  for (int i = 0; i < 100; ++i) {
    QPoly p = random_poly(rng, 8, 9), q1 = random_poly(rng, 4, 9), q2 = random_poly(rng, 4, 9);
    if (p.degree() < 1) continue;
    CHECK(resultant(p, q1 * q2) == resultant(p, q1) * resultant(p, q2));
    CHECK(resultant(p, q1) == resultant(q1, p) * ((p.degree() * q1.degree()) % 2 ? -1 : 1));
    if (p.degree() >= 2 && q1.degree() >= 1) {
      // disc(pq) = disc(p) disc(q) Res(p, q)^2
      if (q1.degree() >= 2)
        CHECK(discriminant(p * q1) ==
              discriminant(p) * discriminant(q1) * resultant(p, q1) * resultant(p, q1));
    }
  }
}

TEST_CASE("denominator-cleared composition") {
  QPoly H19 = qpoly({884736, 1});
  QPoly F19 = compose_homogeneous(H19, j5_num(), j5_den(), 1);
  CHECK(F19 == qpoly_hi({1, 36, 398, -36, 1}) * qpoly_hi({1, 0, 76, 0, -24474, 0, 76, 0, 1}));
  QPoly F4 = compose_homogeneous(qpoly({-1728, 1}), j5_num(), j5_den(), 1);
  CHECK(F4 == pow(qpoly({1, 0, 1}), 2) * pow(qpoly_hi({1, 18, 74, -18, 1}), 2));
  CHECK(compose_homogeneous(qpoly({0, 1}), j5_num(), j5_den(), 1) == j5_num());
}

TEST_CASE("cyclotomic fields") {
  Q5 z = Q5::zeta();
  Q5 acc(1);
  for (int i = 0; i < 5; ++i) acc *= z;
  CHECK(acc == Q5(1));
  CHECK(Q5(1) + z + z * z + Q5::zeta(3) + Q5::zeta(4) == Q5(0));
  Q5 s5 = Q5::sqrt5();
  CHECK(s5 * s5 == Q5(5));
  Q5 eps = (Q5(-1) + s5) * Q5(Rational(1, 2));
  Q5 epsbar = (Q5(-1) - s5) * Q5(Rational(1, 2));
  CHECK(eps * epsbar == Q5(-1));
  Q5 eps5 = eps * eps * eps * eps * eps;
  CHECK(eps5 == (Q5(-11) + Q5(5) * s5) * Q5(Rational(1, 2)));
  CHECK(Q20::sqrt5() * Q20::sqrt5() == Q20(5));
  CHECK(Q20::imag_unit() * Q20::imag_unit() == Q20(-1));
  CHECK(embed(s5) == Q20::sqrt5());
  CHECK(s5.galois(2) == -s5);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 25; ++i) {
    Q5 a = random_q5(rng), b = random_q5(rng);
    CHECK(embed(a * b) == embed(a) * embed(b));
    CHECK(embed(a + b) == embed(a) + embed(b));
    if (!a.is_zero()) CHECK(a * a.inverse() == Q5(1));
  }
}

TEST_CASE("rational function equality") {
  using RF = RatFunc<Rational>;
  RF j5(j5_num(), j5_den());
  RF b = RF::x();
  RF z = b - RF(qpoly({1})) / b;
  auto zp = [&](std::initializer_list<long> c) { return RF(qpoly(c)).compose(z); };
  RF rhs = -(zp({16, 12, 1}) * zp({16, 12, 1}) * zp({16, 12, 1})) / zp({11, 1});
  CHECK(j5 == rhs);
  RF j55(pow(qpoly({1, 228, 494, -228, 1}), 3), qpoly({0, 1}) * pow(qpoly({1, -11, -1}), 5));
  RF rhs55 = -(zp({496, -228, 1}) * zp({496, -228, 1}) * zp({496, -228, 1})) /
             (zp({11, 1}) * zp({11, 1}) * zp({11, 1}) * zp({11, 1}) * zp({11, 1}));
  CHECK(j55 == rhs55);
  CHECK(RF(qpoly({0, 1}), qpoly({0, 1})) == RF(qpoly({1})));
  CHECK(RF(qpoly({0, 2}), qpoly({0, 4})).num() == QPoly{Rational(1, 2)});
}

TEST_CASE("linear fractional maps") {
  Q5 s5 = Q5::sqrt5();
  Q5 eps5 = (Q5(-11) + Q5(5) * s5) * Q5(Rational(1, 2));
  Moebius<Q5> tau(Q5(-1), eps5, eps5, Q5(1));
  CHECK((tau * tau).is_identity_map());
  CHECK(tau.order() == 2);
  Moebius<Q5> id;
  CHECK((id * tau).same_map(tau));
  CHECK((tau * id).same_map(tau));

  Moebius<Q5> U(Q5(0), Q5(-1), Q5(1), Q5(0));
  auto p11 = lift<5>(qpoly_hi({1, -1, 1, 1, 1}));
  CHECK(act_on_poly(U, p11) == p11);
  CHECK(act_on_poly(id, p11) == p11);

  Moebius<Rational> V(-11, 4, 1, 11);
  QPoly R19 = qpoly({400, 36, 1});
  CHECK(pullback(V, R19) == R19 * Rational(125));
  CHECK(act_on_poly(V, R19) == R19);
}

TEST_CASE("pullback is a right action up to scalars") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    Moebius<Q5> m, n;
    do {
      m = Moebius<Q5>();
      m.a = random_q5(rng), m.b = random_q5(rng), m.c = random_q5(rng), m.d = random_q5(rng);
    } while (m.det().is_zero());
    do {
      n = Moebius<Q5>();
      n.a = random_q5(rng), n.b = random_q5(rng), n.c = random_q5(rng), n.d = random_q5(rng);
    } while (n.det().is_zero());
    auto p = lift<5>(random_poly(rng, 5, 6));
    if (p.degree() < 1) continue;
    CHECK(projectively_equal(pullback(n, pullback(m, p)), pullback(m * n, p)));
    CHECK(act_on_poly(n, act_on_poly(m, p)) == act_on_poly(m * n, p));
  }
}

TEST_CASE("integer factorization") {
  auto f = factor_integer(Integer(-ipow(Integer(5), 16) * 19 * 7), 1000);
  CHECK(f.sign == -1);
  CHECK(f.to_string() == "-5^16 * 7 * 19");
  CHECK(f.value() == -ipow(Integer(5), 16) * 19 * 7);
  CHECK(f.complete);
}
