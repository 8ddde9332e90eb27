#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rr5/exact/resultant.hpp"
#include "rr5/hp/modular.hpp"
#include "rr5/hp/roots.hpp"

using namespace rr5::hp;
using rr5::exact::QPoly;
using rr5::exact::qpoly;
using rr5::exact::qpoly_hi;
using rr5::exact::Rational;

namespace {

bool close(const BigComplex& a, const BigComplex& b, long bits_below_prec, prec_t prec) {
  BigFloat scale = a.abs();
  if (scale < BigFloat(1L, prec)) scale = BigFloat(1L, prec);
  return dist(a, b) < ldexp(scale, -static_cast<long>(prec) + bits_below_prec);
}

BigComplex random_tau(std::mt19937_64& rng, prec_t prec) {
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.3, 3.0);
  return {BigFloat(re(rng), prec), BigFloat(im(rng), prec)};
}

BigComplex c(double re, double im, prec_t p) { return BigComplex(re, im, p); }

QPoly random_squarefree(std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::uniform_int_distribution<long> coef(-30, 30);
  while (true) {
    std::vector<Rational> v(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : v) x = coef(rng);
    v.back() = 1;
    QPoly p(std::move(v));
    if (p.degree() >= 1 && rr5::exact::is_squarefree(p)) return p;
  }
}

}  // namespace

TEST_CASE("eta transformation laws") {
  const prec_t P = 256;
  BigComplex tau = c(0, 2, P);
  BigComplex lhs = eta(tau + 1L, P);
  BigComplex rhs = BigComplex::root_of_unity(1, 24, P) * eta(tau, P);
  CHECK(close(lhs, rhs, 20, P));

  BigComplex t2 = c(0.5, 2, P);
  BigComplex inv = eta(-(BigComplex(1L, P) / t2), P);
  BigComplex factor = sqrt(t2 / BigComplex::i(P));
  CHECK(close(inv, factor * eta(t2, P), 20, P));

  BigComplex e1 = eta(BigComplex::i(P), P);
  BigComplex e2 = eta(BigComplex::i(2 * P), 2 * P);
  CHECK(close(e1, e2.with_prec(P), 8, P));
  // eta(i) = Gamma(1/4) / (2 pi^(3/4))
  CHECK(std::abs(e1.re().to_double() - 0.768225422326056659) < 1e-15);
  CHECK_THROWS_AS(eta(c(0.3, -1, P), P), rr5::DomainError);
}

TEST_CASE("Rogers-Ramanujan function identities") {
  const prec_t P = 256;
  BigComplex tau = c(0.5, 1.5, P);
  BigComplex r5 = pow(rr_r(tau, P), 5);
  BigComplex lhs = BigComplex(1L, P) / r5 - 11L - r5;
  BigComplex rhs = pow(eta(tau, P + 32) / eta(tau * 5L, P + 32), 6).with_prec(P);
  CHECK(close(lhs, rhs, 24, P));

  BigComplex t = c(0, 2, P);
  CHECK(close(rr_r(t + 1L, P), BigComplex::root_of_unity(1, 5, P) * rr_r(t, P), 24, P));
  CHECK(close(rr_r(t, P), rr_r_product(t, P), 16, P));

  // r(3i) = sqrt(c^2 + 1) - c with Ramanujan's 2c.
  BigFloat s3 = sqrt(BigFloat(3L, P + 64)), s5 = sqrt(BigFloat(5L, P + 64));
  BigFloat s15 = sqrt(BigFloat(15L, P + 64));
  BigFloat f60 = sqrt(sqrt(BigFloat(60L, P + 64)));
  BigFloat two_c = (f60 + 2L - s3 + s5) / (f60 - 2L + s3 - s5) * s5 + 1L;
  BigFloat cc = two_c / 2L;
  BigFloat r3i = sqrt(cc * cc + 1L) - cc;
  BigComplex r = rr_r(c(0, 3, P), P);
  CHECK(close(r, BigComplex(r3i.with_prec(P)), 32, P));
  CHECK(abs(r.im()) < pow2(-P + 32, P));
  BigFloat c2 = (BigFloat(19L, P + 64) + s3 * 15L + s5 * 11L + s15 * 5L) / 8L +
                (BigFloat(5L, P + 64) + s3 * 5L + s5 * 4L + s15 * 2L) / 8L * f60;
  CHECK(abs(c2 - cc) < pow2(-P, P + 64));
}

TEST_CASE("j at CM points") {
  const prec_t P = 256;
  CHECK(near_integer(j_from_tau(BigComplex::i(P), P)) == rr5::exact::Integer(1728));
  auto j19 = j_from_tau(quadratic_point(1, 1, 19, 2, P), P);
  CHECK(near_integer(j19) == rr5::exact::Integer(-884736));
  auto j11 = j_from_tau(quadratic_point(1, 1, 11, 2, P), P);
  CHECK(near_integer(j11) == rr5::exact::Integer(-32768));
}

TEST_CASE("identities at random points") {
  const prec_t P = 256;
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 20; ++i) {
    BigComplex tau = random_tau(rng, P);
    CHECK(close(eta(tau + 1L, P), BigComplex::root_of_unity(1, 24, P) * eta(tau, P), 32, P));
    BigComplex inv = eta(-(BigComplex(1L, P) / tau), P);
    CHECK(close(inv, sqrt(tau / BigComplex::i(P)) * eta(tau, P), 32, P));
    CHECK(close(rr_r(tau + 1L, P), BigComplex::root_of_unity(1, 5, P) * rr_r(tau, P), 32, P));
    CHECK(close(j_weber(tau, P), j_icosahedral(tau, P), 32, P));
    CHECK_NOTHROW(j_from_tau(tau, P));
  }
}

TEST_CASE("polynomial roots") {
  const prec_t P = 256;
  auto r = poly_complex_roots(qpoly({1, 0, 1}), P);
  REQUIRE(r.size() == 2);
  CHECK(close(r[0], -BigComplex::i(P), 8, P));
  CHECK(close(r[1], BigComplex::i(P), 8, P));

  auto r11 = poly_complex_roots(qpoly({48, 4, 1}), P);
  BigFloat s44 = sqrt(BigFloat(44L, P));
  CHECK(close(r11[0], BigComplex(BigFloat(-2L, P), -s44), 8, P));
  CHECK(close(r11[1], BigComplex(BigFloat(-2L, P), s44), 8, P));

  CHECK_THROWS_AS(poly_complex_roots(qpoly({1, 2, 1}), P), rr5::DomainError);

  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  std::vector<Rational> v(13);
  for (auto& x : v) x = coef(rng);
  v.back() = 7;
  QPoly p(v);
  auto roots = poly_complex_roots(p, P);
  auto back = expand_roots(roots);
  for (std::size_t i = 0; i <= 12; ++i) {
    BigComplex want(BigFloat(Rational(p[i] / p.leading()), P));
    CHECK(dist(back[i], want) < pow2(-P / 2, P));
  }
}

TEST_CASE("integer reconstruction") {
  const prec_t P = 256;
  std::vector<BigComplex> ii{BigComplex::i(P), -BigComplex::i(P)};
  CHECK(reconstruct_int_poly(ii, P) == qpoly({1, 0, 1}));
  std::vector<BigComplex> bad{BigComplex::i(P) + BigComplex(pow2(-16, P)), -BigComplex::i(P)};
  CHECK_THROWS_AS(reconstruct_int_poly(bad, P), rr5::ReconstructionError);

  // Values with no fractional bits left cannot be certified as integers.
  CHECK(near_integer(BigComplex(pow2(60, 128))).has_value());
  CHECK_FALSE(near_integer(BigComplex(pow2(100, 128))).has_value());
  CHECK_FALSE(near_integer(BigComplex(BigFloat(0L, 128), pow2(100, 128))).has_value());

  std::mt19937_64 rng(2718);
  for (int i = 0; i < 50; ++i) {
    QPoly p = random_squarefree(rng, 20);
    CHECK(reconstruct_int_poly(poly_complex_roots(p, P), P) == p);
  }
}

TEST_CASE("resultants agree with the root-product oracle") {
  const prec_t P = 256;
  std::mt19937_64 rng(161803);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<long> coef(-20, 20);
  auto rnd = [&] {
    std::vector<Rational> v(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : v) x = coef(rng);
    if (v.back() == 0) v.back() = 1;
    return QPoly(std::move(v));
  };
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    QPoly p = rnd(), q = rnd();
    if (!rr5::exact::is_squarefree(p) || !rr5::exact::is_squarefree(q)) continue;
    Rational exact = rr5::exact::resultant(p, q);
    BigComplex approx = oracle::resultant_by_roots(p, q, P);
    BigFloat scale = approx.abs();
    if (scale < BigFloat(1L, P)) scale = BigFloat(1L, P);
    CHECK(dist(approx, BigComplex(BigFloat(exact, P))) < ldexp(scale, -128));
    if (p.degree() >= 2) {
      BigComplex d = oracle::resultant_by_roots(p, p.derivative(), P);
      long n = p.degree();
      if ((n * (n - 1) / 2) % 2) d = -d;
      d = d / BigFloat(p.leading(), P);
      BigFloat s2 = d.abs();
      if (s2 < BigFloat(1L, P)) s2 = BigFloat(1L, P);
      CHECK(dist(d, BigComplex(BigFloat(rr5::exact::discriminant(p), P))) < ldexp(s2, -128));
    }
    ++checked;
  }
  CHECK(checked > 50);
}
