#include "rr5/icosa.hpp"

#include <algorithm>
#include <sstream>

#include "rr5/errors.hpp"
#include "rr5/exact/ratfunc.hpp"
#include "rr5/exact/resultant.hpp"
#include "rr5/golden.hpp"
#include "rr5/hp/modular.hpp"
#include "rr5/hp/roots.hpp"

namespace rr5::icosa {

using exact::lift;
using exact::Q20;
using exact::qpoly;
using exact::Rational;

namespace {

using RF5 = exact::RatFunc<Q5>;
using Q20Poly = exact::Poly<Q20>;

Q5 s5() { return Q5::sqrt5(); }

bool same_set(const std::vector<Map>& a, const std::vector<Map>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& m : a)
    if (std::none_of(b.begin(), b.end(), [&](const Map& n) { return n.same_map(m); }))
      return false;
  return true;
}

Q5Poly from_sqrt5_poly(const golden::Sqrt5Poly& p) {
  Q5Poly r = lift<5>(golden::poly(p.rational));
  Q5Poly s = lift<5>(golden::poly(p.sqrt5));
  return r + s * s5();
}

// zeta_20 power sums written as {exponent, coefficient}.
Q20 z20(std::initializer_list<std::pair<int, long>> terms) {
  Q20 acc;
  for (auto [e, c] : terms) acc += Q20::zeta(e) * Q20(c);
  return acc;
}

Q20 pow5(const Q20& x) { return x * x * x * x * x; }

BigFloat bf(long v, prec_t prec) { return BigFloat(v, prec); }

// Smallest |x - r| over the roots r of p.
BigFloat nearest_root_distance(const QPoly& p, const BigComplex& x, prec_t prec) {
  auto roots = hp::poly_complex_roots(p, prec);
  BigFloat best = hp::dist(roots.front(), x);
  for (const auto& r : roots) {
    BigFloat d = hp::dist(r, x);
    if (d < best) best = d;
  }
  return best;
}

std::string sci(const BigFloat& x) { return x.to_string(3); }

}  // namespace

Map S() { return {Q5::zeta(1), Q5(0), Q5(0), Q5(1)}; }
Map T() { return {-(Q5(1) + s5()), Q5(2), Q5(2), Q5(1) + s5()}; }
Map U() { return {Q5(0), Q5(-1), Q5(1), Q5(0)}; }
Map T2() { return {-(Q5(1) - s5()), Q5(2), Q5(2), Q5(1) - s5()}; }

bool G60::contains(const Map& m) const {
  return std::any_of(elements.begin(), elements.end(), [&](const Map& e) { return e.same_map(m); });
}

std::map<int, int> G60::order_census() const {
  std::map<int, int> census;
  for (const auto& e : elements) ++census[e.order(60)];
  return census;
}

G60 generate_g60() {
  G60 g;
  g.elements.push_back(Map::identity());
  const Map gens[] = {S(), T()};
  for (std::size_t i = 0; i < g.elements.size(); ++i) {
    for (const auto& s : gens) {
      Map next = (g.elements[i] * s).canonical();
      if (g.contains(next)) continue;
      g.elements.push_back(next);
      if (g.elements.size() > 60) throw IntegrityError("g60", "closure exceeds 60 elements");
    }
  }
  return g;
}

Report group_structure(const G60& g) {
  Report rep;
  rep.add("|G60| = 60", g.elements.size() == 60, std::to_string(g.elements.size()) + " elements");
  auto census = g.order_census();
  std::ostringstream os;
  for (auto [o, n] : census) os << "order " << o << ": " << n << "  ";
  std::map<int, int> a5 = {{1, 1}, {2, 15}, {3, 20}, {5, 24}};
  rep.add("element orders match A5", census == a5, os.str());
  rep.add("S has order 5 and T has order 2", S().order() == 5 && T().order() == 2);

  Map s2 = S() * S(), s3 = s2 * S();
  Map word = T() * s2 * T() * s3 * T() * s2;
  rep.add("U = T S^2 T S^3 T S^2", word.same_map(U()));
  rep.add("U(z) = -1/z has order 2", U().order() == 2);
  rep.add("TU = UT = T2", (T() * U()).same_map(T2()) && (U() * T()).same_map(T2()));
  rep.add("U = T T2 = T2 T", (T() * T2()).same_map(U()) && (T2() * T()).same_map(U()));

  std::vector<Map> H = {Map::identity(), T(), U(), T2()};
  bool closed = true;
  for (const auto& a : H)
    for (const auto& b : H)
      closed = closed && std::any_of(H.begin(), H.end(), [&](const Map& c) { return c.same_map(a * b); });
  rep.add("H = {1, T, U, T2} is a subgroup", closed);
  bool inside = std::all_of(H.begin(), H.end(), [&](const Map& m) { return g.contains(m); });
  rep.add("H lies in G60", inside);

  Map conj = S().inverse() * U() * S();
  rep.add("S^-1 U S (z) = -zeta^3 / z", conj.same_map(Map(Q5(0), -Q5::zeta(3), Q5(1), Q5(0))));
  rep.add("S^-1 U S is not in H",
          std::none_of(H.begin(), H.end(), [&](const Map& m) { return m.same_map(conj); }));
  return rep;
}

RF5 f5() {
  Q5Poly num = lift<5>(exact::pow(qpoly({1, 228, 494, -228, 1}), 3).inflate(5));
  Q5Poly den = lift<5>((qpoly({0, 1}) * exact::pow(qpoly({1, -11, -1}), 5)).inflate(5));
  return {num, den};
}

Report verify_f5_invariance() {
  Report rep;
  RF5 f = f5();
  rep.add("f5(S z) = f5(z)", f.compose(S().as_ratfunc()) == f);
  rep.add("f5(T z) = f5(z)", f.compose(T().as_ratfunc()) == f);
  rep.add("f5(U z) = f5(z)", f.compose(U().as_ratfunc()) == f);
  Map shift(Q5(1), Q5(1), Q5(0), Q5(1));
  rep.add("f5(z + 1) differs from f5(z)", !(f.compose(shift.as_ratfunc()) == f));
  return rep;
}

OrbitResult orbit_and_stabilizer(const QPoly& p, const G60& g, const QPoly& gd5) {
  OrbitResult out;
  const Q5Poly base = exact::projective_normal_form(lift<5>(p));
  const Q5Poly target = lift<5>(gd5);
  for (const auto& m : g.elements) {
    Q5Poly img = exact::act_on_poly(m, base);
    if (img == base) out.stabilizer.push_back(m);
    if (std::find(out.orbit.begin(), out.orbit.end(), img) == out.orbit.end())
      out.orbit.push_back(std::move(img));
  }
  std::sort(out.orbit.begin(), out.orbit.end(), [](const Q5Poly& a, const Q5Poly& b) {
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
  });
  Report& rep = out.report;
  rep.add("orbit has 15 elements", out.orbit.size() == 15,
          std::to_string(out.orbit.size()) + " elements");
  std::size_t dividing = 0;
  for (const auto& q : out.orbit)
    if (exact::divides(q, target)) ++dividing;
  rep.add("every orbit element divides G_d(x^5) over Q(zeta_5)", dividing == out.orbit.size(),
          std::to_string(dividing) + "/" + std::to_string(out.orbit.size()));
  Q5Poly product(Q5(1));
  for (const auto& q : out.orbit) product *= q;
  rep.add("the orbit elements multiply to G_d(x^5) up to a constant",
          exact::projectively_equal(product, target) ||
              exact::projectively_equal(product * product, target));
  std::vector<Map> H = {Map::identity(), T(), U(), T2()};
  rep.add("stabilizer = {1, T, U, T2}", same_set(out.stabilizer, H),
          std::to_string(out.stabilizer.size()) + " elements");
  Map conj = S().inverse() * U() * S();
  rep.add("S^-1 U S does not fix p", !(exact::act_on_poly(conj, base) == base));
  return out;
}

Report verify_T_fixed_point(const QPoly& p, prec_t prec) {
  Report rep;
  BigFloat r5 = hp::sqrt(bf(5, prec));
  BigFloat z1 = (bf(-1, prec) - r5 + hp::sqrt(bf(10, prec) + 2L * r5)) / 2L;
  BigComplex z(z1);
  BigComplex tz = hp::embed(T().a, prec) * z + hp::embed(T().b, prec);
  tz = tz / (hp::embed(T().c, prec) * z + hp::embed(T().d, prec));
  rep.add("z1 is fixed by T", hp::dist(tz, z) < hp::pow2(-static_cast<long>(prec) + 16, prec));
  BigFloat v = hp::eval(p, z).abs();
  rep.add("|p(z1)| > 2^-32", v > hp::pow2(-32, prec), "|p(z1)| = " + sci(v));
  return rep;
}

Report locate_r_minus_inverse(const OrbitResult& orbit, long d, prec_t prec) {
  Report rep;
  auto w = pipeline::heegner_args(d).front().w(prec + 32);
  BigComplex y = hp::rr_r(BigComplex(-1L, prec + 32) / w, prec + 32).with_prec(prec);
  int hits = 0;
  bool rational = false;
  for (const auto& q : orbit.orbit) {
    BigFloat scale(1L, prec), yi(1L, prec), ya = y.abs();
    for (int i = 0; i <= q.degree(); ++i) {
      scale += hp::embed(q[static_cast<std::size_t>(i)], prec).abs() * yi;
      yi *= ya;
    }
    if (hp::eval(q, y).abs() / scale < hp::pow2(-static_cast<long>(prec) / 2, prec)) {
      ++hits;
      rational = std::all_of(q.coeffs().begin(), q.coeffs().end(),
                             [](const Q5& c) { return c.is_rational(); });
    }
  }
  rep.add("r(-1/w) is a root of exactly one orbit element", hits == 1,
          std::to_string(hits) + " matches");
  rep.add("that element has coefficients outside Q", hits == 1 && !rational);
  return rep;
}

Report verify_d4_corpus() {
  Report rep;
  const QPoly H4 = qpoly({-1728, 1});
  auto [F4, G4] = pipeline::build_F_G(H4, 1);
  const QPoly Q4 = qpoly({1, 0, 1});
  const QPoly f4 = qpoly({1, -18, 74, 18, 1});
  rep.add("F4 = Q4^2 f4^2", F4 == Q4 * Q4 * f4 * f4);
  rep.add("F4 equals the reference product", F4 == golden::poly(golden::kF4));

  QPoly G4_ref(Rational(1));
  for (const auto& f : golden::kG4Factors) G4_ref *= exact::pow(golden::poly(f), 2);
  rep.add("G4(x^5) equals the reference four-factor product", G4 == G4_ref);

  Q20 x1 = z20({{7, 1}, {6, -1}, {4, 1}, {3, -1}});
  Q20 x2 = z20({{5, 1}, {4, 1}, {2, -1}, {1, -1}});
  Q20 x3 = z20({{7, 1}, {6, 1}, {4, -1}, {2, 1}, {1, 1}});
  bool roots = true;
  const Q20 xs[] = {x1, x2, x3};
  for (int k = 0; k < 3; ++k) {
    auto fk = lift<20>(golden::poly(golden::kG4Factors[static_cast<std::size_t>(k + 1)]));
    roots = roots && fk.eval(xs[k]).is_zero();
  }
  rep.add("x1, x2, x3 are roots of the last three factors of G4", roots);

  Q20 a1 = z20({{7, -3}, {6, -1}, {4, 1}, {3, 3}, {0, -4}});
  Q20 a2 = z20({{7, 3}, {6, 1}, {5, -3}, {4, -1}, {3, 3}, {1, -6}, {0, -5}});
  Q20 a3 = z20({{7, 3}, {6, -1}, {4, 1}, {3, -3}, {0, -4}});
  Q20 a4 = z20({{7, -3}, {6, 1}, {5, 3}, {4, -1}, {3, -3}, {1, 6}, {0, -5}});
  auto f4_20 = lift<20>(f4);
  bool all_roots = true;
  for (const auto& a : {a1, a2, a3, a4}) all_roots = all_roots && f4_20.eval(a).is_zero();
  rep.add("alpha1..alpha4 are the roots of f4", all_roots);
  rep.add("the alphas are distinct", !(a1 == a2) && !(a1 == a3) && !(a1 == a4) && !(a2 == a3) &&
                                         !(a2 == a4) && !(a3 == a4));

  rep.add("alpha1 alpha2^2 is the reference fifth power",
          a1 * a2 * a2 == pow5(z20({{7, -1}, {6, -1}, {4, 1}, {3, 1}})));
  rep.add("alpha1 alpha3 = -1", a1 * a3 == Q20(-1));
  rep.add("alpha1 alpha4^3 is the reference fifth power",
          a1 * a4 * a4 * a4 == pow5(z20({{7, 2}, {6, -2}, {5, -1}, {4, 2}, {1, -2}, {0, 2}})));

  Rational disc = exact::discriminant(f4.inflate(5));
  Rational expected = exact::ipow(Rational(2), 40) * exact::ipow(Rational(3), 20) *
                      exact::ipow(Rational(5), 35);
  rep.add("disc f4(x^5) = 2^40 3^20 5^35", disc == expected);

  QPoly q4_5 = Q4.inflate(5);
  rep.add("Q4(x^5) = x^10 + 1 = (x^2+1)(x^8-x^6+x^4-x^2+1)",
          q4_5 == qpoly({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}) &&
              q4_5 == Q4 * qpoly({1, 0, -1, 0, 1, 0, -1, 0, 1}));
  bool unity = true;
  for (int k = 0; k < 20; ++k) {
    Q20 zk = Q20::zeta(k);
    bool is_root = lift<20>(q4_5).eval(zk).is_zero();
    if (is_root != (k % 2 == 1)) unity = false;
  }
  rep.add("the roots of Q4(x^5) are the primitive 4th and 20th roots of unity", unity);
  return rep;
}

BigFloat example1_alpha(prec_t prec) {
  const prec_t w = prec + 32;
  BigFloat r5 = hp::sqrt(bf(5, w));
  BigFloat inner = hp::sqrt(125L + 60L * r5);
  BigFloat outer = hp::sqrt(250L + 108L * r5 + (16L + 6L * r5) * inner);
  return ((bf(-8, w) - 3L * r5 - inner + outer) / 4L).with_prec(prec);
}

BigFloat ramanujan_r3i(int form, prec_t prec) {
  const prec_t w = prec + 32;
  BigFloat r3 = hp::sqrt(bf(3, w)), r5 = hp::sqrt(bf(5, w)), r15 = hp::sqrt(bf(15, w));
  BigFloat q60 = hp::sqrt(hp::sqrt(bf(60, w)));
  BigFloat c(w);
  if (form == 0) {
    BigFloat ratio = (q60 + 2L - r3 + r5) / (q60 - 2L + r3 - r5);
    c = (ratio * r5 + 1L) / 2L;
  } else {
    c = (19L + 15L * r3 + 11L * r5 + 5L * r15) / 8L + (5L + 5L * r3 + 4L * r5 + 2L * r15) / 8L * q60;
  }
  return (hp::sqrt(c * c + 1L) - c).with_prec(prec);
}

BigComplex r_4_3i_over_5(prec_t prec) {
  const prec_t w = prec + 32;
  BigFloat r3 = hp::sqrt(bf(3, w)), r5 = hp::sqrt(bf(5, w));
  BigComplex i = BigComplex::i(w);
  BigComplex omega = BigComplex(bf(-1, w), r3) / 2L;
  BigComplex bracket(hp::sqrt(4L + 2L * r5), hp::sqrt(-4L + 2L * r5));
  BigComplex v = -(i * omega * omega) / 2L + i * r3 / 2L -
                 omega / 4L * hp::sqrt(r3) * bracket;
  return v.with_prec(prec);
}

Report verify_radical_examples(const pipeline::PipelineResult& r19,
                             const pipeline::PipelineResult& r36, prec_t prec) {
  Report rep;
  if (r19.d != 19 || r36.d != 36) throw DomainError("examples need the d = 19 and d = 36 results");
  const BigFloat tol60("1e-60", prec);

  // Nested radical for d = 19.
  const QPoly pt_neg = golden::poly(golden::kP19TildeNeg);
  const BigFloat alpha = example1_alpha(prec);
  BigFloat dist1 = nearest_root_distance(pt_neg, BigComplex(alpha), prec);
  rep.add("nested radical for d = 19 is a root of p~19(-x)", dist1 < tol60, "distance " + sci(dist1));

  BigComplex w19 = hp::quadratic_point(9, 1, 19, 2, prec + 32);
  BigComplex via_r = BigComplex::root_of_unity(1, 10, prec + 32) * hp::rr_r(w19, prec + 32);
  BigFloat dist_r = hp::dist(via_r.with_prec(prec), BigComplex(alpha));
  rep.add("nested radical for d = 19 equals e^(pi i/5) r((9 + sqrt -19)/2)", dist_r < tol60,
          "distance " + sci(dist_r));

  QPoly pt = exact::compose(pt_neg, qpoly({0, -1}));
  if (pt.leading() < 0) pt = -pt;
  auto [F19, G19] = pipeline::build_F_G(r19.H, r19.h);
  (void)F19;
  rep.add("p~19(x) divides G19(x^5)", exact::divides(pt, G19));

  Map ts2 = T() * S() * S();
  Q5Poly q19_ts2 = exact::pullback(ts2, lift<5>(r19.q));
  BigComplex v = hp::eval(q19_ts2, BigComplex(-alpha));
  BigFloat scale(1L, prec), ai(1L, prec), aa = hp::abs(alpha);
  for (int k = 0; k <= q19_ts2.degree(); ++k) {
    scale += hp::embed(q19_ts2[static_cast<std::size_t>(k)], prec).abs() * ai;
    ai *= aa;
  }
  BigFloat rel = v.abs() / scale;
  rep.add("-alpha is a root of q19(T(zeta^2 x))", rel < tol60, "relative " + sci(rel));
  rep.add("pipeline q19 equals the reference q19", r19.q == golden::poly(golden::kQ19));

  // r(3i).
  const QPoly m = golden::poly(golden::kM36);
  BigFloat r3i_0 = ramanujan_r3i(0, prec), r3i_1 = ramanujan_r3i(1, prec);
  BigComplex r3i = hp::rr_r(BigComplex(BigFloat(prec + 32), bf(3, prec + 32)), prec + 32);
  BigFloat e0 = hp::dist(r3i.with_prec(prec), BigComplex(r3i_0));
  BigFloat e1 = hp::dist(r3i.with_prec(prec), BigComplex(r3i_1));
  rep.add("r(3i) equals Ramanujan's radical", e0 < tol60, "distance " + sci(e0));
  rep.add("r(3i) equals the rationalized form of c", e1 < tol60, "distance " + sci(e1));
  BigFloat dm = nearest_root_distance(m, BigComplex(r3i_0), prec);
  rep.add("r(3i) is a root of m(x)", dm < tol60, "distance " + sci(dm));
  BigComplex r43 = hp::rr_r(BigComplex(bf(4, prec + 32), bf(3, prec + 32)), prec + 32);
  BigComplex zr = BigComplex::root_of_unity(1, 5, prec + 32) * r43;
  BigFloat ez = hp::dist(zr.with_prec(prec), r3i.with_prec(prec));
  rep.add("r(3i) = zeta r(4 + 3i)", ez < tol60, "distance " + sci(ez));

  BigComplex closed = r_4_3i_over_5(prec);
  BigComplex direct =
      hp::rr_r(BigComplex(BigFloat(Rational(4, 5), prec + 32), BigFloat(Rational(3, 5), prec + 32)),
               prec + 32);
  BigFloat ec = hp::dist(direct.with_prec(prec), closed);
  rep.add("r((4 + 3i)/5) equals its closed form", ec < tol60, "distance " + sci(ec));
  BigFloat dp = nearest_root_distance(r36.p, closed, prec);
  rep.add("the closed form is a root of p36", dp < tol60, "distance " + sci(dp));

  auto [F36, G36] = pipeline::build_F_G(r36.H, r36.h);
  (void)F36;
  rep.add("m(x) divides G36(x^5)", exact::divides(m, G36));

  Q5Poly m1 = from_sqrt5_poly(golden::kM1), m2 = from_sqrt5_poly(golden::kM2);
  Q5Poly m1c = m1.map([](const Q5& c) { return c.galois(2); });
  rep.add("m = m1 * conj(m1) over Q(sqrt5)", m1 * m1c == lift<5>(m));
  Q5Poly m2_sub = exact::compose_homogeneous(m2, Q5Poly{Q5(-1), Q5(0), Q5(1)},
                                             Q5Poly{Q5(0), Q5(1)}, 4);
  rep.add("m1(x) = x^4 m2(x - 1/x)", m1 == m2_sub);
  const Q5 half(Rational(1, 2));
  Q5Poly sq = Q5Poly{(Q5(27) + Q5(11) * s5()) * half, (Q5(19) + Q5(11) * s5()) * half, Q5(1)};
  Q5 phi = (Q5(1) + s5()) * half;
  Q5 phi4 = phi * phi * phi * phi;
  Q5Poly diff = sq * sq - Q5Poly{Q5(1), Q5(1)} * Q5Poly{Q5(1), Q5(1)} * (Q5(75) * phi4);
  rep.add("m2 as a difference of squares", diff == m2);
  {
    // m1(r) = 0 and m1(x) = x^4 m2(x - 1/x) put r - 1/r = -2c among the roots of m2.
    BigFloat r = r3i_0;
    BigFloat c = (bf(1, prec) - r * r) / (2L * r);
    BigComplex val = hp::eval(m2, BigComplex(-(c * 2L)));
    rep.add("-2c = r(3i) - 1/r(3i) is a root of m2", val.abs() < tol60,
            "|m2(-2c)| = " + sci(val.abs()));
  }
  return rep;
}

}  // namespace rr5::icosa
