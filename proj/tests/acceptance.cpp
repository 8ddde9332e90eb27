// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <unistd.h>

#include "oracles.hpp"
#include "rr5/cache.hpp"
#include "rr5/classdata.hpp"
#include "rr5/curve5.hpp"
#include "rr5/exact/resultant.hpp"
#include "rr5/golden.hpp"
#include "rr5/hp/modular.hpp"
#include "rr5/hp/roots.hpp"
#include "rr5/icosa.hpp"
#include "rr5/pipeline.hpp"

using namespace rr5;
using exact::QPoly;
using exact::Rational;
using hp::BigComplex;
using hp::BigFloat;
using hp::prec_t;
using pipeline::PipelineResult;

namespace {

// Collects failures for one criterion; the first few are echoed.
struct Tally {
  int checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void expect(const Report& r, const std::string& prefix = {}) {
    if (r.checks.empty()) expect(false, prefix + "empty report");
    for (const auto& c : r.checks) expect(c.ok, prefix + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
};

std::map<long, PipelineResult> results;

const PipelineResult& result(long d) {
  auto it = results.find(d);
  if (it == results.end()) it = results.emplace(d, pipeline::run_pipeline(d)).first;
  return it->second;
}

std::string tag(long d) { return "d = " + std::to_string(d) + ": "; }

void compare_table(int table, Tally& t) {
  for (long d : golden::table_discriminants(table)) {
    const auto& row = *golden::find_row(d);
    const auto& r = result(d);
    t.expect(r.p == golden::poly(row.p), tag(d) + "p differs from the table");
    std::vector<std::pair<long, unsigned>> got;
    bool small = r.disc_p.sign == 1 && r.disc_p.cofactor == 1;
    for (const auto& [p, e] : r.disc_p.factors) {
      small = small && p.fits_slong_p();
      got.emplace_back(p.get_si(), e);
    }
    t.expect(small && got == row.disc, tag(d) + "disc(p) = " + r.disc_p.to_string());
    t.expect(r.all_checks(), tag(d) + "pipeline self-checks");
    t.expect(r.p.degree() == 4 * r.h && r.q.degree() == 16 * r.h, tag(d) + "degrees 4h, 16h");
  }
}

void reference_data(Tally& t) {
  for (long d : {24L, 36L, 51L, 64L, 91L, 99L}) {
    auto cd = classdata::reduced_forms(d);
    t.expect(classdata::class_poly(cd, classdata::default_policy(cd)) ==
                 golden::poly(golden::class_polys().at(d)),
             tag(d) + "class polynomial");
  }
  for (const auto& [d, text] : golden::r_polys()) t.expect(result(d).R == golden::poly(text), tag(d) + "R_d");
  for (long d : {11L, 16L, 19L})
    t.expect(result(d).Q == golden::poly(golden::q_polys().at(d)), tag(d) + "Q_d");
  auto [F19, G19] = pipeline::build_F_G(result(19).H, 1);
  t.expect(F19 == golden::poly(golden::kF19), "F19");
  auto [F4, G4] = pipeline::build_F_G(golden::poly(golden::class_polys().at(4)), 1);
  t.expect(F4 == golden::poly(golden::kF4), "F4");
  QPoly G4_ref(1L);
  for (const auto& f : golden::kG4Factors) G4_ref *= exact::pow(golden::poly(f), 2);
  t.expect(G4 == G4_ref, "G4(x^5)");
  t.expect(result(19).q == golden::poly(golden::kQ19), "q19");
}

void identity_suite(Tally& t) {
  t.expect(curve5::weierstrass_identities());
  t.expect(curve5::tau_and_isogeny_checks());
  t.expect(curve5::det_D_identity());
  t.expect(icosa::verify_f5_invariance());
  using icosa::Map;
  Map s2 = icosa::S() * icosa::S(), s3 = s2 * icosa::S();
  t.expect((icosa::T() * s2 * icosa::T() * s3 * icosa::T() * s2).same_map(icosa::U()), "U = T S^2 T S^3 T S^2");
  t.expect(curve5::torsion_x_identity(0), "psi5(X(u), b(u)) = 0");
  for (long d : golden::table_discriminants(0)) {
    const auto& r = result(d);
    t.expect(pipeline::verify_R_symmetry(r.R, r.h), tag(d) + "R invariant under (-11z+4)/(z+11)");
    t.expect(pipeline::verify_T_invariance(r.p, r.h), tag(d) + "p invariant under T");
  }
}

void g60_suite(Tally& t) {
  auto g = icosa::generate_g60();
  t.expect(g.elements.size() == 60, "order 60");
  t.expect(icosa::group_structure(g));
  for (long d : {11L, 16L, 19L}) {
    const auto& r = result(d);
    auto orbit = icosa::orbit_and_stabilizer(r.p, g, pipeline::build_F_G(r.H, r.h).second);
    t.expect(orbit.report, tag(d));
    t.expect(icosa::locate_r_minus_inverse(orbit, d), tag(d));
  }
}

void c5_suite(Tally& t) {
  for (long d : golden::table_discriminants(0)) {
    auto c5 = curve5::verify_C5_solution(d, result(d).p, 512);
    t.expect(c5.report, tag(d));
    t.expect(c5.j >= 1 && c5.j <= 4, tag(d) + "unique j in 1..4");
  }
}

bool close(const BigComplex& a, const BigComplex& b, prec_t prec) {
  BigFloat scale = a.abs();
  if (scale < BigFloat(1L, prec)) scale = BigFloat(1L, prec);
  return hp::dist(a, b) < ldexp(scale, -static_cast<long>(prec) + 32);
}

QPoly random_poly(std::mt19937_64& rng, int min_deg, int max_deg, long range) {
  std::uniform_int_distribution<int> deg(min_deg, max_deg);
  std::uniform_int_distribution<long> coef(-range, range);
  std::vector<Rational> v(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& c : v) c = coef(rng);
  if (v.back() == 0) v.back() = 1;
  return QPoly(std::move(v));
}

void property_suites(Tally& t) {
  const prec_t P = 256;
  std::mt19937_64 rng(0x5eed);

  int rebuilt = 0;
  while (rebuilt < 50) {
    QPoly p = random_poly(rng, 1, 20, 100);
    p = p + QPoly::monomial(Rational(1), static_cast<std::size_t>(p.degree() + 1));  // monic, as reconstruction assumes
    if (p.degree() < 1 || !exact::is_squarefree(p)) continue;
    ++rebuilt;
    t.expect(hp::reconstruct_int_poly(hp::poly_complex_roots(p, P), P) == p,
             "reconstruction round trip of " + exact::to_string(p));
  }

  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.3, 3.0);
  std::vector<BigComplex> taus;
  for (int i = 0; i < 20; ++i) {
    BigComplex tau(BigFloat(re(rng), P), BigFloat(im(rng), P));
    taus.push_back(tau);
    const std::string at = "tau #" + std::to_string(i) + ": ";
    t.expect(close(hp::eta(tau + 1L, P), BigComplex::root_of_unity(1, 24, P) * hp::eta(tau, P), P),
             at + "eta(tau+1)");
    t.expect(close(hp::eta(-(BigComplex(1L, P) / tau), P), sqrt(tau / BigComplex::i(P)) * hp::eta(tau, P), P),
             at + "eta(-1/tau)");
    t.expect(close(hp::rr_r(tau + 1L, P), BigComplex::root_of_unity(1, 5, P) * hp::rr_r(tau, P), P),
             at + "r(tau+1)");
    t.expect(close(hp::j_weber(tau, P), hp::j_icosahedral(tau, P), P), at + "j two ways");
  }
  t.expect(curve5::verify_r_transformations(taus, P), "random tau: ");

  int pairs = 0;
  while (pairs < 100) {
    QPoly p = random_poly(rng, 1, 8, 20), q = random_poly(rng, 1, 8, 20);
    if (!exact::is_squarefree(p) || !exact::is_squarefree(q)) continue;
    ++pairs;
    Rational res = exact::resultant(p, q);
    BigComplex approx = oracle::resultant_by_roots(p, q, P);
    t.expect(close(approx, BigComplex(BigFloat(res, P)), P), "Res by roots, pair " + std::to_string(pairs));
    if (p.degree() >= 2) {
      // disc(p) = (-1)^(n(n-1)/2) Res(p, p') / lc(p)
      const int n = p.degree();
      BigComplex by_roots = oracle::resultant_by_roots(p, p.derivative(), P);
      by_roots = by_roots / BigComplex(BigFloat(p.leading(), P));
      if ((n * (n - 1) / 2) % 2) by_roots = -by_roots;
      t.expect(close(by_roots, BigComplex(BigFloat(exact::discriminant(p), P)), P),
               "disc by roots, pair " + std::to_string(pairs));
    }
  }

  auto dir = std::filesystem::temp_directory_path() / ("rr5-acceptance-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  cache::Cache c(dir);
  for (const auto& [d, r] : results) {
    t.expect(cache::same(cache::parse(cache::render(r)), r), tag(d) + "text round trip");
    c.store(r);
    auto back = c.load(d);
    t.expect(back && cache::same(*back, r), tag(d) + "file round trip");
  }
  t.expect(results.size() == golden::table_discriminants(0).size(), "cache covers every produced entry");
  std::filesystem::remove_all(dir);
}

bool run(int n, const std::string& name, double limit_s, const std::function<void(Tally&)>& body) {
  Tally t;
  auto start = std::chrono::steady_clock::now();
  try {
    body(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0) t.expect(secs < limit_s, "runtime over " + std::to_string(limit_s) + " s");
  const bool ok = t.failures.empty() && t.checks > 0;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.1f s", secs);
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << name << " [" << t.checks
            << " checks, " << timing << "]\n";
  for (std::size_t i = 0; i < t.failures.size() && i < 10; ++i) std::cout << "    " << t.failures[i] << "\n";
  std::cout.flush();
  return ok;
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "p_d and disc(p_d) for d < 100", 15 * 60, [](Tally& t) { compare_table(1, t); });
  ok &= run(2, "p_d and disc(p_d) for d > 100", 60 * 60, [](Tally& t) { compare_table(2, t); });
  ok &= run(3, "intermediate polynomials", 0, reference_data);
  ok &= run(4, "exact identity suite", 5 * 60, identity_suite);
  ok &= run(5, "icosahedral group, orbits and stabilizers", 10 * 60, g60_suite);
  ok &= run(6, "d = 4 cyclotomic corpus", 0, [](Tally& t) { t.expect(icosa::verify_d4_corpus()); });
  ok &= run(7, "quintic curve solutions at 512 bits", 0, c5_suite);
  ok &= run(8, "worked examples to 1e-60", 0,
            [](Tally& t) { t.expect(icosa::verify_radical_examples(result(19), result(36))); });
  ok &= run(9, "property suites", 0, property_suites);
  std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << "\n";
  return ok ? 0 : 1;
}
