#include "rr5/pipeline.hpp"

#include <algorithm>
#include <tuple>

#include "rr5/errors.hpp"
#include "rr5/exact/cyclo.hpp"
#include "rr5/exact/moebius.hpp"
#include "rr5/exact/resultant.hpp"
#include "rr5/hp/modular.hpp"

namespace rr5::pipeline {

using exact::Q5;
using exact::qpoly;
using exact::Rational;
using hp::BigFloat;

namespace {

void require_pipeline_d(long d) {
  if (!classdata::is_discriminant(d))
    throw DomainError("-" + std::to_string(d) + " is not a discriminant");
  if (!classdata::is_admissible(d))
    throw AdmissibilityError("(-" + std::to_string(d) + "/5) != +1");
  if (d == 4)
    throw DomainError("d = 4 has repeated factors; use the d = 4 corpus instead");
}

std::vector<BigComplex> with_conjugates(std::vector<BigComplex> v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) v.push_back(v[i].conj());
  return v;
}

prec_t working_bits(const std::vector<HeegnerArg>& args, prec_t prec) {
  prec_t guard = 0;
  for (const auto& a : args) {
    BigComplex w = a.w(64);
    guard = std::max(guard, hp::series_guard_bits(BigComplex(w.re() / 25L, w.im() / 25L)));
  }
  return prec + guard;
}

/// x^n p(-1/x).
QPoly reflect(const QPoly& p, int n) {
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= p.degree(); ++k) {
    Rational c = p[static_cast<std::size_t>(k)];
    v[static_cast<std::size_t>(n - k)] = (k % 2) ? Rational(-c) : c;
  }
  return QPoly(std::move(v));
}

bool small_relative(const BigComplex& value, const BigFloat& scale, prec_t prec) {
  BigFloat tol = hp::pow2(-static_cast<long>(prec / 2), 64) * (scale + BigFloat(1L, scale.prec()));
  return value.abs() < tol;
}

/// |H(x)| against sum |H_i| |x|^i.
bool is_root(const QPoly& H, const BigComplex& x, prec_t prec) {
  BigComplex v = hp::eval(H, x);
  BigFloat scale(0L, x.prec()), ax = x.abs(), pw(1L, x.prec());
  for (const auto& c : H.coeffs()) {
    scale += hp::abs(BigFloat(c, x.prec())) * pw;
    pw *= ax;
  }
  return small_relative(v, scale, prec);
}

bool check_j_roots(const QPoly& H, const std::vector<BigComplex>& zs, prec_t prec) {
  for (const auto& z : zs) {
    BigComplex z11 = z + 11L;
    BigComplex a = z * z + z * 12L + 16L, b = z * z - z * 228L + 496L;
    BigComplex j5 = -(a * a * a) / z11;
    BigComplex j55 = -(b * b * b) / hp::pow(z11, 5);
    if (!is_root(H, j5, prec) || !is_root(H, j55, prec)) return false;
  }
  return true;
}

bool check_z_s(const std::vector<BigComplex>& zs, const std::vector<BigComplex>& ss,
               prec_t prec) {
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const BigComplex& s = ss[i];
    BigComplex s2 = s * s;
    BigComplex rhs = s * (s2 * s2 + s2 * 5L + 5L);
    if (!small_relative(zs[i] - rhs, zs[i].abs(), prec)) return false;
  }
  return true;
}

}  // namespace

Integer DiscReport::value() const {
  Integer v = sign;
  for (const auto& [p, e] : factors) v *= exact::ipow(p, e);
  return v * cofactor;
}

std::string DiscReport::to_string() const {
  exact::Factorization f;
  f.sign = sign;
  f.factors = factors;
  if (cofactor != 1) f.factors.emplace_back(cofactor, 1);
  return f.to_string();
}

bool PipelineResult::all_checks() const {
  return F_check && G_check && div_check && R_sym_check && T_check && sym_check && j_check &&
         zs_check && disc_p.exponent_law && disc_p.small_primes && irreducible.value_or(true);
}

std::vector<BigComplex> compute_z_values(const std::vector<HeegnerArg>& args, prec_t prec) {
  prec_t wp = working_bits(args, prec);
  std::vector<BigComplex> out;
  for (const auto& a : args) {
    BigComplex x = hp::eta_quotient(a.w(wp), 5, wp);
    BigComplex x3 = hp::pow(x, 6);
    out.push_back((-(x3 + 11L)).with_prec(prec));
  }
  return with_conjugates(std::move(out));
}

std::vector<BigComplex> compute_s_values(const std::vector<HeegnerArg>& args, prec_t prec) {
  prec_t wp = working_bits(args, prec);
  std::vector<BigComplex> out;
  for (const auto& a : args) {
    BigComplex y = hp::eta_quotient(a.w(wp), 25, wp);
    out.push_back((-(y + 1L)).with_prec(prec));
  }
  return with_conjugates(std::move(out));
}

std::vector<HeegnerArg> heegner_args(long d) {
  require_pipeline_d(d);
  auto cd = classdata::reduced_forms(d);
  long v = classdata::choose_v(d, cd.f).v;
  return classdata::n_system(cd, v, 25);
}

hp::PrecisionPolicy policy_for(long d, prec_t max_bits) {
  auto cd = classdata::reduced_forms(d);
  return classdata::default_policy(cd, max_bits);
}

QPoly build_R(long d, const hp::PrecisionPolicy& policy) {
  auto args = heegner_args(d);
  return policy.run([&](prec_t bits) {
    return hp::reconstruct_int_poly(compute_z_values(args, bits), bits);
  });
}

QPoly build_S(long d, const hp::PrecisionPolicy& policy) {
  auto args = heegner_args(d);
  return policy.run([&](prec_t bits) {
    return hp::reconstruct_int_poly(compute_s_values(args, bits), bits);
  });
}

QPoly build_Q(const QPoly& R) {
  if (R.is_zero() || R.degree() % 2 != 0)
    throw DomainError("R must have even degree");
  if (exact::is_zero(R[0])) throw DomainError("R must have a nonzero constant term");
  return exact::compose_homogeneous(R, qpoly({-1, 0, 1}), qpoly({0, 1}),
                                    static_cast<std::size_t>(R.degree()));
}

std::pair<QPoly, QPoly> build_p_q(const QPoly& S, const QPoly& Q) {
  if (S.is_zero() || Q.degree() != 2 * S.degree())
    throw DomainError("deg Q must be twice deg S");
  QPoly p = exact::compose_homogeneous(S, qpoly({-1, 0, 1}), qpoly({0, 1}),
                                       static_cast<std::size_t>(S.degree()));
  auto q = exact::exact_quotient(Q.inflate(5), p);
  if (!q) throw IntegrityError("p_q", "p does not divide Q(x^5)");
  return {p, *q};
}

std::pair<QPoly, QPoly> build_F_G(const QPoly& H, long h) {
  if (H.degree() != h) throw DomainError("H must have degree h");
  QPoly j5_num = exact::pow(qpoly({1, -12, 14, 12, 1}), 3);
  QPoly j5_den = QPoly::monomial(1, 5) * qpoly({1, -11, -1});
  QPoly j55_num = exact::pow(qpoly({1, 228, 494, -228, 1}), 3);
  QPoly j55_den = qpoly({0, 1}) * exact::pow(qpoly({1, -11, -1}), 5);
  auto hh = static_cast<std::size_t>(h);
  QPoly F = exact::compose_homogeneous(H, j5_num, j5_den, hh);
  QPoly G = exact::compose_homogeneous(H, j55_num, j55_den, hh).inflate(5);
  return {F, G};
}

bool verify_R_symmetry(const QPoly& R, long h) {
  if (R.is_zero() || R.degree() != 2 * h) return false;
  exact::Moebius<Rational> V(-11, 4, 1, 11);
  return exact::pullback(V, R) == R * exact::ipow(Rational(5), static_cast<unsigned long>(3 * h));
}

bool verify_T_invariance(const QPoly& p, long h) {
  if (p.is_zero() || p.degree() != 4 * h) return false;
  Q5 s5 = Q5::sqrt5();
  exact::Moebius<Q5> T(-(Q5(1) + s5), Q5(2), Q5(2), Q5(1) + s5);
  // pullback carries (2 z + 1 + sqrt5)^4h = 2^4h (z + (1+sqrt5)/2)^4h
  Q5 c = (Q5(5) + s5) * Q5(Rational(1, 2));
  Q5 scale = Q5(exact::ipow(Rational(2), static_cast<unsigned long>(4 * h)));
  for (long i = 0; i < 2 * h; ++i) scale *= c;
  auto lifted = exact::lift<5>(p);
  return exact::pullback(T, lifted) == lifted * scale;
}

DiscReport disc_conjecture_check(const QPoly& p, long d, long h) {
  DiscReport r;
  Rational disc = exact::discriminant(p);
  if (!exact::is_integer(disc) || disc == 0) {
    r.cofactor = 0;
    return r;
  }
  unsigned long bound = static_cast<unsigned long>(std::max(d, 10000L));
  auto f = exact::factor_integer(Integer(disc.get_num()), bound);
  r.sign = f.sign;
  for (const auto& [q, e] : f.factors) {
    if (q <= Integer(bound)) r.factors.emplace_back(q, e);
    else r.cofactor *= exact::ipow(q, e);
  }
  r.small_primes = r.cofactor == 1;
  for (const auto& [q, e] : r.factors)
    if (q > d) r.small_primes = false;
  r.exponent_law = true;
  for (long q = 7; q <= d; ++q) {
    if (d % q) continue;
    bool prime = true;
    for (long t = 2; t * t <= q; ++t)
      if (q % t == 0) prime = false;
    if (!prime) continue;
    unsigned e = 0;
    for (const auto& [pr, ex] : r.factors)
      if (pr == q) e = ex;
    if (e != static_cast<unsigned>(2 * h)) r.exponent_law = false;
  }
  return r;
}

bool irreducibility_proxy(const QPoly& p, prec_t prec) {
  const int n = p.degree();
  if (n <= 1) return true;
  if (n > 12) throw DomainError("subset search limited to degree 12");
  auto roots = hp::poly_complex_roots(p, prec);
  // a factor and its cofactor are both proper; subsets without root 0 suffice
  for (unsigned mask = 2; mask < (1u << n); mask += 2) {
    std::vector<BigComplex> sub;
    BigComplex trace(prec);
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        sub.push_back(roots[static_cast<std::size_t>(i)]);
        trace += roots[static_cast<std::size_t>(i)];
      }
    if (!hp::near_integer(trace)) continue;
    try {
      hp::reconstruct_int_poly(sub, prec);
      return false;
    } catch (const ReconstructionError&) {
    }
  }
  return true;
}

PipelineResult run_pipeline(long d) { return run_pipeline(d, policy_for(d)); }

PipelineResult run_pipeline(long d, const hp::PrecisionPolicy& policy) {
  require_pipeline_d(d);
  PipelineResult r;
  auto cd = classdata::reduced_forms(d);
  auto vc = classdata::choose_v(d, cd.f);
  r.d = d;
  r.f = cd.f;
  r.h = cd.h;
  r.v = vc.v;
  r.v_relaxed = vc.relaxed;
  auto args = classdata::n_system(cd, vc.v, 25);
  r.H = classdata::class_poly(cd, policy);

  struct Analytic {
    QPoly R, S;
    bool j_ok;
    prec_t bits;
  };
  Analytic an = policy.run([&](prec_t bits) {
    auto zs = compute_z_values(args, bits);
    auto ss = compute_s_values(args, bits);
    if (!check_z_s(zs, ss, bits))
      throw PrecisionError("z and s values disagree at " + std::to_string(bits) + " bits");
    QPoly R = hp::reconstruct_int_poly(zs, bits);
    QPoly S = hp::reconstruct_int_poly(ss, bits);
    return Analytic{R, S, check_j_roots(r.H, zs, bits), bits};
  });
  r.R = an.R;
  r.S = an.S;
  r.zs_check = true;
  r.j_check = an.j_ok;
  r.precision_used = an.bits;
  if (!r.j_check) throw IntegrityError("j", "j5(b) or j55(b) is not a root of H");

  r.Q = build_Q(r.R);
  std::tie(r.p, r.q) = build_p_q(r.S, r.Q);
  r.div_check = r.Q.inflate(5) == r.p * r.q;

  const int n = 4 * static_cast<int>(r.h);
  r.sym_check = r.p.degree() == n && r.q.degree() == 4 * n && reflect(r.p, n) == r.p &&
                reflect(r.q, 4 * n) == r.q && abs(r.p[0]) == 1 && r.p.leading() == 1;
  if (!r.sym_check) throw IntegrityError("symmetry", "p or q lacks the x -> -1/x symmetry");

  auto [F, G] = build_F_G(r.H, r.h);
  r.F_check = exact::divides(r.Q, F);
  if (!r.F_check) throw IntegrityError("F", "Q does not divide F_d");
  r.G_check = exact::divides(r.p, G);
  if (!r.G_check) throw IntegrityError("G", "p does not divide G_d(x^5)");

  r.R_sym_check = verify_R_symmetry(r.R, r.h);
  if (!r.R_sym_check) throw IntegrityError("R_symmetry", "R is not invariant under (-11z+4)/(z+11)");
  r.T_check = verify_T_invariance(r.p, r.h);
  if (!r.T_check) throw IntegrityError("T", "p is not invariant under T");

  r.disc_p = disc_conjecture_check(r.p, d, r.h);
  if (r.h <= 3) r.irreducible = irreducibility_proxy(r.p);
  return r;
}

}  // namespace rr5::pipeline
