#include "rr5/hp/roots.hpp"

#include <algorithm>
#include <cmath>

namespace rr5::hp {

PrecisionPolicy PrecisionPolicy::for_class(long d, long h, prec_t max_bits) {
  PrecisionPolicy p;
  p.initial_bits = static_cast<prec_t>(std::ceil(4.6 * std::sqrt(static_cast<double>(d)) * h)) +
                   96 * h + 128;
  p.max_bits = std::max(max_bits, p.initial_bits);
  return p;
}

std::vector<BigComplex> to_complex(const QPoly& p, prec_t prec) {
  std::vector<BigComplex> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.emplace_back(BigFloat(c, prec));
  return out;
}

BigComplex eval(const std::vector<BigComplex>& coeffs, const BigComplex& z) {
  BigComplex acc(z.prec());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

BigComplex eval(const QPoly& p, const BigComplex& z) { return eval(to_complex(p, z.prec()), z); }

namespace {

/// p(z) and p'(z) together.
std::pair<BigComplex, BigComplex> eval_with_derivative(const std::vector<BigComplex>& c,
                                                       const BigComplex& z) {
  BigComplex p(z.prec()), dp(z.prec());
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

std::vector<BigComplex> rounded(const std::vector<BigComplex>& c, prec_t prec) {
  std::vector<BigComplex> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(x.with_prec(prec));
  return out;
}

/// Upper bound on root moduli: 2 max |a_{n-k} / a_n|^(1/k).
double root_bound(const std::vector<BigComplex>& c) {
  const std::size_t n = c.size() - 1;
  double lead = std::log2(c[n].abs().to_double());
  double best = -1e300;
  for (std::size_t k = 1; k <= n; ++k) {
    const BigComplex& a = c[n - k];
    if (a.is_zero()) continue;
    double l = (std::log2(a.abs().to_double()) - lead) / static_cast<double>(k);
    best = std::max(best, l);
  }
  return best < -1e200 ? 1.0 : std::exp2(best + 1);
}

/// Aberth iteration at precision p; returns false when it did not settle.
bool aberth(const std::vector<BigComplex>& c, std::vector<BigComplex>& z, prec_t p) {
  const std::size_t n = z.size();
  BigFloat tol = pow2(-static_cast<long>(p) + 24, p);
  for (int iter = 0; iter < 2000; ++iter) {
    bool done = true;
    for (std::size_t k = 0; k < n; ++k) {
      auto [pv, dpv] = eval_with_derivative(c, z[k]);
      if (pv.is_zero()) continue;
      BigComplex ratio = pv / dpv;
      BigComplex s(p);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += BigComplex(1L, p) / (z[k] - z[j]);
      BigComplex w = ratio / (BigComplex(1L, p) - ratio * s);
      z[k] -= w;
      BigFloat scale = z[k].abs();
      if (scale < BigFloat(1L, p)) scale = BigFloat(1L, p);
      if (w.abs() > tol * scale) done = false;
    }
    if (done) return true;
  }
  return false;
}

}  // namespace

void sort_roots(std::vector<BigComplex>& roots, prec_t prec) {
  const long shift = static_cast<long>(prec / 4);
  std::vector<std::pair<std::pair<Integer, Integer>, std::size_t>> keys;
  keys.reserve(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i)
    keys.push_back({{ldexp(roots[i].re(), shift).round(), ldexp(roots[i].im(), shift).round()}, i});
  std::sort(keys.begin(), keys.end());
  std::vector<BigComplex> out;
  out.reserve(roots.size());
  for (const auto& k : keys) out.push_back(roots[k.second]);
  roots = std::move(out);
}

std::vector<BigComplex> complex_poly_roots(const std::vector<BigComplex>& coeffs, prec_t prec) {
  if (coeffs.size() < 2 || coeffs.back().is_zero())
    throw DomainError("root finding needs a polynomial of degree >= 1");
  const std::size_t n = coeffs.size() - 1;
  const prec_t wp = prec + 32;

  // Coarse solve, then raise the precision while polishing with Aberth steps.
  prec_t p = std::min<prec_t>(wp, 128);
  std::vector<BigComplex> c = rounded(coeffs, p);
  double radius = root_bound(c);
  std::vector<BigComplex> z;
  z.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    double t = 2 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z.emplace_back(radius * std::cos(t), radius * std::sin(t), p);
  }
  while (true) {
    if (!aberth(c, z, p)) throw PrecisionError("root iteration did not converge");
    if (p >= wp) break;
    p = std::min(wp, p * 2);
    c = rounded(coeffs, p);
    z = rounded(z, p);
  }

  // Residual relative to the size of the evaluation.
  std::vector<BigComplex> out;
  out.reserve(n);
  BigFloat norm(p);
  for (const auto& a : coeffs) norm = std::max(norm, a.abs().with_prec(p));
  for (auto& r : z) {
    BigFloat scale = norm, rk(1L, p), mod = r.abs();
    BigFloat sum(p);
    for (const auto& a : c) {
      sum += a.abs() * rk;
      rk *= mod;
    }
    scale = std::max(scale, sum);
    if (eval(c, r).abs() > ldexp(scale, -static_cast<long>(prec) / 2))
      throw PrecisionError("root residual check failed");
    out.push_back(r.with_prec(prec));
  }
  sort_roots(out, prec);
  return out;
}

std::vector<BigComplex> poly_complex_roots(const QPoly& p, prec_t prec) {
  if (p.degree() < 1) throw DomainError("root finding needs a polynomial of degree >= 1");
  if (!exact::is_squarefree(p)) throw DomainError("polynomial is not squarefree");
  return complex_poly_roots(to_complex(p, prec + 32), prec);
}

std::vector<BigComplex> expand_roots(const std::vector<BigComplex>& roots) {
  if (roots.empty()) throw DomainError("empty root list");
  const prec_t p = roots.front().prec();
  std::vector<BigComplex> c{BigComplex(1L, p)};
  for (const auto& r : roots) {
    std::vector<BigComplex> next(c.size() + 1, BigComplex(p));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * r;
    }
    c = std::move(next);
  }
  return c;
}

std::optional<Integer> near_integer(const BigComplex& z) {
  if (!z.is_finite()) return std::nullopt;
  // No fractional bits left to test once |z| nears 2^prec.
  const long headroom = static_cast<long>(z.prec()) - 40;
  if (abs(z.re()) >= pow2(headroom, 64) || abs(z.im()) >= pow2(headroom, 64)) return std::nullopt;
  Integer n = z.re().round();
  BigFloat tol = pow2(-32, 64);
  if (abs(z.re() - BigFloat(n, z.prec())) > tol || abs(z.im()) > tol) return std::nullopt;
  return n;
}

QPoly reconstruct_int_poly(const std::vector<BigComplex>& roots, prec_t prec) {
  std::vector<BigComplex> rs;
  rs.reserve(roots.size());
  for (const auto& r : roots) rs.push_back(r.with_prec(std::min(prec, r.prec())));
  std::vector<BigComplex> c = expand_roots(rs);
  std::vector<exact::Rational> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto n = near_integer(c[i]);
    if (!n)
      throw ReconstructionError("coefficient of x^" + std::to_string(i) + " is not near an integer: " +
                                c[i].to_string(25));
    out.emplace_back(*n);
  }
  return QPoly(std::move(out));
}

}  // namespace rr5::hp
