#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <vector>

#include "rr5/exact/intpoly.hpp"
#include "rr5/hp/bigfloat.hpp"

namespace oracle {

using rr5::hp::BigComplex;
using rr5::hp::BigFloat;
using rr5::hp::prec_t;

/// Durand-Kerner (Weierstrass) iteration on the monic normalization of p.
inline std::vector<BigComplex> durand_kerner(const rr5::exact::QPoly& p, prec_t prec) {
  const int n = p.degree();
  std::vector<BigComplex> c;
  for (int i = 0; i <= n; ++i)
    c.emplace_back(BigFloat(rr5::exact::Rational(p[i] / p.leading()), prec));
  auto eval = [&](const BigComplex& z) {
    BigComplex acc(prec);
    for (int i = n; i >= 0; --i) acc = acc * z + c[i];
    return acc;
  };
  std::vector<BigComplex> z;
  BigComplex seed(0.4, 0.9, prec), cur(1L, prec);
  for (int i = 0; i < n; ++i) {
    z.push_back(cur);
    cur *= seed;
  }
  BigFloat tol = rr5::hp::pow2(-static_cast<long>(prec) + 16, prec);
  for (int iter = 0; iter < 5000; ++iter) {
    BigFloat worst(prec);
    for (int k = 0; k < n; ++k) {
      BigComplex den(1L, prec);
      for (int j = 0; j < n; ++j)
        if (j != k) den *= (z[k] - z[j]);
      BigComplex step = eval(z[k]) / den;
      z[k] -= step;
      BigFloat s = step.abs();
      if (s > worst) worst = s;
    }
    if (worst < tol) break;
  }
  return z;
}

/// Res(p, q) = lc(p)^deg q lc(q)^deg p prod (a_i - b_j) from numerical roots.
inline BigComplex resultant_by_roots(const rr5::exact::QPoly& p, const rr5::exact::QPoly& q,
                                     prec_t prec) {
  BigComplex r(BigFloat(rr5::exact::ipow(p.leading(), q.degree()) *
                            rr5::exact::ipow(q.leading(), p.degree()),
                        prec));
  if (q.degree() == 0) return r;
  if (p.degree() == 0) return r;
  auto a = durand_kerner(p, prec), b = durand_kerner(q, prec);
  for (const auto& x : a)
    for (const auto& y : b) r *= (x - y);
  return r;
}

}  // namespace oracle
