#pragma once

// Polynomial root finding, product expansion and integer reconstruction.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rr5/errors.hpp"
#include "rr5/exact/cyclo.hpp"
#include "rr5/exact/intpoly.hpp"
#include "rr5/hp/bigfloat.hpp"

namespace rr5::hp {

using exact::QPoly;

/// Working-precision schedule: start at initial_bits, double on PrecisionError up to max_bits.
struct PrecisionPolicy {
  prec_t initial_bits = 256;
  prec_t max_bits = prec_t(1) << 20;

  /// ceil(4.6 sqrt(d) h) + 96 h + 128 bits.
  static PrecisionPolicy for_class(long d, long h, prec_t max_bits = prec_t(1) << 20);

  /// Calls f(bits) with increasing precision until it stops throwing
  /// PrecisionError; throws PrecisionExhausted past max_bits.
  template <class F>
  auto run(F&& f) const -> decltype(f(prec_t{})) {
    if (initial_bits < 128 || max_bits < initial_bits)
      throw DomainError("invalid precision policy");
    std::string last;
    for (prec_t bits = initial_bits; bits <= max_bits; bits *= 2) {
      try {
        return f(bits);
      } catch (const PrecisionExhausted&) {
        throw;
      } catch (const PrecisionError& e) {
        last = e.what();
      }
    }
    throw PrecisionExhausted("precision ceiling of " + std::to_string(max_bits) +
                             " bits reached: " + last);
  }
};

/// Coefficients as complex numbers at the given precision, lowest degree first.
std::vector<BigComplex> to_complex(const QPoly& p, prec_t prec);

BigComplex eval(const std::vector<BigComplex>& coeffs, const BigComplex& z);
BigComplex eval(const QPoly& p, const BigComplex& z);

/// Numeric image of a cyclotomic element under zeta_N -> exp(2 pi i / N).
template <int N>
BigComplex embed(const exact::Cyclo<N>& x, prec_t prec) {
  BigComplex z = BigComplex::root_of_unity(1, N, prec + 16), acc(prec + 16), zk(1L, prec + 16);
  for (int i = 0; i < exact::Cyclo<N>::kDegree; ++i) {
    if (sgn(x[i]) != 0) acc += zk * BigFloat(x[i], prec + 16);
    zk *= z;
  }
  return acc.with_prec(prec);
}

template <int N>
BigComplex eval(const exact::Poly<exact::Cyclo<N>>& p, const BigComplex& z) {
  BigComplex acc(z.prec());
  for (int i = p.degree(); i >= 0; --i) acc = acc * z + embed(p[static_cast<std::size_t>(i)], z.prec());
  return acc;
}

/// All complex roots of a squarefree polynomial (Aberth iteration, then
/// Newton refinement), sorted by (re, im) after rounding to 2^(-prec/4).
/// Throws DomainError if p is not squarefree or has degree < 1, PrecisionError
/// if iteration fails to converge or a residual check fails.
std::vector<BigComplex> poly_complex_roots(const QPoly& p, prec_t prec);

/// Same for complex coefficients; no squarefree check.
std::vector<BigComplex> complex_poly_roots(const std::vector<BigComplex>& coeffs, prec_t prec);

void sort_roots(std::vector<BigComplex>& roots, prec_t prec);

/// Coefficients of prod (x - r_i), lowest degree first.
std::vector<BigComplex> expand_roots(const std::vector<BigComplex>& roots);

/// prod (x - r_i) rounded to an integral polynomial; throws ReconstructionError
/// if any coefficient is farther than 2^-32 from a (real) integer.
QPoly reconstruct_int_poly(const std::vector<BigComplex>& roots, prec_t prec);

/// Nearest integer to a complex number that is within 2^-32 of one, else nullopt.
std::optional<Integer> near_integer(const BigComplex& z);

}  // namespace rr5::hp
