#pragma once

// From a discriminant -d to the minimal polynomial p_d of r(w/5): class
// polynomial H, the polynomials R (of z = -11 - x1^3) and S (of s = eta - 1/eta),
// Q(X) = X^2h R(X - 1/X), the split Q(x^5) = p q, and exact certificates.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rr5/classdata.hpp"
#include "rr5/exact/intpoly.hpp"
#include "rr5/hp/bigfloat.hpp"
#include "rr5/hp/roots.hpp"

namespace rr5::pipeline {

using classdata::HeegnerArg;
using exact::Integer;
using exact::QPoly;
using hp::BigComplex;
using hp::prec_t;

/// disc(p) after trial division by primes <= bound.
struct DiscReport {
  int sign = 1;
  std::vector<std::pair<Integer, unsigned>> factors;
  Integer cofactor = 1;  // unfactored part, 1 when fully factored
  /// Every prime q > 5 dividing d occurs to the exact power 2h.
  bool exponent_law = false;
  /// All prime factors are <= d and nothing is left over.
  bool small_primes = false;

  Integer value() const;
  std::string to_string() const;
};

struct PipelineResult {
  long d = 0, f = 0, h = 0, v = 0;
  bool v_relaxed = false;
  QPoly H, R, S, Q, p, q;
  bool F_check = false;     // Q divides F_d
  bool G_check = false;     // p divides G_d(x^5)
  bool div_check = false;   // Q(x^5) = p q
  bool R_sym_check = false;
  bool T_check = false;
  bool sym_check = false;   // x^4h p(-1/x) = p(x), x^16h q(-1/x) = q(x), p(0) = +-1
  bool j_check = false;     // j5(b), j55(b) are roots of H at every conjugate
  bool zs_check = false;    // z = s^5 + 5 s^3 + 5 s at every conjugate
  std::optional<bool> irreducible;  // subset-search proxy, only for h <= 3
  DiscReport disc_p;
  prec_t precision_used = 0;

  bool all_checks() const;
};

/// -11 - (eta(w/5)/eta(w))^6 at each argument, followed by the complex conjugates.
std::vector<BigComplex> compute_z_values(const std::vector<HeegnerArg>& args, prec_t prec);

/// -1 - eta(w/25)/eta(w) at each argument, followed by the complex conjugates.
std::vector<BigComplex> compute_s_values(const std::vector<HeegnerArg>& args, prec_t prec);

/// Level-25 arguments for an admissible d > 4.
std::vector<HeegnerArg> heegner_args(long d);

QPoly build_R(long d, const hp::PrecisionPolicy& policy);
QPoly build_S(long d, const hp::PrecisionPolicy& policy);

/// X^deg R * R(X - 1/X); R needs even degree and a nonzero constant term.
QPoly build_Q(const QPoly& R);

/// p = x^2h S(x - 1/x) and q = Q(x^5) / p; throws IntegrityError if p does not divide.
std::pair<QPoly, QPoly> build_p_q(const QPoly& S, const QPoly& Q);

/// F_d(x) = x^5h (1 - 11x - x^2)^h H(j5(x)) and G_d(x^5) = the analogous
/// clearing of H(j55(x^5)), of degrees 12h and 60h.
std::pair<QPoly, QPoly> build_F_G(const QPoly& H, long h);

/// (z + 11)^2h R((-11 z + 4)/(z + 11)) = 5^3h R(z).
bool verify_R_symmetry(const QPoly& R, long h);

/// (z + (1+sqrt5)/2)^4h p(T z) = ((5+sqrt5)/2)^2h p(z) over Q(sqrt 5),
/// T(z) = (-(1+sqrt5) z + 2) / (2 z + 1 + sqrt5).
bool verify_T_invariance(const QPoly& p, long h);

DiscReport disc_conjecture_check(const QPoly& p, long d, long h);

/// True when no proper subset of the roots of p expands to an integral
/// polynomial (p monic integral, degree <= 12).
bool irreducibility_proxy(const QPoly& p, prec_t prec = 256);

/// Everything above for one discriminant. Throws AdmissibilityError for
/// inadmissible d, DomainError for d = 4, IntegrityError naming the failed
/// stage, PrecisionExhausted when the policy ceiling is hit.
PipelineResult run_pipeline(long d, const hp::PrecisionPolicy& policy);
PipelineResult run_pipeline(long d);

/// Default policy for d: initial bits from d and h(-d).
hp::PrecisionPolicy policy_for(long d, prec_t max_bits = prec_t(1) << 20);

}  // namespace rr5::pipeline
