#pragma once

// The icosahedral group G60 = <S, T> of linear fractional maps over Q(zeta_5),
// its action on the factors of G_d(x^5), invariance of f5, the d = 4 corpus
// over Q(zeta_20), and the two worked radical examples (d = 19 and d = 36).

#include <map>
#include <vector>

#include "rr5/exact/cyclo.hpp"
#include "rr5/exact/intpoly.hpp"
#include "rr5/exact/moebius.hpp"
#include "rr5/hp/bigfloat.hpp"
#include "rr5/pipeline.hpp"
#include "rr5/report.hpp"

namespace rr5::icosa {

using exact::Q5;
using exact::QPoly;
using hp::BigComplex;
using hp::BigFloat;
using hp::prec_t;

using Map = exact::Moebius<Q5>;
using Q5Poly = exact::Poly<Q5>;

Map S();   // z -> zeta z
Map T();   // z -> (-(1+sqrt5) z + 2) / (2 z + 1 + sqrt5)
Map U();   // z -> -1/z
Map T2();  // z -> (-(1-sqrt5) z + 2) / (2 z + 1 - sqrt5)

struct G60 {
  std::vector<Map> elements;  // canonical representatives, identity first

  bool contains(const Map& m) const;
  /// Number of elements of each order.
  std::map<int, int> order_census() const;
};

/// Closure of {S, T} under composition; throws IntegrityError past 60 elements.
G60 generate_g60();

/// Order and A5 census, U = T S^2 T S^3 T S^2, the Klein subgroup H = {1, T, U, T2}.
Report group_structure(const G60& g);

/// f5(z) = (1 + 228 z^5 + 494 z^10 - 228 z^15 + z^20)^3 / (z^5 (1 - 11 z^5 - z^10)^5).
exact::RatFunc<Q5> f5();

/// f5 o S = f5 and f5 o T = f5; z + 1 as a negative control.
Report verify_f5_invariance();

struct OrbitResult {
  std::vector<Q5Poly> orbit;      // distinct normalized images of p
  std::vector<Map> stabilizer;
  Report report;
};

/// Orbit of p under G60 (projectively normalized pullbacks), divisibility of
/// every orbit element into gd5 = G_d(x^5) over Q(zeta_5), and the stabilizer.
OrbitResult orbit_and_stabilizer(const QPoly& p, const G60& g, const QPoly& gd5);

/// z1 = (-1 - sqrt5 + sqrt(10 + 2 sqrt5))/2 is fixed by T and |p(z1)| > 2^-32.
Report verify_T_fixed_point(const QPoly& p, prec_t prec = 256);

/// For d = 19 style data: r(-1/w) is a root of exactly one orbit element.
Report locate_r_minus_inverse(const OrbitResult& orbit, long d, prec_t prec = 256);

/// Exact checks in Q(zeta_20) for d = 4.
Report verify_d4_corpus();

/// Radical values for d = 19 and d = 36.
/// e^(pi i/5) r((9 + sqrt -19)/2) as the nested real radical.
BigFloat example1_alpha(prec_t prec);
/// Ramanujan's r(3i) = sqrt(c^2 + 1) - c; form 0 is the original expression
/// for 2c, form 1 the rationalized one with 60^(1/4).
BigFloat ramanujan_r3i(int form, prec_t prec);
/// The closed form of r((4 + 3i)/5) with omega = (-1 + i sqrt3)/2.
BigComplex r_4_3i_over_5(prec_t prec);

/// Both worked examples; r19 and r36 are pipeline results for d = 19 and 36.
Report verify_radical_examples(const pipeline::PipelineResult& r19,
                             const pipeline::PipelineResult& r36, prec_t prec = 320);

}  // namespace rr5::icosa
