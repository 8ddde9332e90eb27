#include <doctest.h>

#include "rr5/golden.hpp"
#include "rr5/icosa.hpp"

using namespace rr5;
using namespace rr5::icosa;
using exact::qpoly;

namespace {

void require_all(const Report& rep) {
  for (const auto& c : rep.checks) {
    INFO(c.name << "  " << c.detail);
    CHECK(c.ok);
  }
  CHECK(rep.ok());
}

const G60& group() {
  static const G60 g = generate_g60();
  return g;
}

}  // namespace

TEST_CASE("icosahedral group") {
  const G60& g = group();
  CHECK(g.elements.size() == 60);
  require_all(group_structure(g));
  // Closure: products of any two elements stay inside.
  for (std::size_t i = 0; i < g.elements.size(); i += 7)
    for (std::size_t j = 0; j < g.elements.size(); j += 5)
      CHECK(g.contains(g.elements[i] * g.elements[j]));
  CHECK_FALSE(g.contains(Map(Q5(1), Q5(1), Q5(0), Q5(1))));
}

TEST_CASE("f5 invariance") { require_all(verify_f5_invariance()); }

TEST_CASE("orbits of p_d") {
  for (long d : {11L, 16L, 19L}) {
    INFO("d = " << d);
    auto r = pipeline::run_pipeline(d);
    auto G = pipeline::build_F_G(r.H, r.h).second;
    OrbitResult o = orbit_and_stabilizer(r.p, group(), G);
    require_all(o.report);
    require_all(locate_r_minus_inverse(o, d));
    require_all(verify_T_fixed_point(r.p));
    for (const auto& q : o.orbit) CHECK(q.degree() == 4 * r.h);
  }
  // A polynomial outside G_d(x^5) fails the divisibility check.
  auto r = pipeline::run_pipeline(11);
  auto G = pipeline::build_F_G(r.H, r.h).second;
  OrbitResult bad = orbit_and_stabilizer(qpoly({1, 1, 1, 1, 1}), group(), G);
  CHECK_FALSE(bad.report.ok());
}

TEST_CASE("d = 4 over Q(zeta_20)") { require_all(verify_d4_corpus()); }

TEST_CASE("worked radical examples") {
  auto r19 = pipeline::run_pipeline(19), r36 = pipeline::run_pipeline(36);
  require_all(verify_radical_examples(r19, r36));
  CHECK_THROWS_AS(verify_radical_examples(r36, r19), DomainError);
  CHECK(ramanujan_r3i(0, 256) > hp::BigFloat(0L, 256));
}
