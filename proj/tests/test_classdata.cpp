#include <doctest.h>

#include <numeric>

#include "rr5/classdata.hpp"
#include "rr5/errors.hpp"
#include "rr5/exact/resultant.hpp"
#include "rr5/golden.hpp"

using namespace rr5;
using namespace rr5::classdata;
using exact::Integer;
using exact::parse_qpoly;
using exact::Rational;

namespace {

long brute_force_class_number(long d) {
  long n = 0;
  for (long a = 1; a <= d; ++a)
    for (long c = a; c <= d; ++c)
      for (long b = -a; b <= a; ++b) {
        if (b * b - 4 * a * c != -d) continue;
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        if ((b < 0) && (-b == a || a == c)) continue;
        ++n;
      }
  return n;
}

long mod(long x, long m) { return ((x % m) + m) % m; }

}  // namespace

TEST_CASE("reduced forms and class numbers") {
  CHECK(reduced_forms(24).h == 2);
  CHECK(reduced_forms(36).h == 2);
  CHECK(reduced_forms(64).h == 2);
  CHECK(reduced_forms(84).h == 4);
  CHECK(reduced_forms(96).h == 4);
  auto cd11 = reduced_forms(11);
  REQUIRE(cd11.h == 1);
  CHECK(cd11.forms[0] == QuadForm{1, 1, 3});
  CHECK(reduced_forms(16).f == 2);
  CHECK(reduced_forms(16).d_K == -4);
  CHECK(reduced_forms(99).f == 3);
  CHECK_THROWS_AS(reduced_forms(5), DomainError);
  CHECK_THROWS_AS(reduced_forms(0), DomainError);

  for (long d = 3; d <= 200; ++d) {
    if (!is_discriminant(d)) continue;
    auto cd = reduced_forms(d);
    CHECK_MESSAGE(cd.h == brute_force_class_number(d), "d = " << d);
    CHECK(-d == cd.d_K * cd.f * cd.f);
    for (const auto& q : cd.forms) {
      CHECK(q.discriminant() == -d);
      CHECK(q.is_reduced());
      CHECK(q.is_primitive());
    }
  }
}

TEST_CASE("admissibility and the choice of v") {
  CHECK(is_admissible(11));
  CHECK(is_admissible(19));
  CHECK(!is_admissible(7));
  CHECK(!is_admissible(15));
  CHECK(choose_v(19, 1).v == 9);
  CHECK(choose_v(36, 3).v == 8);
  CHECK(choose_v(11, 1).v == 17);
  auto v16 = choose_v(16, 2);
  CHECK(v16.relaxed);
  CHECK(v16.v == 22);
  CHECK(!choose_v(19, 1).relaxed);
  CHECK_THROWS_AS(choose_v(7, 1), AdmissibilityError);

  for (long d = 3; d <= 200; ++d) {
    if (!is_discriminant(d) || !is_admissible(d)) continue;
    long f = conductor(d);
    auto c = choose_v(d, f);
    CHECK((c.v * c.v + d) % 100 == 0);
    long best = 0;
    for (long v = 1; v <= c.v; ++v)
      if ((v * v + d) % 100 == 0 && std::gcd(v, f) == 1) {
        best = v;
        break;
      }
    if (!c.relaxed) CHECK(best == c.v);
    else CHECK(best == 0);
  }
}

TEST_CASE("level-N argument systems") {
  auto cd11 = reduced_forms(11);
  auto a11 = n_system(cd11, 17, 25);
  REQUIRE(a11.size() == 1);
  CHECK(a11[0].form.a == 1);
  CHECK(mod(a11[0].b_adj, 50) == mod(-17, 50));
  auto a24 = n_system(reduced_forms(24), choose_v(24, 1).v, 5);
  REQUIRE(a24.size() == 2);
  for (const auto& x : a24) CHECK(x.form.a % 5 != 0);
  CHECK_THROWS_AS(n_system(cd11, 17, 7), DomainError);

  for (long d = 3; d <= 200; ++d) {
    if (!is_discriminant(d) || !is_admissible(d)) continue;
    auto cd = reduced_forms(d);
    long v = choose_v(d, cd.f).v;
    auto args25 = n_system(cd, v, 25);
    auto args5 = n_system(cd, v, 5);
    REQUIRE(args25.size() == static_cast<std::size_t>(cd.h));
    for (std::size_t i = 0; i < args25.size(); ++i) {
      const auto& x = args25[i];
      CHECK(x.form.discriminant() == -d);
      CHECK(x.form.a % 5 != 0);
      CHECK(mod(x.b_adj - x.form.b, 2 * x.form.a) == 0);
      CHECK(mod(x.b_adj * x.b_adj + d, 4 * x.form.a) == 0);
      CHECK(mod(x.b_adj + v, 50) == 0);
      // the level-25 arguments also satisfy the level-5 conditions
      CHECK(mod(x.b_adj + v, 10) == 0);
      CHECK(mod(args5[i].b_adj + v, 10) == 0);
    }
  }
}

TEST_CASE("class polynomials") {
  for (const auto& [d, text] : golden::class_polys()) {
    auto cd = reduced_forms(d);
    CHECK_MESSAGE(class_poly(cd, default_policy(cd)) == parse_qpoly(text), "d = " << d);
  }
  auto cd84 = reduced_forms(84);
  auto H84 = class_poly(cd84, default_policy(cd84));
  CHECK(H84.degree() == 4);
  CHECK(H84.leading() == 1);
}

TEST_CASE("polynomial text parsing") {
  CHECK(parse_qpoly("x^{16}-2x^3+x") ==
        exact::QPoly::monomial(1, 16) + exact::qpoly({0, 1, 0, -2}));
  CHECK(parse_qpoly("3*x/2 - 7") == exact::QPoly{Rational(-7), Rational(3, 2)});
  CHECK(parse_qpoly("-x") == exact::qpoly({0, -1}));
  CHECK(parse_qpoly("5") == exact::qpoly({5}));
  CHECK_THROWS_AS(parse_qpoly("x^"), DomainError);
  CHECK_THROWS_AS(parse_qpoly("2y"), DomainError);
  CHECK_THROWS_AS(parse_qpoly(""), DomainError);
  CHECK(golden::poly("(x+1)^2(x-1)") == exact::qpoly_hi({1, 1, -1, -1}));
}

TEST_CASE("reference tables are self-consistent") {
  CHECK(golden::table_discriminants(1).size() == 19);
  CHECK(golden::table_discriminants(2).size() == 9);
  for (const auto& row : golden::table_rows()) {
    auto p = golden::poly(row.p);
    auto cd = reduced_forms(row.d);
    CHECK_MESSAGE(p.degree() == 4 * cd.h, "d = " << row.d);
    Integer disc = 1;
    for (auto [q, e] : row.disc) disc *= exact::ipow(Integer(q), e);
    CHECK_MESSAGE(exact::discriminant(p) == Rational(disc), "d = " << row.d);
  }
  CHECK(exact::discriminant(golden::poly(golden::kBigH)) ==
        -exact::ipow(Rational(5), 16) * exact::ipow(Rational(19), 7) * 59 * 59 * 89 * 89 * 521 *
            521 * 2609 * 2609 * Rational(740243809) * Rational(740243809));
}
