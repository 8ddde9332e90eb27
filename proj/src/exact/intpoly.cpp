#include "rr5/exact/intpoly.hpp"

#include <algorithm>
#include <sstream>

#include "rr5/errors.hpp"

namespace rr5::exact {

QPoly qpoly_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(parse_rational(s));
  return QPoly(std::move(v));
}

QPoly qpoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

QPoly qpoly_hi(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  std::reverse(v.begin(), v.end());
  return QPoly(std::move(v));
}

QPoly parse_qpoly(std::string_view text, char var) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '{' && ch != '}' && ch != '\t' && ch != '\n') s.push_back(ch);
  if (s.empty()) throw DomainError("empty polynomial text");
  auto fail = [&]() { return DomainError("malformed polynomial: " + std::string(text)); };
  auto digits = [&](std::size_t& i) {
    std::size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    return s.substr(start, i - start);
  };
  std::vector<Rational> acc;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw fail();
    }
    Rational c = 1;
    std::string num = digits(i);
    bool have_coeff = !num.empty();
    if (have_coeff) c = Rational(Integer(num));
    if (i < s.size() && s[i] == '*') ++i;
    unsigned long e = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ex = digits(i);
        if (ex.empty()) throw fail();
        e = std::stoul(ex);
      }
    } else if (!have_coeff) {
      throw fail();
    }
    if (i < s.size() && s[i] == '/') {
      ++i;
      std::string den = digits(i);
      if (den.empty() || Integer(den) == 0) throw fail();
      c /= Rational(Integer(den));
    }
    if (acc.size() <= e) acc.resize(e + 1);
    acc[e] += sign * c;
  }
  return QPoly(std::move(acc));
}

bool is_integral(const QPoly& p) {
  for (const auto& c : p.coeffs())
    if (!is_integer(c)) return false;
  return true;
}

ZPoly to_zpoly(const QPoly& p) {
  return p.map([](const Rational& c) {
    if (!is_integer(c)) throw DomainError("non-integral coefficient " + c.get_str());
    return Integer(c.get_num());
  });
}

QPoly to_qpoly(const ZPoly& p) {
  return p.map([](const Integer& c) { return Rational(c); });
}

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Rational content(const QPoly& p) {
  if (p.is_zero()) return 0;
  Integer num = 0, den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  Rational c = content(p);
  if (sgn(p.leading()) < 0) c = -c;
  return p * Rational(1 / c);
}

bool is_squarefree(const QPoly& p) {
  if (p.degree() < 1) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

std::vector<std::string> coeff_strings(const QPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

Integer Factorization::value() const {
  Integer v = sign;
  for (const auto& [p, e] : factors) v *= ipow(p, e);
  return v;
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  if (factors.empty()) os << "1";
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (!first) os << " * ";
    first = false;
    os << p.get_str();
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

Factorization factor_integer(const Integer& n, unsigned long bound) {
  if (n == 0) throw DomainError("cannot factor zero");
  Factorization f;
  f.sign = sgn(n) < 0 ? -1 : 1;
  Integer m = abs(n);
  auto strip = [&](unsigned long p) {
    unsigned e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) f.factors.emplace_back(Integer(p), e);
  };
  strip(2);
  for (unsigned long p = 3; p <= bound && m > 1; p += 2) {
    if (Integer(p) * p > m) break;
    strip(p);
  }
  if (m > 1) {
    // m has no factor <= min(bound, sqrt m); it is prime when sqrt m was reached.
    bool prime = m <= Integer(bound) * bound || mpz_probab_prime_p(m.get_mpz_t(), 40) > 0;
    f.factors.emplace_back(m, 1);
    f.complete = prime;
  }
  return f;
}

}  // namespace rr5::exact
