#include "rr5/exact/rational.hpp"

#include "rr5/errors.hpp"

namespace rr5::exact {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_digits = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char ch : t)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) throw DomainError("malformed rational: " + s);
  if (num.front() == '+') num.erase(0, 1);
  if (den.front() == '+') den.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw DomainError("zero denominator: " + s);
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Integer ipow(const Integer& base, unsigned long n) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), n);
  return r;
}

Rational ipow(const Rational& base, unsigned long n) {
  Rational r(ipow(Integer(base.get_num()), n), ipow(Integer(base.get_den()), n));
  r.canonicalize();
  return r;
}

}  // namespace rr5::exact
