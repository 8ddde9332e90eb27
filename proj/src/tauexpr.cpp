#include "rr5/tauexpr.hpp"

#include <regex>
#include <string>

#include "rr5/errors.hpp"
#include "rr5/hp/modular.hpp"

namespace rr5 {

using hp::BigComplex;
using hp::BigFloat;
using hp::prec_t;

namespace {

std::string strip(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  return s;
}

BigFloat number(const std::string& s, prec_t prec) {
  static const std::regex rational(R"([+-]?\d+/\d+)");
  static const std::regex decimal(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  if (std::regex_match(s, rational)) {
    exact::Rational q(s[0] == '+' ? s.substr(1) : s);
    if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
    q.canonicalize();
    return BigFloat(q, prec);
  }
  if (std::regex_match(s, decimal)) return BigFloat(s, prec);
  throw DomainError("not a number: '" + s + "'");
}

// Coefficient of i: "", "+" -> 1, "-" -> -1.
BigFloat imag_coeff(const std::string& s, prec_t prec) {
  if (s.empty() || s == "+") return BigFloat(1L, prec);
  if (s == "-") return BigFloat(-1L, prec);
  std::string t = s;
  if (!t.empty() && t.back() == '*') t.pop_back();
  return number(t, prec);
}

}  // namespace

BigComplex parse_tau(std::string_view text, prec_t prec) {
  const std::string s = strip(text);
  if (s.empty()) throw DomainError("empty tau");

  static const std::regex surd(R"(\(([+-]?\d+)?(?:([+-]\d*)\*?)?sqrt\(?-(\d+)\)?\)(?:/(\d+))?)");
  std::smatch m;
  if (std::regex_match(s, m, surd)) {
    exact::Integer p = m[1].matched ? exact::Integer(m[1].str()) : exact::Integer(0);
    exact::Integer q(1);
    if (m[2].matched) {
      std::string t = m[2].str();
      if (t == "+" ) q = 1;
      else if (t == "-") q = -1;
      else q = exact::Integer(t[0] == '+' ? t.substr(1) : t);
    } else if (m[1].matched) {
      throw DomainError("missing sign before sqrt in '" + s + "'");
    }
    long d = std::stol(m[3].str());
    exact::Integer r = m[4].matched ? exact::Integer(m[4].str()) : exact::Integer(1);
    if (d <= 0 || r == 0) throw DomainError("bad surd '" + s + "'");
    return hp::quadratic_point(p, q, d, r, prec);
  }

  if (s.back() != 'i') {
    // A real number: Im = 0.
    return BigComplex(number(s, prec));
  }
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {BigFloat(prec), imag_coeff(body, prec)};
  return {number(body.substr(0, split), prec), imag_coeff(body.substr(split), prec)};
}

std::pair<long, long> parse_range(std::string_view text) {
  static const std::regex range(R"((\d+)(?:\.\.(\d+))?)");
  const std::string s = strip(text);
  std::smatch m;
  if (!std::regex_match(s, m, range)) throw DomainError("range must look like a..b");
  long a = std::stol(m[1].str());
  long b = m[2].matched ? std::stol(m[2].str()) : a;
  if (a > b) throw DomainError("empty range");
  return {a, b};
}

}  // namespace rr5
