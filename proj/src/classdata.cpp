#include "rr5/classdata.hpp"

#include <cmath>
#include <numeric>
#include <tuple>

#include "rr5/errors.hpp"
#include "rr5/hp/modular.hpp"

namespace rr5::classdata {

bool QuadForm::is_primitive() const { return std::gcd(std::gcd(a, b), c) == 1; }

bool QuadForm::is_reduced() const {
  if (!(std::abs(b) <= a && a <= c)) return false;
  if ((std::abs(b) == a || a == c) && b < 0) return false;
  return true;
}

BigComplex QuadForm::root(prec_t prec) const {
  return hp::quadratic_point(-b, 1, -discriminant(), 2 * a, prec);
}

std::string to_string(const QuadForm& f) {
  return "(" + std::to_string(f.a) + ", " + std::to_string(f.b) + ", " + std::to_string(f.c) + ")";
}

bool is_discriminant(long d) {
  if (d <= 0) return false;
  long m = ((-d) % 4 + 4) % 4;
  return m == 0 || m == 1;
}

int legendre(long n, long p) {
  long r = ((n % p) + p) % p;
  if (r == 0) return 0;
  long e = (p - 1) / 2, acc = 1, base = r;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return acc == 1 ? 1 : -1;
}

bool is_admissible(long d) { return d > 0 && legendre(-d, 5) == 1; }

namespace {

bool squarefree(long n) {
  n = std::abs(n);
  for (long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

bool is_fundamental(long D) {
  long m4 = ((D % 4) + 4) % 4;
  if (m4 == 1) return squarefree(D);
  if (m4 != 0) return false;
  long m = D / 4;
  long r = ((m % 4) + 4) % 4;
  return (r == 2 || r == 3) && squarefree(m);
}

long mod(long x, long m) { return ((x % m) + m) % m; }

/// Inverse of a modulo m (gcd 1 assumed).
long inverse_mod(long a, long m) {
  long t = 0, nt = 1, r = m, nr = mod(a, m);
  while (nr) {
    long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw DomainError("no modular inverse");
  return mod(t, m);
}

}  // namespace

long conductor(long d) {
  if (!is_discriminant(d)) throw DomainError("-" + std::to_string(d) + " is not a discriminant");
  for (long f = static_cast<long>(std::sqrt(static_cast<double>(d))) + 1; f >= 1; --f) {
    if (d % (f * f)) continue;
    if (is_fundamental(-d / (f * f))) return f;
  }
  throw DomainError("no fundamental discriminant found for -" + std::to_string(d));
}

ClassData reduced_forms(long d) {
  if (!is_discriminant(d)) throw DomainError("-" + std::to_string(d) + " is not a discriminant");
  ClassData cd;
  cd.d = d;
  cd.f = conductor(d);
  cd.d_K = -d / (cd.f * cd.f);
  // |b| <= a <= sqrt(d / 3)
  for (long a = 1; 3 * a * a <= d; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b + d;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      QuadForm q{a, b, c};
      if (q.is_reduced() && q.is_primitive()) cd.forms.push_back(q);
    }
  }
  cd.h = static_cast<long>(cd.forms.size());
  return cd;
}

VChoice choose_v(long d, long f) {
  long first = 0;
  for (long v = 1; v <= 100; ++v) {
    if ((v * v + d) % 100) continue;
    if (!first) first = v;
    if (std::gcd(v, f) == 1) return {v, false};
  }
  if (!first)
    throw AdmissibilityError("no v with v^2 + " + std::to_string(d) + " = 0 mod 100");
  return {first, true};
}

BigComplex HeegnerArg::w(prec_t prec) const {
  return hp::quadratic_point(-b_adj, 1, -form.discriminant(), 2 * form.a, prec);
}

std::vector<HeegnerArg> n_system(const ClassData& cd, long v, long N) {
  if (N != 5 && N != 25) throw DomainError("argument systems exist for N = 5 or 25 only");
  std::vector<HeegnerArg> out;
  for (const QuadForm& red : cd.forms) {
    QuadForm q = red;
    if (q.a % 5 == 0) {
      // (a, b, c) ~ (a + b k + c k^2, b + 2 c k, c) ~ (c, -b, a)
      bool found = false;
      for (long k = 0; k < 25 && !found; ++k) {
        QuadForm t{red.a + red.b * k + red.c * k * k, red.b + 2 * red.c * k, red.c};
        if (t.a % 5) {
          q = t;
          found = true;
          break;
        }
        QuadForm s{t.c, -t.b, t.a};
        if (s.a % 5) {
          q = s;
          found = true;
        }
      }
      if (!found)
        throw DomainError("no equivalent form prime to 5 for " + to_string(red));
    }
    // b_adj = b + 2 a t with b_adj = -v mod 2N; needs a t = (-v - b) / 2 mod N.
    long rhs = -v - q.b;
    if (mod(rhs, 2)) throw AdmissibilityError("parity mismatch between v and form");
    long t = mod((rhs / 2) * inverse_mod(q.a, N), N);
    HeegnerArg arg{q, q.b + 2 * q.a * t};
    out.push_back(arg);
  }
  return out;
}

hp::PrecisionPolicy default_policy(const ClassData& cd, prec_t max_bits) {
  return hp::PrecisionPolicy::for_class(cd.d, cd.h, max_bits);
}

QPoly class_poly(const ClassData& cd, const hp::PrecisionPolicy& policy) {
  return policy.run([&](prec_t bits) {
    std::vector<BigComplex> js;
    for (const auto& q : cd.forms) js.push_back(hp::j_from_tau(q.root(bits + 32), bits));
    return hp::reconstruct_int_poly(js, bits);
  });
}

}  // namespace rr5::classdata
