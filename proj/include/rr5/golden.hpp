#pragma once

// Reference data: minimal polynomials of r(w/5) with their
// discriminants, and the intermediate polynomials used to check the
// construction end to end.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rr5/exact/intpoly.hpp"

namespace rr5::golden {

using exact::QPoly;

struct TableRow {
  long d;
  int table;  // 1 for d < 100, 2 otherwise
  std::string p;
  std::vector<std::pair<long, unsigned>> disc;  // prime, exponent; disc(p) > 0
};

const std::vector<TableRow>& table_rows();
/// Row for d, or nullptr.
const TableRow* find_row(long d);
std::vector<long> table_discriminants(int table);

/// Text polynomials keyed by d.
const std::map<long, std::string>& class_polys();  // H_{-d}
const std::map<long, std::string>& r_polys();      // R_d, minimal polynomial of z
const std::map<long, std::string>& q_polys();      // Q_d

extern const char* const kF19;
extern const char* const kF4;
/// The four squared factors of G_4(x^5).
extern const std::vector<std::string> kG4Factors;
extern const char* const kQ19;          // q_19, cofactor of p_19 in Q_19(x^5)
extern const char* const kP19TildeNeg;  // p~_19(-x)
extern const char* const kM36;          // minimal polynomial of r(3i)

/// A polynomial over Q(sqrt 5) as rational part + sqrt5 part.
struct Sqrt5Poly {
  std::string rational, sqrt5;
};
extern const Sqrt5Poly kM1;
extern const Sqrt5Poly kM2;

/// The quartic h(x) excluded in the d = 19-type argument and the quartic H(x)
/// whose discriminant rules out a class equation.
extern const char* const kSmallH;
extern const char* const kBigH;

QPoly poly(const std::string& text);

}  // namespace rr5::golden
