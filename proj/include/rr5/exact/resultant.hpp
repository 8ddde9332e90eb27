#pragma once

#include "rr5/exact/intpoly.hpp"

namespace rr5::exact {

/// Res(p, q) by the subresultant algorithm over Z. Throws DomainError when both are zero.
Integer resultant(const ZPoly& p, const ZPoly& q);
Rational resultant(const QPoly& p, const QPoly& q);

/// (-1)^(n(n-1)/2) Res(p, p') / lc(p). Throws DomainError for deg p < 2.
Rational discriminant(const QPoly& p);

/// lc(b)^(deg a - deg b + 1) a mod b over Z.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

}  // namespace rr5::exact
