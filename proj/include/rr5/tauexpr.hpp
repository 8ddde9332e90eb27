#pragma once

// Text forms of points tau and of integer ranges used by the command line.
//
// Accepted tau forms (spaces ignored):
//   a+bi, a-b i, bi, i, -2i      a and b decimal or p/q
//   (p+q sqrt -d)/r              also sqrt(-d), q omitted means 1, /r optional

#include <string_view>
#include <utility>

#include "rr5/hp/bigfloat.hpp"

namespace rr5 {

/// Throws DomainError on malformed text.
hp::BigComplex parse_tau(std::string_view text, hp::prec_t prec);

/// "a..b" or a single integer "a"; throws DomainError when malformed or a > b.
std::pair<long, long> parse_range(std::string_view text);

}  // namespace rr5
