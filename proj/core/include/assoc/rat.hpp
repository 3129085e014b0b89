#pragma once
// Exact rational scalars and coordinate vectors backed by GMP.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace assoc {

// mpq_class keeps its value canonical (positive denominator, reduced) after
// every arithmetic operation, so equality is structural.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

Rat rat(long num, long den = 1);

// Accepts "p", "-p" and "p/q"; throws ParseError otherwise.
Rat parse_rat(std::string_view text);
// Comma or whitespace separated list of rationals.
RatVec parse_ratvec(std::string_view text);

std::string str(const Rat& x);
std::string str(const RatVec& v);  // "(a, b, c)"

Rat sum(const RatVec& v, std::size_t begin, std::size_t end);
Rat sum(const RatVec& v);

// t*x + (1-t)*y
RatVec affine(const Rat& t, const RatVec& x, const RatVec& y);
RatVec reversed(const RatVec& v);

bool is_integer(const Rat& x);

}  // namespace assoc
