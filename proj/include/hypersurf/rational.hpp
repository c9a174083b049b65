#ifndef HYPERSURF_RATIONAL_HPP
#define HYPERSURF_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hypersurf {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// "num/den" rendering, always with an explicit denominator ("3/1" for 3).
std::string to_fraction_string(const Rational& q);

/// Parses "a", "-a", "a/b" with decimal integers. Throws ParseError.
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& q) { return q.get_d(); }

/// Exact conversion of a finite double.
Rational from_double(double x);

}  // namespace hypersurf

#endif  // HYPERSURF_RATIONAL_HPP
