#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// boost 1.74 forwards integer == rational to rational == integer, which C++20
// rewrites back again; exact non-template overloads break the cycle.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
}  // namespace boost

namespace lcaframe {

using Rational = boost::rational<std::int64_t>;

// Exact coordinates of a lattice point or domain corner.
using ExactPoint = std::vector<Rational>;
// Float coordinates used for sampling and evaluation.
using Point = std::vector<double>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

bool is_integer(const Rational& r);
std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);
// Representative of r modulo period in [0, period).
Rational mod(const Rational& r, const Rational& period);
// 2^e for any integer e with |e| < 62.
Rational pow2(int e);

std::string to_string(const Rational& r);
// Accepts "p", "p/q" and optional surrounding whitespace.
Rational parse_rational(std::string_view text);
// Exact conversion of a double that is k / 2^j with j <= 30; throws otherwise.
Rational rational_from_dyadic(double x);

Point to_point(const ExactPoint& p);
ExactPoint add(const ExactPoint& a, const ExactPoint& b);
ExactPoint negated(const ExactPoint& a);
ExactPoint scaled(const ExactPoint& p, const Rational& factor);

}  // namespace lcaframe
