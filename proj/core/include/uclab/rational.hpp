#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace uclab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

// Sum_{j >= t} C(m, j), with t clamped to [0, m+1]; t <= 0 gives 2^m.
BigInt binomial_tail(long m, long t);

// log2 of a positive big integer, accurate to a few double ulps even when the
// value does not fit in a double.
double log2_big(const BigInt& v);

double to_double(const Rational& q);

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

// Parses "3", "0.25", "1e-3", or "num/den" into an exact rational.
Rational parse_rational(std::string_view text);

// "num/den" (or just "num" when the denominator is 1).
std::string rational_to_string(const Rational& q);

}  // namespace uclab
