#pragma once

// Exact scalar arithmetic. Everything in this library is computed over
// arbitrary-precision integers and rationals; no floating point anywhere.
// Rationals are kept canonical (lowest terms, positive denominator), so
// operator== is structural equality of values.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hicat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) for n >= 0; returns 0 when k < 0 or k > n.
Integer binomial(long long n, long long k);

Integer factorial(long long n);

// n!! for odd n >= -1; (2m-1)!! is the number of perfect matchings of 2m
// labeled points.
Integer double_factorial(long long n);

// C(top, k) with rational top, via the falling factorial
// top (top-1) ... (top-k+1) / k!; returns 0 for k < 0.
Rational falling_binomial(const Rational& top, long long k);

Integer pow_integer(const Integer& base, unsigned exp);

// a / b asserting that b divides a exactly. Used where a closed form is a
// priori rational but the result is known to be an integer count.
Integer exact_div(const Integer& a, const Integer& b);

// Decimal-string forms used by the CLI and reports ("p" or "p/q").
std::string to_decimal(const Integer& v);
std::string to_decimal(const Rational& v);

}  // namespace hicat
