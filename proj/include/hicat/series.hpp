#pragma once

// Truncated formal power series over exact rationals. A Series of order n
// holds coefficients 0..n and represents a power series known modulo s^(n+1).
// Every ring operation respects the truncation: coefficients of the result
// never depend on discarded coefficients of the operands.
//
// Binary operations require equal orders; mixed orders are rejected rather
// than silently truncated. Use truncated() to change order explicitly.
//
// Series values are immutable after construction and all operations are pure,
// so concurrent use from multiple threads needs no synchronization.

#include "hicat/arith.hpp"

#include <vector>

namespace hicat {

class Series {
  public:
    // Zero series of the given order.
    explicit Series(int order);

    // Series from explicit coefficients 0..n (order = size - 1).
    explicit Series(std::vector<Rational> coefficients);

    static Series constant(const Rational& value, int order);

    int order() const { return static_cast<int>(coeff_.size()) - 1; }
    const Rational& operator[](int k) const { return coeff_.at(static_cast<size_t>(k)); }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    bool operator==(const Series& other) const = default;

    Series operator+(const Series& other) const;
    Series operator-(const Series& other) const;
    Series operator*(const Series& other) const;
    // Requires other[0] != 0.
    Series operator/(const Series& other) const;

    Series operator+(const Rational& c) const;
    Series operator-(const Rational& c) const;
    Series operator*(const Rational& c) const;

    // f^e by repeated multiplication; no constraint on the constant term.
    Series pow_int(unsigned e) const;

    // Termwise d/ds; drops the top coefficient, so order decreases by one.
    // Requires order >= 1.
    Series derivative() const;

    // Termwise integral with constant term 0; order increases by one.
    Series antiderivative() const;

    // First new_order+1 coefficients; new_order must not exceed order().
    Series truncated(int new_order) const;

    // Multiplication by s at fixed order: shifts coefficients up one slot and
    // drops the top one.
    Series times_s() const;

    // f(c*s): coefficient k scaled by c^k.
    Series scaled_arg(const Rational& c) const;

    std::string str() const;

  private:
    std::vector<Rational> coeff_;
};

// log f for f with constant term exactly 1, from the Mercator expansion
// log(1+u) = sum_{i>=1} (-1)^(i+1) u^i / i. Result has constant term 0.
Series series_log(const Series& f);

// exp f for f with constant term 0, via the recurrence obtained from
// g' = f' g. Independent of series_log's expansion, so exp(log f) == f is a
// genuine two-route check.
Series series_exp(const Series& f);

// f^alpha for f with constant term exactly 1 and rational alpha, via the
// recurrence obtained from g' f = alpha f' g. Agrees with pow_int for
// nonnegative integer alpha.
Series series_pow(const Series& f, const Rational& alpha);

// The unique series z with z(0) = 1 satisfying s z^nu - z + 1 = 0 modulo
// s^(order+1), by the fixed-point iteration z <- 1 + s z^nu (each pass is
// exact and gains at least one correct coefficient). Coefficient j is the
// higher Catalan number for (nu, j). Requires nu >= 2.
Series solve_z(int nu, int order);

}  // namespace hicat
