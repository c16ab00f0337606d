#pragma once

// Closed-form and recursive evaluation of the higher Catalan numbers and the
// coefficient families attached to powers and the logarithm of their
// generating function z(s) (the root of s z^nu - z + 1 = 0 with z(0) = 1).
//
// All functions are pure; preconditions are checked and violations throw
// std::invalid_argument.

#include "hicat/arith.hpp"

#include <vector>

namespace hicat {

// (1/j) C(nu j, j-1) for j >= 1, and 1 for j = 0 (the constant term of z).
// Always an integer. Requires nu >= 2, j >= 0.
Integer higher_catalan(int nu, long long j);

// The sequence zeta_0..zeta_{j_max} built from zeta_0 = 1 and the
// self-convolution recursion: zeta_j is the coefficient at j-1 of the nu-fold
// convolution of the sequence with itself. Agrees termwise with
// higher_catalan; kept as an independent route.
std::vector<Integer> catalan_by_recursion(int nu, int j_max);

// Coefficient j of (z-1)^i: the i-fold convolution of (zeta_1, zeta_2, ...),
// equal to (i/j) C(nu j, j-i) for j >= i and 0 for j < i. Counts the i-line
// exact-change queue arrangements. Requires nu >= 2, i >= 1, j >= 0.
Integer catalan_convolution(int nu, int i, long long j);

// Coefficient j of log z: (1/j) C(nu j - 1, j - 1). Requires j >= 1.
Rational log_coefficient(int nu, long long j);

// Coefficient j of z^alpha for rational alpha:
//   A_j = alpha/(alpha + nu j) * C(alpha + nu j, j)
// with the rational-top binomial read as a falling factorial. Rejects
// alpha + nu j = 0, where the formula is singular.
Rational z_power_coefficient(int nu, const Rational& alpha, long long j);

}  // namespace hicat
