#pragma once

// Closed-form map counts by genus and the generating functions behind them.
// Throughout, z is the higher-Catalan series of solve_z, w(t) = z(c*t) is its
// rescaling by the integer constant c below, and e0/e1 are the exponential
// generating functions whose coefficient j carries the number of connected
// genus-0 (resp. genus-1) gluings of j labeled 2*nu-valent vertices:
//
//   e0(t) = mu * (w - 1) * (w - r) + (1/2) * log w
//   e1(t) = -(1/12) * log(nu - (nu-1) * w)
//
// so that j! * [t^j] e0 = map_count_genus0(nu, j) and likewise for genus 1.
// The closed forms are cross-checked against the gluing oracle in the tests.

#include "hicat/arith.hpp"
#include "hicat/series.hpp"

namespace hicat {

// c = 2 * nu * C(2*nu - 1, nu - 1); the scale factor linking t to s = c*t.
Integer c_const(int nu);

// mu = (nu - 1)^2 / (4 * nu * (nu + 1)).
Rational mu_const(int nu);

// r = 3 * (nu + 1) / (nu - 1).
Rational r_const(int nu);

// The genus-0 generating function e0 as a series in t, to the given order.
Series e0_series(int nu, int order);

// Number of connected genus-0 gluings of j vertices of valence 2*nu:
// c^j * (nu*j - 1)! / ((nu-1)*j + 2)!.
Integer map_count_genus0(int nu, long long j);

// The same count assembled from the coefficient families directly:
// j! * c^j * [ -(r-1)*mu*zeta_j + mu*eta_j + (1/2)*l_j ]
// with zeta_j = higher_catalan, eta_j = catalan_convolution(nu, 2, j) and
// l_j = log_coefficient. Must equal map_count_genus0 for all nu, j.
Integer map_count_genus0_assembled(int nu, long long j);

// The genus-1 generating function e1 as a series in t, to the given order.
Series e1_series(int nu, int order);

// Number of connected genus-1 gluings of j vertices of valence 2*nu:
// ((j-1)! * c^j / 12) * sum_{k=1..j} (nu-1)^k * C(nu*j, j-k).
Integer map_count_genus1(int nu, long long j);

// d/dt e1 built in closed form, ((nu-1)/12) * c * w^(nu+1) / (nu-(nu-1)w)^2,
// rather than by termwise differentiation; the tests compare the two routes.
Series e1_derivative_series(int nu, int order);

// True iff z^(alpha+1) / (nu - (nu-1)z) = sum_j C(alpha + nu*j, j) s^j holds
// coefficientwise to the truncation order (alpha a nonnegative integer).
bool check_z_power_quotient(int nu, long long alpha, int order);

// True iff z' * (nu - (nu-1)z) = z^(nu+1) holds to order-1 (vacuously true at
// order 0, where the derivative leaves nothing to compare).
bool check_z_derivative_identity(int nu, int order);

}  // namespace hicat
