#include "hicat/map_counts.hpp"

#include "hicat/catalan.hpp"

namespace hicat {

namespace {

void require_nu(int nu) {
    if (nu < 2) throw std::invalid_argument("nu must be >= 2");
}

void require_shape(int nu, long long j) {
    require_nu(nu);
    if (j < 1) throw std::invalid_argument("j must be >= 1");
}

Rational rat(long long num, long long den) { return Rational(num) / Rational(den); }

// nu - (nu-1) * f, the recurring denominator series.
Series denominator_series(int nu, const Series& f) {
    return f * Rational(-(nu - 1)) + Rational(nu);
}

// Coerce a rational known to be integral.
Integer whole(const Rational& value, const char* what) {
    if (boost::multiprecision::denominator(value) != 1)
        throw std::logic_error(std::string(what) + ": expected an integer value");
    return boost::multiprecision::numerator(value);
}

}  // namespace

Integer c_const(int nu) {
    require_nu(nu);
    return Integer(2 * nu) * binomial(2 * nu - 1, nu - 1);
}

Rational mu_const(int nu) {
    require_nu(nu);
    return rat((nu - 1) * (nu - 1), 4LL * nu * (nu + 1));
}

Rational r_const(int nu) {
    require_nu(nu);
    return rat(3 * (nu + 1), nu - 1);
}

Series e0_series(int nu, int order) {
    require_nu(nu);
    Series w = solve_z(nu, order).scaled_arg(Rational(c_const(nu)));
    Series quadratic = (w - Rational(1)) * (w - r_const(nu)) * mu_const(nu);
    return quadratic + series_log(w) * rat(1, 2);
}

Integer map_count_genus0(int nu, long long j) {
    require_shape(nu, j);
    return exact_div(pow_integer(c_const(nu), static_cast<unsigned>(j)) * factorial(nu * j - 1),
                     factorial((nu - 1) * j + 2));
}

Integer map_count_genus0_assembled(int nu, long long j) {
    require_shape(nu, j);
    Rational bracket = Rational(higher_catalan(nu, j)) * mu_const(nu) * (r_const(nu) - 1) * -1 +
                       Rational(catalan_convolution(nu, 2, j)) * mu_const(nu) +
                       log_coefficient(nu, j) * rat(1, 2);
    Rational value = bracket * Rational(factorial(j)) *
                     Rational(pow_integer(c_const(nu), static_cast<unsigned>(j)));
    return whole(value, "map_count_genus0_assembled");
}

Series e1_series(int nu, int order) {
    require_nu(nu);
    Series w = solve_z(nu, order).scaled_arg(Rational(c_const(nu)));
    return series_log(denominator_series(nu, w)) * rat(-1, 12);
}

Integer map_count_genus1(int nu, long long j) {
    require_shape(nu, j);
    Integer sum = 0;
    Integer power = 1;
    for (long long k = 1; k <= j; ++k) {
        power *= nu - 1;
        sum += power * binomial(nu * j, j - k);
    }
    return exact_div(factorial(j - 1) * pow_integer(c_const(nu), static_cast<unsigned>(j)) * sum,
                     12);
}

Series e1_derivative_series(int nu, int order) {
    require_nu(nu);
    Series w = solve_z(nu, order).scaled_arg(Rational(c_const(nu)));
    Series den = denominator_series(nu, w);
    Series value = w.pow_int(static_cast<unsigned>(nu) + 1) / (den * den);
    return value * (rat(nu - 1, 12) * Rational(c_const(nu)));
}

bool check_z_power_quotient(int nu, long long alpha, int order) {
    require_nu(nu);
    if (alpha < 0) throw std::invalid_argument("check_z_power_quotient: alpha must be >= 0");
    Series z = solve_z(nu, order);
    Series lhs = z.pow_int(static_cast<unsigned>(alpha) + 1) / denominator_series(nu, z);
    for (int j = 0; j <= order; ++j)
        if (lhs[j] != Rational(binomial(alpha + static_cast<long long>(nu) * j, j))) return false;
    return true;
}

bool check_z_derivative_identity(int nu, int order) {
    require_nu(nu);
    if (order == 0) return true;
    Series z = solve_z(nu, order);
    Series lhs = z.derivative() * denominator_series(nu, z).truncated(order - 1);
    Series rhs = z.pow_int(static_cast<unsigned>(nu) + 1).truncated(order - 1);
    return lhs == rhs;
}

}  // namespace hicat
