#include "hicat/catalan.hpp"

namespace hicat {

namespace {

void require_nu(int nu) {
    if (nu < 2) throw std::invalid_argument("nu must be >= 2");
}

}  // namespace

Integer higher_catalan(int nu, long long j) {
    require_nu(nu);
    if (j < 0) throw std::invalid_argument("higher_catalan: j must be nonnegative");
    if (j == 0) return 1;
    return exact_div(binomial(nu * j, j - 1), Integer(j));
}

std::vector<Integer> catalan_by_recursion(int nu, int j_max) {
    require_nu(nu);
    if (j_max < 0) throw std::invalid_argument("catalan_by_recursion: j_max must be nonnegative");
    std::vector<Integer> zeta;
    zeta.reserve(static_cast<size_t>(j_max) + 1);
    zeta.push_back(1);
    for (int j = 1; j <= j_max; ++j) {
        // nu-fold convolution of the known prefix, evaluated at index j-1.
        std::vector<Integer> conv(zeta.begin(), zeta.end());
        conv.resize(static_cast<size_t>(j), Integer(0));  // indices 0..j-1
        for (int rep = 1; rep < nu; ++rep) {
            std::vector<Integer> next(static_cast<size_t>(j), Integer(0));
            for (size_t a = 0; a < conv.size(); ++a) {
                if (conv[a] == 0) continue;
                for (size_t b = 0; a + b < next.size() && b < zeta.size(); ++b)
                    next[a + b] += conv[a] * zeta[b];
            }
            conv = std::move(next);
        }
        zeta.push_back(conv[static_cast<size_t>(j) - 1]);
    }
    return zeta;
}

Integer catalan_convolution(int nu, int i, long long j) {
    require_nu(nu);
    if (i < 1) throw std::invalid_argument("catalan_convolution: i must be >= 1");
    if (j < 0) throw std::invalid_argument("catalan_convolution: j must be nonnegative");
    if (j < i) return 0;  // (z-1)^i has valuation i
    return exact_div(Integer(i) * binomial(nu * j, j - i), Integer(j));
}

Rational log_coefficient(int nu, long long j) {
    require_nu(nu);
    if (j < 1) throw std::invalid_argument("log_coefficient: j must be >= 1");
    return Rational(binomial(nu * j - 1, j - 1)) / Rational(j);
}

Rational z_power_coefficient(int nu, const Rational& alpha, long long j) {
    require_nu(nu);
    if (j < 0) throw std::invalid_argument("z_power_coefficient: j must be nonnegative");
    Rational shifted = alpha + Rational(nu) * j;
    if (shifted == 0)
        throw std::invalid_argument("z_power_coefficient: alpha + nu*j = 0 is singular");
    return alpha / shifted * falling_binomial(shifted, j);
}

}  // namespace hicat
