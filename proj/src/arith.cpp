#include "hicat/arith.hpp"

namespace hicat {

Integer binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    // r stays integral at every step: after multiplying by (n-k+i) the
    // partial product is C(n-k+i, i) * i!/i! in disguise.
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Integer factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
    Integer r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

Integer double_factorial(long long n) {
    if (n < -1 || n % 2 == 0)
        throw std::invalid_argument("double_factorial: n must be odd and >= -1");
    Integer r = 1;
    for (long long i = n; i >= 3; i -= 2) r *= i;
    return r;
}

Rational falling_binomial(const Rational& top, long long k) {
    if (k < 0) return 0;
    Rational r = 1;
    for (long long m = 0; m < k; ++m) {
        r *= top - m;
        r /= m + 1;
    }
    return r;
}

Integer pow_integer(const Integer& base, unsigned exp) {
    Integer r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

Integer exact_div(const Integer& a, const Integer& b) {
    if (b == 0) throw std::invalid_argument("exact_div: division by zero");
    Integer q, rem;
    boost::multiprecision::divide_qr(a, b, q, rem);
    if (rem != 0) throw std::logic_error("exact_div: " + a.str() + " not divisible by " + b.str());
    return q;
}

std::string to_decimal(const Integer& v) { return v.str(); }

std::string to_decimal(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace hicat
