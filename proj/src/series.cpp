#include "hicat/series.hpp"

#include <sstream>

namespace hicat {

namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
    if (a.order() != b.order())
        throw std::invalid_argument(std::string(op) + ": order mismatch (" +
                                    std::to_string(a.order()) + " vs " +
                                    std::to_string(b.order()) + ")");
}

}  // namespace

Series::Series(int order) {
    if (order < 0) throw std::invalid_argument("Series: order must be nonnegative");
    coeff_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coefficients) : coeff_(std::move(coefficients)) {
    if (coeff_.empty()) throw std::invalid_argument("Series: need at least the constant term");
}

Series Series::constant(const Rational& value, int order) {
    Series s(order);
    s.coeff_[0] = value;
    return s;
}

Series Series::operator+(const Series& other) const {
    require_same_order(*this, other, "series add");
    Series r(order());
    for (size_t k = 0; k < coeff_.size(); ++k) r.coeff_[k] = coeff_[k] + other.coeff_[k];
    return r;
}

Series Series::operator-(const Series& other) const {
    require_same_order(*this, other, "series sub");
    Series r(order());
    for (size_t k = 0; k < coeff_.size(); ++k) r.coeff_[k] = coeff_[k] - other.coeff_[k];
    return r;
}

Series Series::operator*(const Series& other) const {
    require_same_order(*this, other, "series mul");
    Series r(order());
    for (size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i] == 0) continue;
        for (size_t k = i; k < coeff_.size(); ++k)
            r.coeff_[k] += coeff_[i] * other.coeff_[k - i];
    }
    return r;
}

Series Series::operator/(const Series& other) const {
    require_same_order(*this, other, "series div");
    if (other.coeff_[0] == 0)
        throw std::invalid_argument("series div: divisor has zero constant term");
    Series q(order());
    for (size_t n = 0; n < coeff_.size(); ++n) {
        Rational acc = coeff_[n];
        for (size_t k = 1; k <= n; ++k) acc -= other.coeff_[k] * q.coeff_[n - k];
        q.coeff_[n] = acc / other.coeff_[0];
    }
    return q;
}

Series Series::operator+(const Rational& c) const {
    Series r = *this;
    r.coeff_[0] += c;
    return r;
}

Series Series::operator-(const Rational& c) const {
    Series r = *this;
    r.coeff_[0] -= c;
    return r;
}

Series Series::operator*(const Rational& c) const {
    Series r(order());
    for (size_t k = 0; k < coeff_.size(); ++k) r.coeff_[k] = coeff_[k] * c;
    return r;
}

Series Series::pow_int(unsigned e) const {
    Series r = Series::constant(1, order());
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

Series Series::derivative() const {
    if (order() < 1)
        throw std::invalid_argument("series derivative: order 0 has no derivative coefficients");
    Series r(order() - 1);
    for (size_t k = 1; k < coeff_.size(); ++k)
        r.coeff_[k - 1] = coeff_[k] * Rational(static_cast<long long>(k));
    return r;
}

Series Series::antiderivative() const {
    Series r(order() + 1);
    for (size_t k = 0; k < coeff_.size(); ++k)
        r.coeff_[k + 1] = coeff_[k] / Rational(static_cast<long long>(k) + 1);
    return r;
}

Series Series::truncated(int new_order) const {
    if (new_order < 0 || new_order > order())
        throw std::invalid_argument("series truncate: new order out of range");
    Series r(new_order);
    for (int k = 0; k <= new_order; ++k) r.coeff_[static_cast<size_t>(k)] = coeff_[static_cast<size_t>(k)];
    return r;
}

Series Series::times_s() const {
    Series r(order());
    for (size_t k = coeff_.size() - 1; k >= 1; --k) r.coeff_[k] = coeff_[k - 1];
    return r;
}

Series Series::scaled_arg(const Rational& c) const {
    Series r(order());
    Rational p = 1;
    for (size_t k = 0; k < coeff_.size(); ++k) {
        r.coeff_[k] = coeff_[k] * p;
        p *= c;
    }
    return r;
}

std::string Series::str() const {
    std::ostringstream os;
    for (size_t k = 0; k < coeff_.size(); ++k) {
        if (k) os << ", ";
        os << to_decimal(coeff_[k]);
    }
    return os.str();
}

Series series_log(const Series& f) {
    if (f[0] != 1)
        throw std::invalid_argument("series log: constant term must be 1");
    const int n = f.order();
    Series u = f - Rational(1);
    Series acc(n);
    Series upow = u;
    for (int i = 1; i <= n; ++i) {
        Rational c = Rational(i % 2 ? 1 : -1) / i;
        acc = acc + upow * c;
        if (i < n) upow = upow * u;  // valuation of u^i is >= i, terms beyond n vanish
    }
    return acc;
}

Series series_exp(const Series& f) {
    if (f[0] != 0)
        throw std::invalid_argument("series exp: constant term must be 0");
    const int n = f.order();
    std::vector<Rational> g(static_cast<size_t>(n) + 1);
    g[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int k = 1; k <= m; ++k)
            acc += Rational(k) * f[k] * g[static_cast<size_t>(m - k)];
        g[static_cast<size_t>(m)] = acc / m;
    }
    return Series(std::move(g));
}

Series series_pow(const Series& f, const Rational& alpha) {
    if (f[0] != 1)
        throw std::invalid_argument("series pow: constant term must be 1");
    const int n = f.order();
    std::vector<Rational> g(static_cast<size_t>(n) + 1);
    g[0] = 1;
    // From g' f = alpha f' g with f0 = 1:
    //   n g_n = sum_{t=1..n} alpha t f_t g_{n-t} - sum_{t=1..n-1} t g_t f_{n-t}
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int t = 1; t <= m; ++t) acc += alpha * t * f[t] * g[static_cast<size_t>(m - t)];
        for (int t = 1; t < m; ++t) acc -= Rational(t) * g[static_cast<size_t>(t)] * f[m - t];
        g[static_cast<size_t>(m)] = acc / m;
    }
    return Series(std::move(g));
}

Series solve_z(int nu, int order) {
    if (nu < 2) throw std::invalid_argument("solve_z: nu must be >= 2");
    if (order < 0) throw std::invalid_argument("solve_z: order must be nonnegative");
    Series z = Series::constant(1, order);
    for (int pass = 0; pass <= order; ++pass) {
        Series next = z.pow_int(static_cast<unsigned>(nu)).times_s() + Rational(1);
        if (next == z) return z;
        z = next;
    }
    // One pass per coefficient always suffices; reaching this is a bug.
    throw std::logic_error("solve_z: fixed-point iteration failed to stabilize");
}

}  // namespace hicat
