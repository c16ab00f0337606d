#include <doctest.h>

#include "hicat/series.hpp"

using namespace hicat;

namespace {

Rational rat(long long p, long long q) { return Rational(p) / Rational(q); }

Series from_ints(std::initializer_list<long long> values) {
    std::vector<Rational> coeff;
    for (long long v : values) coeff.emplace_back(v);
    return Series(std::move(coeff));
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("ring operations at fixed order") {
    Series one_plus = from_ints({1, 1, 0});
    Series one_minus = from_ints({1, -1, 0});
    CHECK(one_plus * one_minus == from_ints({1, 0, -1}));

    Series one = from_ints({1, 0, 0, 0});
    Series geom = one / from_ints({1, -1, 0, 0});
    CHECK(geom == from_ints({1, 1, 1, 1}));

    CHECK_THROWS_AS(one / from_ints({0, 1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(one_plus + one, std::invalid_argument);  // mixed orders rejected
}

TEST_CASE("truncation consistency: low-order results ignore discarded tails") {
    Series a = from_ints({1, 4, -2, 7, 3});
    Series b = from_ints({2, -1, 5, 1, -6});
    Series full = a * b;
    Series cut = a.truncated(2) * b.truncated(2);
    CHECK(full.truncated(2) == cut);
    CHECK((a / b).truncated(2) == a.truncated(2) / b.truncated(2));
}

TEST_CASE("log: Mercator examples") {
    Series lg = series_log(from_ints({1, 1, 0, 0}));
    CHECK(lg[0] == 0);
    CHECK(lg[1] == 1);
    CHECK(lg[2] == rat(-1, 2));
    CHECK(lg[3] == rat(1, 3));

    CHECK(series_log(Series::constant(1, 5)) == Series(5));
    CHECK_THROWS_AS(series_log(from_ints({2, 1})), std::invalid_argument);

    Series lgz = series_log(solve_z(2, 2));
    CHECK(lgz[1] == 1);
    CHECK(lgz[2] == rat(3, 2));
}

TEST_CASE("exp inverts log (independent recurrences)") {
    Series f = Series({rat(1, 1), rat(2, 3), rat(-1, 2), rat(5, 7), rat(0, 1), rat(9, 4)});
    CHECK(series_exp(series_log(f)) == f);
    CHECK_THROWS_AS(series_exp(from_ints({1, 1})), std::invalid_argument);
}

TEST_CASE("pow: integer exponents agree with repeated multiplication") {
    Series f = from_ints({1, 1, 0});
    CHECK(series_pow(f, Rational(2)) == from_ints({1, 2, 1}));
    CHECK(series_pow(f, Rational(0)) == Series::constant(1, 2));

    Series z = solve_z(2, 2);
    CHECK(series_pow(z, Rational(3)) == from_ints({1, 3, 9}));
    for (unsigned e = 0; e <= 6; ++e)
        CHECK(series_pow(solve_z(3, 8), Rational(e)) == solve_z(3, 8).pow_int(e));
    CHECK_THROWS_AS(series_pow(from_ints({0, 1}), Rational(2)), std::invalid_argument);
}

TEST_CASE("pow: exponent additivity for rational exponents") {
    Series f = Series({rat(1, 1), rat(1, 2), rat(2, 5), rat(-3, 4), rat(1, 7)});
    Rational a = rat(3, 2), b = rat(-1, 3);
    CHECK(series_pow(f, a + b) == series_pow(f, a) * series_pow(f, b));
    CHECK(series_pow(f, rat(1, 2)) * series_pow(f, rat(1, 2)) == f);
}

TEST_CASE("derivative and antiderivative") {
    Series f = from_ints({1, 2, 3});
    CHECK(f.derivative() == from_ints({2, 6}));
    CHECK(from_ints({1}).antiderivative() == from_ints({0, 1}));
    Series g = from_ints({0, 0, 1, 5});
    CHECK(g.derivative().antiderivative() == g);
    Series h = from_ints({4, 1, 2, 8});
    CHECK(h.antiderivative().derivative() == h);
    CHECK_THROWS_AS(Series(0).derivative(), std::invalid_argument);
}

TEST_CASE("shift and argument scaling") {
    Series f = from_ints({1, 2, 3});
    CHECK(f.times_s() == from_ints({0, 1, 2}));
    CHECK(f.scaled_arg(Rational(10)) == from_ints({1, 20, 300}));
    CHECK(f.scaled_arg(rat(1, 2)) == Series({rat(1, 1), rat(1, 1), rat(3, 4)}));
}

TEST_CASE("solve_z reproduces the catalan generating functions") {
    CHECK(solve_z(2, 4) == from_ints({1, 1, 2, 5, 14}));
    CHECK(solve_z(3, 3) == from_ints({1, 1, 3, 12}));
    for (int nu = 2; nu <= 6; ++nu) CHECK(solve_z(nu, 0) == Series::constant(1, 0));
    CHECK_THROWS_AS(solve_z(1, 4), std::invalid_argument);
}

TEST_CASE("solve_z satisfies its defining equation") {
    for (int nu = 2; nu <= 5; ++nu) {
        const int order = 30;
        Series z = solve_z(nu, order);
        Series residual = z.pow_int(static_cast<unsigned>(nu)).times_s() - z +
                          Series::constant(1, order);
        CHECK(residual == Series(order));
        // All coefficients are nonnegative integers.
        for (int j = 0; j <= order; ++j) {
            CHECK(boost::multiprecision::denominator(z[j]) == 1);
            CHECK(z[j] >= 0);
        }
    }
}

}  // TEST_SUITE
