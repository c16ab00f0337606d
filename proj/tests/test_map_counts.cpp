#include <doctest.h>

#include "hicat/map_counts.hpp"

using namespace hicat;

namespace {

Rational rat(long long p, long long q) { return Rational(p) / Rational(q); }

}  // namespace

TEST_SUITE("maps") {

TEST_CASE("constants") {
    CHECK(c_const(2) == 12);
    CHECK(c_const(3) == 60);
    CHECK(c_const(4) == 280);
    CHECK(mu_const(2) == rat(1, 24));
    CHECK(r_const(2) == 9);
    for (int nu = 2; nu <= 10; ++nu) {
        CHECK(r_const(nu) * (nu - 1) == 3 * (nu + 1));
        CHECK(mu_const(nu) * Rational(4 * nu * (nu + 1)) == (nu - 1) * (nu - 1));
    }
}

TEST_CASE("genus-0 closed form matches the frozen oracle censuses") {
    CHECK(map_count_genus0(2, 1) == 2);
    CHECK(map_count_genus0(2, 2) == 36);
    CHECK(map_count_genus0(2, 3) == 1728);
    CHECK(map_count_genus0(2, 4) == 145152);
    CHECK(map_count_genus0(3, 1) == 5);
    CHECK(map_count_genus0(3, 2) == 600);
    CHECK(map_count_genus0(4, 1) == 14);
    CHECK(map_count_genus0(4, 2) == 9800);
    CHECK(map_count_genus0(5, 1) == 42);
    CHECK(map_count_genus0(6, 1) == 132);
    CHECK(map_count_genus0(7, 1) == 429);
    CHECK(map_count_genus0(8, 1) == 1430);
}

TEST_CASE("genus-1 closed form matches the frozen oracle censuses") {
    CHECK(map_count_genus1(2, 1) == 1);
    CHECK(map_count_genus1(2, 2) == 60);
    CHECK(map_count_genus1(2, 3) == 6336);
    CHECK(map_count_genus1(2, 4) == 964224);
    CHECK(map_count_genus1(3, 1) == 10);
    CHECK(map_count_genus1(3, 2) == 4800);
    CHECK(map_count_genus1(4, 1) == 70);
    CHECK(map_count_genus1(4, 2) == 215600);
    CHECK(map_count_genus1(5, 1) == 420);
    CHECK(map_count_genus1(6, 1) == 2310);
    CHECK(map_count_genus1(7, 1) == 12012);
    CHECK(map_count_genus1(8, 1) == 60060);
}

TEST_CASE("e0: exponential generating function of genus-0 counts") {
    for (int nu = 2; nu <= 5; ++nu) {
        Series e0 = e0_series(nu, 12);
        CHECK(e0[0] == 0);
        Rational fact(1);
        for (int j = 1; j <= 12; ++j) {
            fact *= j;
            CHECK(e0[j] * fact == Rational(map_count_genus0(nu, j)));
        }
    }
    Series e0 = e0_series(2, 2);
    CHECK(e0[1] == 2);
    CHECK(e0[2] == 18);  // 36 / 2!
}

TEST_CASE("e1: exponential generating function of genus-1 counts") {
    Series e1 = e1_series(2, 2);
    CHECK(e1[0] == 0);
    CHECK(e1[1] == 1);
    CHECK(e1[2] == 30);  // 60 / 2!
    for (int nu = 2; nu <= 5; ++nu) {
        Series full = e1_series(nu, 12);
        Rational fact(1);
        for (int j = 1; j <= 12; ++j) {
            fact *= j;
            CHECK(full[j] * fact == Rational(map_count_genus1(nu, j)));
        }
    }
}

TEST_CASE("assembled genus-0 count equals the closed form") {
    CHECK(map_count_genus0_assembled(2, 1) == 2);
    CHECK(map_count_genus0_assembled(2, 2) == 36);
    CHECK(map_count_genus0_assembled(3, 1) == 5);
    for (int nu = 2; nu <= 6; ++nu)
        for (long long j = 1; j <= 20; ++j)
            CHECK(map_count_genus0_assembled(nu, j) == map_count_genus0(nu, j));
}

TEST_CASE("quotient display for powers of z") {
    for (int nu = 2; nu <= 5; ++nu)
        for (long long alpha = 0; alpha <= 5; ++alpha)
            CHECK(check_z_power_quotient(nu, alpha, 25));
    CHECK(check_z_power_quotient(2, 0, 10));
    CHECK(check_z_power_quotient(3, 2, 10));
    CHECK_THROWS_AS(check_z_power_quotient(2, -1, 10), std::invalid_argument);
}

TEST_CASE("derivative identity for z") {
    for (int nu = 2; nu <= 5; ++nu) CHECK(check_z_derivative_identity(nu, 25));
    CHECK(check_z_derivative_identity(2, 20));
    CHECK(check_z_derivative_identity(5, 10));
    CHECK(check_z_derivative_identity(3, 0));  // nothing to compare
}

TEST_CASE("two routes to the derivative of e1") {
    for (int nu = 2; nu <= 5; ++nu) {
        Series direct = e1_series(nu, 12).derivative();
        Series closed = e1_derivative_series(nu, 12).truncated(11);
        CHECK(direct == closed);
        // Constant term of e1' is the j = 1 coefficient of e1.
        CHECK(e1_derivative_series(nu, 4)[0] == Rational(map_count_genus1(nu, 1)));
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(c_const(1), std::invalid_argument);
    CHECK_THROWS_AS(map_count_genus0(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(map_count_genus1(1, 1), std::invalid_argument);
}

}  // TEST_SUITE
