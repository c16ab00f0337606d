#include <doctest.h>

#include "hicat/arith.hpp"

using namespace hicat;

TEST_SUITE("arith") {

TEST_CASE("binomial basics and out-of-range conventions") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(6, 1) == 6);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(4, -1) == 0);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(52, 5) == 2598960);
    CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial stays exact far beyond 64 bits") {
    // C(200, 100) has 59 digits; check it against Pascal's rule.
    Integer mid = binomial(200, 100);
    CHECK(mid == binomial(199, 99) + binomial(199, 100));
    CHECK(to_decimal(mid) ==
          "90548514656103281165404177077484163874504589675413336841320");
}

TEST_CASE("factorial and double factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(1) == 1);
    CHECK(double_factorial(3) == 3);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(7) == 105);
    CHECK(double_factorial(15) == 2027025);
    CHECK_THROWS_AS(double_factorial(4), std::invalid_argument);
    CHECK_THROWS_AS(double_factorial(-3), std::invalid_argument);
}

TEST_CASE("falling-factorial binomial accepts rational tops") {
    CHECK(falling_binomial(Rational(5), 2) == 10);
    CHECK(falling_binomial(Rational(1) / Rational(2), 2) == Rational(-1) / Rational(8));
    CHECK(falling_binomial(Rational(-1), 3) == -1);
    CHECK(falling_binomial(Rational(7), 0) == 1);
    CHECK(falling_binomial(Rational(7), -2) == 0);
    // Agrees with the integer binomial whenever the top is a large-enough integer.
    for (long long n = 0; n <= 12; ++n)
        for (long long k = 0; k <= n; ++k)
            CHECK(falling_binomial(Rational(n), k) == Rational(binomial(n, k)));
}

TEST_CASE("pow_integer and exact division") {
    CHECK(pow_integer(3, 0) == 1);
    CHECK(pow_integer(2, 10) == 1024);
    CHECK(pow_integer(12, 3) == 1728);
    CHECK(exact_div(84, 12) == 7);
    CHECK(exact_div(-84, 12) == -7);
    CHECK_THROWS_AS(exact_div(5, 2), std::logic_error);
    CHECK_THROWS_AS(exact_div(1, 0), std::logic_error);
}

TEST_CASE("decimal forms") {
    CHECK(to_decimal(Integer(0)) == "0");
    CHECK(to_decimal(Integer(-17)) == "-17");
    CHECK(to_decimal(Rational(3)) == "3");
    CHECK(to_decimal(Rational(3) / Rational(2)) == "3/2");
    CHECK(to_decimal(Rational(7) / Rational(-14)) == "-1/2");
}

}  // TEST_SUITE
