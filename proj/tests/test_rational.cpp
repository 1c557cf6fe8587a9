#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sharpsob/rational.hpp"

using namespace sharpsob;

TEST_CASE("factorial basics") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(10) == 3628800);
    CHECK_THROWS_AS(factorial(-1), std::domain_error);
}

TEST_CASE("double factorial with empty-product convention") {
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(8) == 384);
    CHECK_THROWS_AS(double_factorial(-2), std::domain_error);
}

TEST_CASE("factorial splitting identities up to n = 30") {
    for (long n = 0; n <= 30; ++n) {
        CHECK(factorial(2 * n) == double_factorial(2 * n) * double_factorial(2 * n - 1));
        CHECK(double_factorial(2 * n) == pow_rational(Rational(2), n) * factorial(n));
    }
}

TEST_CASE("construction canonicalizes") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    const Rational r = make_rational(1, -2);
    CHECK(r.get_den() == 2);
    CHECK(r.get_num() == -1);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic stays canonical") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 40);
    for (int i = 0; i < 200; ++i) {
        const Rational a = make_rational(num(rng), den(rng));
        const Rational b = make_rational(num(rng), den(rng));
        for (const Rational& v : {a + b, a - b, a * b}) {
            CHECK(v.get_den() > 0);
            CHECK(gcd(Integer(abs(v.get_num())), Integer(v.get_den())) == 1);
        }
    }
}

TEST_CASE("parsing accepts fractions, integers and decimal literals") {
    CHECK(parse_rational("4/6") == make_rational(2, 3));
    CHECK(parse_rational("-7") == -7);
    CHECK(parse_rational("0.5") == make_rational(1, 2));
    CHECK(parse_rational("-0.25") == make_rational(-1, 4));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("string round trip") {
    for (const char* s : {"2/3", "-1/2", "0", "120", "-7/96"}) {
        CHECK(to_string(parse_rational(s)) == s);
    }
}

TEST_CASE("decimal rendering with significant digits") {
    CHECK(decimal_string(make_rational(2, 3), 7) == "0.6666667");
    CHECK(decimal_string(Rational(0), 3) == "0.00");
    CHECK(decimal_string(Rational(120), 2) == "120");
    CHECK(decimal_string(make_rational(1, 20), 2) == "0.050");
    CHECK(decimal_string(make_rational(-1, 3), 4) == "-0.3333");
    // ties round to even
    CHECK(decimal_string(make_rational(1, 4), 1) == "0.2");
    CHECK(decimal_string(make_rational(3, 4), 1) == "0.8");
    CHECK(decimal_string(make_rational(9999, 10000), 3) == "1.00");
}
