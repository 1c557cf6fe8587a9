#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "sharpsob/radical.hpp"

using namespace sharpsob;

TEST_CASE("canonical form extracts square factors") {
    const RadicalScalar a(Rational(1), Rational(8), 0);  // sqrt(8) = 2 sqrt(2)
    CHECK(a.coeff() == 2);
    CHECK(a.radicand() == 2);

    const RadicalScalar b(Rational(3), make_rational(4, 9), 0);  // 3 * 2/3
    CHECK(b.is_rational());
    CHECK(b.coeff() == 2);

    const RadicalScalar c(Rational(5), make_rational(18, 75), 0);
    CHECK(c.coeff() * c.coeff() * c.radicand() == Rational(25) * make_rational(18, 75));

    // idempotence: rebuilding from canonical parts changes nothing
    const RadicalScalar again(c.coeff(), c.radicand(), c.pi_power());
    CHECK(again == c);
}

TEST_CASE("zero collapses to the canonical zero") {
    CHECK(RadicalScalar(Rational(0), Rational(7), 1).is_zero());
    CHECK(RadicalScalar(Rational(5), Rational(0), 1).is_zero());
    CHECK(RadicalScalar(Rational(0), Rational(7), 1) == RadicalScalar());
}

TEST_CASE("comparison matches the worked examples") {
    const RadicalScalar rt23(Rational(1), make_rational(2, 3), 0);
    CHECK(radical_cmp(rt23, rt23) == 0);

    const RadicalScalar upper(make_rational(1, 4), Rational(2), 1);  // pi sqrt(2)/4
    CHECK(radical_cmp(rt23, upper) == -1);
    CHECK(radical_cmp(upper, rt23) == 1);

    const RadicalScalar big(Rational(15), make_rational(7, 2), 0);
    CHECK(radical_cmp(big, RadicalScalar::from_rational(Rational(1))) == 1);
}

TEST_CASE("comparison is antisymmetric and totally orders a sample") {
    const std::vector<RadicalScalar> values = {
        RadicalScalar(),
        RadicalScalar::from_rational(Rational(-2)),
        RadicalScalar(Rational(-1), Rational(2), 0),
        RadicalScalar(Rational(1), make_rational(2, 3), 0),
        RadicalScalar(Rational(1), Rational(2), 0),
        RadicalScalar(make_rational(1, 4), Rational(2), 1),
        RadicalScalar::pi_times(Rational(1)),
        RadicalScalar(Rational(2), Rational(3), 1),
    };
    for (const auto& a : values)
        for (const auto& b : values) {
            CHECK(radical_cmp(a, b) == -radical_cmp(b, a));
            for (const auto& c : values)
                if (radical_cmp(a, b) <= 0 && radical_cmp(b, c) <= 0)
                    CHECK(radical_cmp(a, c) <= 0);
        }
}

TEST_CASE("decimal evaluation is correctly rounded") {
    CHECK(RadicalScalar(Rational(1), make_rational(2, 3), 0).decimal(7) == "0.8164966");
    CHECK(RadicalScalar(make_rational(1, 4), Rational(2), 1).decimal(5) == "1.1107");
    CHECK(RadicalScalar().decimal(3) == "0.00");
    CHECK(RadicalScalar::from_rational(make_rational(2, 3)).decimal(5) == "0.66667");
    CHECK(RadicalScalar(Rational(-1), Rational(2), 0).decimal(5) == "-1.4142");
    CHECK(RadicalScalar::pi_times(Rational(1)).decimal(6) == "3.14159");
}

TEST_CASE("products stay in the class until pi squares") {
    const RadicalScalar rt2(Rational(1), Rational(2), 0);
    CHECK((rt2 * rt2).is_rational());
    CHECK((rt2 * rt2).coeff() == 2);

    const RadicalScalar pi1 = RadicalScalar::pi_times(Rational(1));
    CHECK((rt2 * pi1).pi_power() == 1);
    CHECK_THROWS_AS(pi1 * pi1, std::domain_error);
    CHECK_THROWS_AS(RadicalScalar(Rational(1), Rational(1), 2), std::domain_error);
    CHECK_THROWS_AS(RadicalScalar(Rational(1), Rational(-2), 0), std::domain_error);
}

TEST_CASE("squares of pi-free values are exact rationals") {
    const RadicalScalar v(make_rational(2, 15), make_rational(5, 2), 0);
    CHECK(v.squared_rational() == make_rational(4, 225) * make_rational(5, 2));
    CHECK_THROWS_AS(RadicalScalar::pi_times(Rational(1)).squared_rational(), std::domain_error);
}

TEST_CASE("exact text form") {
    CHECK(RadicalScalar(Rational(1), make_rational(2, 3), 0).exact_string() == "sqrt(2/3)");
    CHECK(RadicalScalar(make_rational(1, 4), Rational(2), 1).exact_string() == "1/4*sqrt(2)*pi");
    CHECK(RadicalScalar().exact_string() == "0");
    CHECK(RadicalScalar::from_rational(make_rational(2, 45)).exact_string() == "2/45");
    CHECK(RadicalScalar(Rational(-1), Rational(2), 0).exact_string() == "-sqrt(2)");
    CHECK(RadicalScalar::pi_times(Rational(1)).exact_string() == "pi");
}

TEST_CASE("abs-difference certification") {
    const RadicalScalar a(Rational(1), Rational(2), 0);
    const RadicalScalar b = RadicalScalar::from_rational(make_rational(141421, 100000));
    CHECK(radical_abs_diff_below(a, b, make_rational(1, 10000)));
    CHECK_FALSE(radical_abs_diff_below(a, b, make_rational(1, 100000000)));
}
