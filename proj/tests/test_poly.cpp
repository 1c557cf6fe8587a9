#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sharpsob/poly.hpp"

using namespace sharpsob;

namespace {
Poly p(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}
}  // namespace

TEST_CASE("multiplication") {
    const Poly onemx2 = p({1, 0, -1});
    CHECK(onemx2 * onemx2 == Poly({Rational(1), Rational(0), Rational(-2), Rational(0), Rational(1)}));
    CHECK((onemx2 * Poly{}).is_zero());
    const Poly l = Poly({make_rational(-1, 2), Rational(1)});
    const Poly r = Poly({make_rational(1, 2), Rational(1)});
    CHECK(l * r == Poly({make_rational(-1, 4), Rational(0), Rational(1)}));
}

TEST_CASE("differentiation") {
    CHECK(p({1, 0, -1}).derivative() == p({0, -2}));
    CHECK(p({1, 0, -2, 0, 1}).derivative(2) == p({-4, 0, 12}));
    CHECK(p({5}).derivative().is_zero());
    CHECK(Poly{}.derivative(3).is_zero());
}

TEST_CASE("interval integration") {
    CHECK(p({1, 0, -1}).integrate(Rational(-1), Rational(1)) == make_rational(4, 3));
    CHECK(Poly::monomial(1).integrate(Rational(-1), Rational(1)) == 0);
    const Poly q = Poly({make_rational(-1, 3), Rational(0), Rational(1)});
    CHECK((q * q).integrate(Rational(-1), Rational(1)) == make_rational(8, 45));
}

TEST_CASE("monic Legendre polynomials from the Rodrigues formula") {
    CHECK(monic_legendre(1) == Poly::monomial(1));
    CHECK(monic_legendre(2) == Poly({make_rational(-1, 3), Rational(0), Rational(1)}));
    CHECK(monic_legendre(3) == Poly({Rational(0), make_rational(-3, 5), Rational(0), Rational(1)}));
    CHECK_THROWS_AS(monic_legendre(0), std::invalid_argument);
}

TEST_CASE("Landau kernels") {
    CHECK(landau_kernel(1) == p({1, 0, -1}));
    CHECK(landau_kernel(2) == p({1, 0, -2, 0, 1}));
    CHECK(landau_kernel(3) == p({1, 0, -3, 0, 3, 0, -1}));
}

TEST_CASE("Legendre orthogonality and exact norms up to degree 10") {
    std::vector<Poly> legendre;
    for (int k = 1; k <= 10; ++k) legendre.push_back(monic_legendre(k));
    for (int k = 1; k <= 10; ++k) {
        for (int j = 1; j < k; ++j)
            CHECK((legendre[size_t(k - 1)] * legendre[size_t(j - 1)])
                      .integrate(Rational(-1), Rational(1)) == 0);
        const Rational norm_sq = (legendre[size_t(k - 1)] * legendre[size_t(k - 1)])
                                     .integrate(Rational(-1), Rational(1));
        const Rational df = double_factorial(2 * k - 1);
        CHECK(norm_sq == factorial(k) * factorial(k) / (df * df * make_rational(2 * k + 1, 2)));
    }
}

TEST_CASE("monic Legendre minimizes the L2 norm among monic polynomials") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 8);
    for (int k = 1; k <= 5; ++k) {
        const Poly pk = monic_legendre(k);
        const Rational base = (pk * pk).integrate(Rational(-1), Rational(1));
        for (int trial = 0; trial < 100; ++trial) {
            // random perturbation along lower-degree Legendre directions
            Poly perturbed = pk;
            Rational pythagoras = base;
            bool nonzero = false;
            for (int j = 1; j < k; ++j) {
                const Rational c = make_rational(num(rng), den(rng));
                if (c == 0) continue;
                nonzero = true;
                const Poly pj = monic_legendre(j);
                perturbed = perturbed + pj.scaled(c);
                pythagoras += c * c * (pj * pj).integrate(Rational(-1), Rational(1));
            }
            const Rational c0 = make_rational(num(rng), den(rng));
            if (c0 != 0) {
                nonzero = true;
                perturbed = perturbed + Poly::constant(c0);
                pythagoras += c0 * c0 * Rational(2);  // ||1||^2 = 2
            }
            const Rational norm_sq =
                (perturbed * perturbed).integrate(Rational(-1), Rational(1));
            CHECK(norm_sq == pythagoras);
            if (nonzero) CHECK(norm_sq > base);
        }
    }
}

TEST_CASE("division with remainder") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    std::uniform_int_distribution<int> deg(0, 6);
    auto random_poly = [&](int d) {
        std::vector<Rational> c;
        for (int i = 0; i <= d; ++i) c.push_back(make_rational(num(rng), den(rng)));
        return Poly(std::move(c));
    };
    for (int trial = 0; trial < 200; ++trial) {
        const Poly a = random_poly(deg(rng));
        Poly b = random_poly(deg(rng));
        if (b.is_zero()) b = Poly::constant(Rational(1));
        const auto [q, r] = poly_divmod(a, b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
    }
    CHECK_THROWS_AS(poly_divmod(p({1}), Poly{}), std::invalid_argument);
}

TEST_CASE("pretty printing") {
    CHECK(p({1, 0, -1}).to_string() == "-x^2 + 1");
    CHECK(Poly{}.to_string() == "0");
    CHECK(Poly({make_rational(-1, 3), Rational(0), Rational(1)}).to_string("y") == "y^2 - 1/3");
}
