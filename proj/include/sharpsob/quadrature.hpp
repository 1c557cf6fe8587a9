#pragma once

#include <stdexcept>
#include <vector>

#include "sharpsob/poly.hpp"
#include "sharpsob/sturm.hpp"

namespace sharpsob {

/// Roots of the monic Legendre polynomial of degree k as rational
/// approximants, strictly increasing and symmetric about 0, each within
/// 10^-digits of the true root. Isolation is by Sturm bisection on (0, 1)
/// with exact sign evaluation, so the brackets are certified; the zero
/// root of odd k is exact.
inline std::vector<Rational> legendre_roots(int k, int digits) {
    if (k < 1) throw std::invalid_argument("legendre_roots: k must be >= 1");
    if (digits < 1) throw std::invalid_argument("legendre_roots: digits must be >= 1");
    Poly p = monic_legendre(k);
    const bool odd = k % 2 != 0;
    if (odd) p = poly_divmod(p, Poly::monomial(1)).first;  // deflate the exact root at 0

    const Rational width = pow_rational(Rational(10), -digits);
    std::vector<Rational> positive;
    if (p.degree() >= 2) {
        // p is even with k/2 simple roots in (0, 1)
        auto brackets = isolate_roots(p, Rational(0), Rational(1));
        if (static_cast<int>(brackets.size()) != k / 2)
            throw std::logic_error("legendre_roots: isolation failed to separate the roots");
        for (const auto& [a, b] : brackets) {
            const auto [u, v] = refine_root(p, a, b, width);
            positive.push_back((u + v) / 2);
        }
    }
    std::vector<Rational> roots;
    for (auto it = positive.rbegin(); it != positive.rend(); ++it) roots.push_back(-*it);
    if (odd) roots.push_back(Rational(0));
    roots.insert(roots.end(), positive.begin(), positive.end());
    for (size_t i = 1; i < roots.size(); ++i)
        if (roots[i - 1] >= roots[i])
            throw std::logic_error("legendre_roots: refined roots are not separated");
    return roots;
}

/// Interpolatory quadrature rule on [-1, 1]. Nodes and weights are exact
/// rationals approximating the Gauss-Legendre rule; weights are the exact
/// integrals of the Lagrange cardinal polynomials at the stored nodes, so
/// they sum to 2 exactly.
struct QuadratureRule {
    std::vector<Rational> nodes;
    std::vector<Rational> weights;
    int exactness_degree = 0;

    Rational integrate(const Poly& p) const {
        Rational acc(0);
        for (size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * p.eval(nodes[i]);
        return acc;
    }
};

inline QuadratureRule gauss_rule(int n, int digits) {
    if (n < 1) throw std::invalid_argument("gauss_rule: n must be >= 1");
    QuadratureRule rule;
    rule.nodes = legendre_roots(n, digits);
    rule.exactness_degree = 2 * n - 1;
    for (int i = 0; i < n; ++i) {
        Poly cardinal = Poly::constant(Rational(1));
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            cardinal = cardinal * Poly({-rule.nodes[static_cast<size_t>(j)], Rational(1)});
            cardinal = cardinal.scaled(Rational(1) / (rule.nodes[static_cast<size_t>(i)] -
                                                      rule.nodes[static_cast<size_t>(j)]));
        }
        rule.weights.push_back(cardinal.integrate(Rational(-1), Rational(1)));
    }
    Rational total(0);
    for (const Rational& w : rule.weights) {
        if (sign(w) <= 0) throw std::logic_error("gauss_rule: nonpositive weight");
        total += w;
    }
    if (total != 2) throw std::logic_error("gauss_rule: weights do not sum to 2");
    return rule;
}

}  // namespace sharpsob
