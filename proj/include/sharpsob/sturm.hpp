#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sharpsob/poly.hpp"

namespace sharpsob {

inline Poly make_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rational(1) / p.leading());
}

/// Monic gcd over the rationals (Euclidean remainders, renormalized each
/// step to keep coefficient growth in check).
inline Poly poly_gcd(Poly a, Poly b) {
    a = make_monic(a);
    b = make_monic(b);
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = make_monic(r);
    }
    return a;
}

/// Yun's squarefree decomposition: returns f with p = lc * prod f[i]^(i+1)
/// and the f[i] squarefree, pairwise coprime, monic.
inline std::vector<Poly> squarefree_decomposition(const Poly& p) {
    std::vector<Poly> factors;
    if (p.degree() < 1) return factors;
    const Poly pm = make_monic(p);
    Poly g = poly_gcd(pm, pm.derivative());
    if (g.degree() == 0) {
        factors.push_back(pm);
        return factors;
    }
    Poly b = poly_divmod(pm, g).first;
    Poly c = poly_divmod(pm.derivative().scaled(Rational(1) / pm.leading()), g).first;
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly f = poly_gcd(b, d);
        factors.push_back(make_monic(f));
        b = poly_divmod(b, f).first;
        c = poly_divmod(d, f).first;
        d = c - b.derivative();
    }
    return factors;
}

/// Product of the squarefree factors of odd multiplicity: p changes sign
/// exactly at the real roots of this polynomial.
inline Poly odd_multiplicity_part(const Poly& p) {
    if (p.degree() < 1) return Poly::constant(Rational(1));
    Poly out = Poly::constant(Rational(1));
    const auto factors = squarefree_decomposition(p);
    for (size_t i = 0; i < factors.size(); ++i)
        if (i % 2 == 0) out = out * factors[i];
    return out;
}

/// Canonical Sturm chain of a polynomial.
class SturmChain {
  public:
    static SturmChain build(const Poly& p) {
        SturmChain c;
        if (p.is_zero()) return c;
        c.seq_.push_back(p);
        if (p.degree() >= 1) {
            c.seq_.push_back(p.derivative());
            while (c.seq_.back().degree() >= 1) {
                Poly r = poly_divmod(c.seq_[c.seq_.size() - 2], c.seq_.back()).second;
                if (r.is_zero()) break;
                c.seq_.push_back(-r);
            }
        }
        return c;
    }

    int variations_at(const Rational& x) const {
        int count = 0, prev = 0;
        for (const Poly& p : seq_) {
            const int s = sign(p.eval(x));
            if (s != 0) {
                if (prev != 0 && s != prev) ++count;
                prev = s;
            }
        }
        return count;
    }

    const std::vector<Poly>& sequence() const { return seq_; }

  private:
    std::vector<Poly> seq_;
};

/// Number of distinct real roots of a squarefree polynomial in (a, b].
/// Requires p(a) != 0.
inline int count_roots(const SturmChain& chain, const Rational& a, const Rational& b) {
    return chain.variations_at(a) - chain.variations_at(b);
}

/// Isolating intervals for the real roots of a squarefree polynomial in
/// (lo, hi), requiring p(lo) != 0 and p(hi) != 0. Each returned interval
/// (u, v) contains exactly one root strictly inside; p(u) and p(v) are
/// nonzero with opposite signs.
inline std::vector<std::pair<Rational, Rational>> isolate_roots(const Poly& p,
                                                                const Rational& lo,
                                                                const Rational& hi) {
    if (p.eval(lo) == 0 || p.eval(hi) == 0)
        throw std::invalid_argument("isolate_roots: root at an endpoint");
    const SturmChain chain = SturmChain::build(p);
    std::vector<std::pair<Rational, Rational>> out;
    std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
    while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        const int n = count_roots(chain, a, b);
        if (n == 0) continue;
        if (n == 1) {
            out.emplace_back(a, b);
            continue;
        }
        Rational mid = (a + b) / 2;
        while (p.eval(mid) == 0) mid = (a + mid) / 2;  // nudge off an exact root
        stack.emplace_back(a, mid);
        stack.emplace_back(mid, b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Shrinks an isolating interval of a squarefree polynomial by bisection
/// until its width is at most `width`; sign change is preserved, so the
/// certificate survives refinement. Returns the refined interval.
inline std::pair<Rational, Rational> refine_root(const Poly& p, Rational a, Rational b,
                                                 const Rational& width) {
    int sa = sign(p.eval(a));
    if (sa == 0) return {a, a};
    while (b - a > width) {
        const Rational mid = (a + b) / 2;
        const int sm = sign(p.eval(mid));
        if (sm == 0) return {mid, mid};
        if (sm == sa) a = mid;
        else b = mid;
    }
    return {a, b};
}

/// Sign certificate for a polynomial on a bounded open interval.
/// nonneg/nonpos are weak statements (the identically-zero polynomial
/// satisfies both); a strict sign change carries a witness pair of points
/// with opposite strict signs. For one-signed nonzero polynomials,
/// strict_point records an interior point with nonzero value.
struct IntervalSignCertificate {
    bool nonneg = false;
    bool nonpos = false;
    std::optional<std::pair<Rational, Rational>> witness;
    std::optional<Rational> strict_point;
};

namespace detail {

// A sample point x in (a, b) with s(x) != 0, assuming s is not identically
// zero on the interval (s has finitely many roots).
inline Rational nonzero_sample(const Poly& s, const Rational& a, const Rational& b) {
    Rational step = (b - a) / 2;
    while (true) {
        for (Rational x = a + step; x < b; x += step)
            if (s.eval(x) != 0) return x;
        step /= 2;
    }
}

}  // namespace detail

/// Certifies the sign of s on the open interval (lo, hi) by Sturm root
/// counting on the odd-multiplicity part: s changes sign in the interval
/// iff that part has a root there, and each isolated root is checked by
/// exact evaluation at the bracket endpoints.
inline IntervalSignCertificate certify_sign(const Poly& s, const Rational& lo,
                                            const Rational& hi) {
    if (lo >= hi) throw std::invalid_argument("certify_sign: empty interval");
    if (s.is_zero()) return {true, true, std::nullopt, std::nullopt};

    // Strip exact endpoint roots; (x - lo)^a is positive inside, and
    // (x - hi)^b contributes a fixed sign (-1)^b.
    Poly s2 = s;
    int flip = 1;
    for (const bool at_hi : {false, true}) {
        const Rational& e = at_hi ? hi : lo;
        while (!s2.is_zero() && s2.eval(e) == 0) {
            s2 = poly_divmod(s2, Poly({-e, Rational(1)})).first;
            if (at_hi) flip = -flip;
        }
    }
    if (s2.is_zero()) return {true, true, std::nullopt, std::nullopt};

    if (s2.degree() >= 1) {
        // every root of the odd part is a root of s2, so the stripped
        // endpoints cannot be roots of it
        const Poly odd = odd_multiplicity_part(s2);
        if (odd.degree() >= 1) {
            for (const auto& [u0, v0] : isolate_roots(odd, lo, hi)) {
                Rational u = u0, v = v0;
                std::optional<Rational> exact_root;
                // shrink the bracket until s2 is nonzero at both ends (the
                // even-multiplicity roots are finitely many)
                while (s2.eval(u) == 0 || s2.eval(v) == 0) {
                    auto shrunk = refine_root(odd, u, v, (v - u) / 4);
                    if (shrunk.first == shrunk.second) {
                        exact_root = shrunk.first;
                        break;
                    }
                    u = shrunk.first;
                    v = shrunk.second;
                }
                if (exact_root) {
                    // rational root of odd multiplicity: sample strictly
                    // inside the isolating bracket on both sides
                    const Rational a = detail::nonzero_sample(s2, u0, *exact_root);
                    const Rational b = detail::nonzero_sample(s2, *exact_root, v0);
                    if (sign(s2.eval(a)) != sign(s2.eval(b)))
                        return {false, false, std::make_pair(a, b), std::nullopt};
                } else if (sign(s2.eval(u)) * sign(s2.eval(v)) < 0) {
                    return {false, false, std::make_pair(u, v), std::nullopt};
                }
            }
        }
    }
    const Rational sample = detail::nonzero_sample(s2, lo, hi);
    const int sgn_inside = flip * sign(s2.eval(sample));
    return {sgn_inside > 0, sgn_inside < 0, std::nullopt, sample};
}

}  // namespace sharpsob
