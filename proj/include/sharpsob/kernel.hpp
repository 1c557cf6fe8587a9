#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sharpsob/piecewise.hpp"
#include "sharpsob/poly.hpp"
#include "sharpsob/sturm.hpp"

namespace sharpsob {

/// Strictly increasing interpolation nodes y_1 < ... < y_k. Input may be
/// unordered; repeated nodes are rejected rather than perturbed.
class NodeSet {
  public:
    explicit NodeSet(std::vector<Rational> nodes) : nodes_(std::move(nodes)) {
        if (nodes_.empty()) throw std::invalid_argument("NodeSet: at least one node required");
        std::sort(nodes_.begin(), nodes_.end());
        for (size_t i = 1; i < nodes_.size(); ++i)
            if (nodes_[i - 1] == nodes_[i])
                throw std::invalid_argument("NodeSet: repeated node " + to_string(nodes_[i]));
    }

    int size() const { return static_cast<int>(nodes_.size()); }
    const Rational& operator[](size_t i) const { return nodes_[i]; }
    const std::vector<Rational>& values() const { return nodes_; }

    bool within_unit_interval() const {
        return nodes_.front() >= -1 && nodes_.back() <= 1;
    }

  private:
    std::vector<Rational> nodes_;
};

/// One-sided anchor kernel
///   b_k(x, y) = (x - y)^(k-1)/(k-1)! [ 1{y<x<0} - 1{y>x>=0} ],
/// the elementary left inverse of the k-th derivative before the Lagrange
/// correction. The second indicator includes x = 0, which matches the
/// right-sided limit there.
inline Rational eval_b(int k, const Rational& x, const Rational& y) {
    if (k < 1) throw std::invalid_argument("eval_b: k must be >= 1");
    const Rational c = pow_rational(x - y, k - 1) / factorial(k - 1);
    if (y < x && x < 0) return c;
    if (y > x && x >= 0) return -c;
    return Rational(0);
}

/// x -> b_k(x, y) as a piecewise polynomial. For y < 0 the support is
/// (y, 0); for y > 0 it is [0, y). The right-closure convention agrees
/// with pointwise evaluation everywhere except the left endpoint x = y of
/// the k = 1 indicator slice, which is a single point of no consequence
/// for integrals.
inline PiecewisePoly b_slice(int k, const Rational& y) {
    if (k < 1) throw std::invalid_argument("b_slice: k must be >= 1");
    const Rational inv = Rational(1) / factorial(k - 1);
    const Poly shifted = Poly({-y, Rational(1)}).pow(static_cast<unsigned>(k - 1));  // (x-y)^(k-1)
    if (sign(y) < 0) return PiecewisePoly::on_interval(shifted.scaled(inv), y, Rational(0));
    if (sign(y) > 0) return PiecewisePoly::on_interval(shifted.scaled(-inv), Rational(0), y);
    return {};
}

/// Lagrange cardinal basis on a node set: k polynomials of degree k-1
/// with p_n(y_m) = delta_nm.
inline std::vector<Poly> lagrange_basis(const NodeSet& nodes) {
    const int k = nodes.size();
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(k));
    for (int n = 0; n < k; ++n) {
        Poly p = Poly::constant(Rational(1));
        for (int j = 0; j < k; ++j) {
            if (j == n) continue;
            p = p * Poly({-nodes[static_cast<size_t>(j)], Rational(1)});
            p = p.scaled(Rational(1) /
                         (nodes[static_cast<size_t>(n)] - nodes[static_cast<size_t>(j)]));
        }
        out.push_back(std::move(p));
    }
    return out;
}

/// Corrected kernel B_k(x, y) = b_k(x, y) - sum_n p_n(y) b_k(x, y_n).
/// Subtracting the Lagrange interpolant in y keeps the left-inverse
/// property while forcing B_k(x, y_n) = 0, which makes x -> B_k(x, y)
/// continuous across x = 0 and of constant sign for each fixed y.
class KernelB {
  public:
    KernelB(int k, NodeSet nodes)
        : k_(k), nodes_(std::move(nodes)), lagrange_(lagrange_basis(nodes_)) {
        if (k_ < 1) throw std::invalid_argument("KernelB: k must be >= 1");
        if (nodes_.size() != k_)
            throw std::invalid_argument("KernelB: need exactly k nodes");
        anchor_slices_.reserve(static_cast<size_t>(k_));
        for (int n = 0; n < k_; ++n)
            anchor_slices_.push_back(b_slice(k_, nodes_[static_cast<size_t>(n)]));
    }

    int k() const { return k_; }
    const NodeSet& nodes() const { return nodes_; }
    const std::vector<Poly>& lagrange() const { return lagrange_; }
    const std::vector<PiecewisePoly>& anchor_slices() const { return anchor_slices_; }

    /// Exact pointwise evaluation of B_k.
    Rational eval(const Rational& x, const Rational& y) const {
        Rational acc = eval_b(k_, x, y);
        for (int n = 0; n < k_; ++n)
            acc -= lagrange_[static_cast<size_t>(n)].eval(y) *
                   eval_b(k_, x, nodes_[static_cast<size_t>(n)]);
        return acc;
    }

    /// x -> B_k(x, y) as a piecewise polynomial (right-closed pieces).
    PiecewisePoly x_slice(const Rational& y) const {
        PiecewisePoly acc = b_slice(k_, y);
        for (int n = 0; n < k_; ++n) {
            const Rational w = lagrange_[static_cast<size_t>(n)].eval(y);
            if (w != 0) acc = acc + anchor_slices_[static_cast<size_t>(n)].scaled(-w);
        }
        return acc;
    }

  private:
    int k_;
    NodeSet nodes_;
    std::vector<Poly> lagrange_;
    std::vector<PiecewisePoly> anchor_slices_;
};

/// Exact integral of b_k(., y) over the whole line; equals (-y)^k / k!.
inline Rational vertical_integral_b(int k, const Rational& y) {
    return b_slice(k, y).integrate_all();
}

/// The polynomial y -> k! Int_{-1}^{1} B_k(x, y) dx, assembled from the
/// exact per-node integrals of b_k. When all nodes lie in [-1, 1] this
/// must equal (-1)^k prod_n (y - y_n) coefficient by coefficient, and the
/// function asserts that identity before returning. (The sign convention
/// makes the product monic for even k and negated-monic for odd k; only
/// the L2 norm of the result matters downstream.)
inline Poly vertical_integral_poly(const KernelB& kb) {
    const int k = kb.k();
    const Rational kfac = factorial(k);
    Poly out = Poly::monomial(k, Rational(k % 2 == 0 ? 1 : -1));  // (-y)^k
    for (int n = 0; n < k; ++n) {
        const Rational vn =
            kfac * kb.anchor_slices()[static_cast<size_t>(n)].integrate(Rational(-1), Rational(1));
        out = out - kb.lagrange()[static_cast<size_t>(n)].scaled(vn);
    }
    if (kb.nodes().within_unit_interval()) {
        const Poly product =
            Poly::from_roots(kb.nodes().values()).scaled(Rational(k % 2 == 0 ? 1 : -1));
        if (!(out == product))
            throw std::logic_error("vertical_integral_poly: monic identity violated");
    }
    return out;
}

/// Jump of x -> B_k(x, y) across x = 0 as a polynomial in y:
///   [(-y)^(k-1) - sum_n p_n(y) (-y_n)^(k-1)] / (k-1)!.
/// A degree <= k-1 polynomial vanishing at all k nodes, hence identically
/// zero; asserted exactly before returning.
inline Poly continuity_jump_poly(const KernelB& kb) {
    const int k = kb.k();
    const Rational inv = Rational(1) / factorial(k - 1);
    Poly out = Poly::monomial(k - 1, Rational(k % 2 == 0 ? -1 : 1)).scaled(inv);
    for (int n = 0; n < k; ++n) {
        const Rational vn = pow_rational(-kb.nodes()[static_cast<size_t>(n)], k - 1) * inv;
        out = out - kb.lagrange()[static_cast<size_t>(n)].scaled(vn);
    }
    if (!out.is_zero())
        throw std::logic_error("continuity_jump_poly: nonzero jump across x = 0");
    return out;
}

enum class CertifyMode { sampled, exact };

/// Outcome of a constant-sign check of x -> B_k(x, y). nonneg and nonpos
/// are both true for an identically zero slice. A violation carries two x
/// values where the slice takes strictly opposite signs (this would
/// falsify the constant-sign property and is never expected).
struct SignReport {
    bool nonneg = false;
    bool nonpos = false;
    bool exact = false;
    std::optional<std::pair<Rational, Rational>> witness;

    bool violation() const { return witness.has_value(); }
};

/// Constant-sign certificate for the slice x -> B_k(x, y). Sampled mode
/// evaluates on a uniform rational grid plus all breakpoints; exact mode
/// certifies each polynomial piece by Sturm root isolation and checks the
/// pointwise breakpoint values as well.
inline SignReport sign_certificate(const KernelB& kb, const Rational& y,
                                   CertifyMode mode = CertifyMode::sampled,
                                   int grid_points = 512) {
    SignReport report;
    report.exact = mode == CertifyMode::exact;
    if (mode == CertifyMode::exact) {
        const PiecewisePoly slice = kb.x_slice(y);
        const IntervalSignCertificate c = slice.certify_sign();
        std::optional<Rational> pos_at, neg_at;
        auto note = [&](const Rational& x) {
            const int s = sign(kb.eval(x, y));
            if (s > 0 && !pos_at) pos_at = x;
            if (s < 0 && !neg_at) neg_at = x;
        };
        if (c.witness) {
            // witness points are piece-interior, where the piecewise and
            // pointwise values agree
            note(c.witness->first);
            note(c.witness->second);
        }
        if (c.strict_point) note(*c.strict_point);
        // the piecewise representation can differ from the pointwise kernel
        // on the null set of breakpoints when k = 1; re-check those exactly
        for (const Rational& x : slice.breakpoints()) note(x);
        report.nonneg = !neg_at;
        report.nonpos = !pos_at;
        if (pos_at && neg_at) report.witness = std::make_pair(*pos_at, *neg_at);
        return report;
    }

    Rational lo = std::min({Rational(0), y, kb.nodes()[0]});
    Rational hi = std::max({Rational(0), y, kb.nodes()[static_cast<size_t>(kb.k() - 1)]});
    if (lo == hi) { lo -= 1; hi += 1; }
    std::vector<Rational> xs = kb.x_slice(y).breakpoints();
    for (int i = 0; i <= grid_points; ++i)
        xs.push_back(lo + (hi - lo) * Rational(i) / Rational(grid_points));
    std::optional<Rational> pos_at, neg_at;
    for (const Rational& x : xs) {
        const int s = sign(kb.eval(x, y));
        if (s > 0 && !pos_at) pos_at = x;
        if (s < 0 && !neg_at) neg_at = x;
    }
    report.nonneg = !neg_at;
    report.nonpos = !pos_at;
    if (pos_at && neg_at) {
        report.nonneg = report.nonpos = false;
        report.witness = std::make_pair(*pos_at, *neg_at);
    }
    return report;
}

/// Default probe abscissae for the reproduction check; they straddle the
/// discontinuity line x = 0 of the anchor kernel.
inline std::vector<Rational> default_reproduce_probes() {
    return {make_rational(-9, 10), make_rational(-1, 2), make_rational(-1, 10), Rational(0),
            make_rational(1, 10),  make_rational(1, 2),  make_rational(9, 10)};
}

/// Checks the left-inverse property Int B_k(x, y) f^(k)(y) dy = f(x) at
/// the probe points and returns the largest absolute deviation (exactly
/// zero when everything is consistent). f must be divisible by
/// (1 - x^2)^k, which places it in the admissible Sobolev class.
inline Rational reproduce(const KernelB& kb, const Poly& f,
                          const std::vector<Rational>& probes = default_reproduce_probes()) {
    const int k = kb.k();
    if (!f.is_zero()) {
        const auto [quot, rem] = poly_divmod(f, landau_kernel(k));
        (void)quot;
        if (!rem.is_zero())
            throw std::invalid_argument("reproduce: f is not divisible by (1-x^2)^k");
    }
    const Poly fk = f.derivative(k);
    const Rational inv = Rational(1) / factorial(k - 1);
    Rational worst(0);
    for (const Rational& x : probes) {
        // B_k(x, .) in y: a polynomial correction plus a one-sided cut at y = x
        Poly correction;  // -sum_n p_n(y) b_k(x, y_n)
        for (int n = 0; n < k; ++n)
            correction = correction - kb.lagrange()[static_cast<size_t>(n)].scaled(
                                          eval_b(k, x, kb.nodes()[static_cast<size_t>(n)]));
        // (x - y)^(k-1) as a polynomial in y
        Poly cut = Poly({x, Rational(-1)}).pow(static_cast<unsigned>(k - 1)).scaled(inv);
        Poly low = correction, high = correction;
        if (sign(x) >= 0) high = high - cut;  // y > x: -(x-y)^(k-1)/(k-1)!
        else low = low + cut;                 // y < x: +(x-y)^(k-1)/(k-1)!
        const Rational split = std::max(Rational(-1), std::min(Rational(1), x));
        const Rational integral = (low * fk).integrate(Rational(-1), split) +
                                  (high * fk).integrate(split, Rational(1));
        const Rational dev = abs(integral - f.eval(x));
        if (dev > worst) worst = dev;
    }
    return worst;
}

/// Brute-force check of the interpolation obstruction: a polynomial of
/// degree <= k-1 agreeing with y^(k-1) 1{y>0} at k+1 distinct points is
/// either y^(k-1) or 0, forcing the points onto one side of the origin.
struct LemmaReport {
    int k = 0;
    std::vector<Rational> points;
    bool full_match_found = false;
    Poly matched;             // the interpolant through all k+1 points, when one exists
    bool match_is_monomial = false;  // matched == y^(k-1)
    bool match_is_zero = false;
    bool all_nonneg = false;
    bool all_nonpos = false;

    /// The statement under test: any full match is y^(k-1) or 0 and the
    /// points do not straddle the origin.
    bool statement_holds() const {
        if (!full_match_found) return true;
        return (match_is_monomial || match_is_zero) && (all_nonneg || all_nonpos);
    }
};

inline LemmaReport verify_lemma_interpolation(int k, std::vector<Rational> points) {
    if (k < 1) throw std::invalid_argument("verify_lemma_interpolation: k must be >= 1");
    if (static_cast<int>(points.size()) != k + 1)
        throw std::invalid_argument("verify_lemma_interpolation: need exactly k+1 points");
    std::sort(points.begin(), points.end());
    for (size_t i = 1; i < points.size(); ++i)
        if (points[i - 1] == points[i])
            throw std::invalid_argument("verify_lemma_interpolation: repeated point");

    auto f = [k](const Rational& y) {
        return sign(y) > 0 ? pow_rational(y, k - 1) : Rational(0);
    };

    LemmaReport report;
    report.k = k;
    report.points = points;
    report.all_nonneg = sign(points.front()) >= 0;
    report.all_nonpos = sign(points.back()) <= 0;

    // try every k-subset: interpolate there, test at the left-out point
    for (size_t leave = 0; leave < points.size(); ++leave) {
        std::vector<Rational> sub;
        for (size_t i = 0; i < points.size(); ++i)
            if (i != leave) sub.push_back(points[i]);
        const NodeSet node_set(sub);
        const auto basis = lagrange_basis(node_set);
        Poly q;
        for (size_t n = 0; n < sub.size(); ++n) q = q + basis[n].scaled(f(node_set[n]));
        if (q.eval(points[leave]) == f(points[leave])) {
            report.full_match_found = true;
            report.matched = q;
            report.match_is_monomial = q == Poly::monomial(k - 1);
            report.match_is_zero = q.is_zero();
            break;
        }
    }
    return report;
}

}  // namespace sharpsob
