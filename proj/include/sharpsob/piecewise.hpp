#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sharpsob/poly.hpp"
#include "sharpsob/sturm.hpp"

namespace sharpsob {

/// Piecewise polynomial on the real line with rational breakpoints.
/// pieces()[i] is valid on (b[i-1], b[i]) with b[-1] = -inf and
/// b[n] = +inf; the value at a breakpoint is taken from the piece on its
/// right, so evaluation is defined everywhere.
class PiecewisePoly {
  public:
    PiecewisePoly() : pieces_(1) {}  // identically zero

    PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces)
        : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
        if (pieces_.size() != breaks_.size() + 1)
            throw std::invalid_argument("PiecewisePoly: pieces must outnumber breakpoints by one");
        for (size_t i = 1; i < breaks_.size(); ++i)
            if (breaks_[i - 1] >= breaks_[i])
                throw std::invalid_argument("PiecewisePoly: breakpoints must increase strictly");
    }

    /// p on [lo, hi), zero elsewhere.
    static PiecewisePoly on_interval(const Poly& p, const Rational& lo, const Rational& hi) {
        if (lo >= hi || p.is_zero()) return {};
        return PiecewisePoly({lo, hi}, {Poly{}, p, Poly{}});
    }

    const std::vector<Rational>& breakpoints() const { return breaks_; }
    const std::vector<Poly>& pieces() const { return pieces_; }

    bool is_zero() const {
        for (const Poly& p : pieces_)
            if (!p.is_zero()) return false;
        return true;
    }

    // index of the piece owning x (right-closed at breakpoints)
    size_t piece_index(const Rational& x) const {
        size_t i = 0;
        while (i < breaks_.size() && x >= breaks_[i]) ++i;
        return i;
    }

    Rational eval(const Rational& x) const { return pieces_[piece_index(x)].eval(x); }

    PiecewisePoly scaled(const Rational& c) const {
        if (c == 0) return {};
        std::vector<Poly> out;
        out.reserve(pieces_.size());
        for (const Poly& p : pieces_) out.push_back(p.scaled(c));
        return PiecewisePoly(breaks_, std::move(out));
    }

    friend PiecewisePoly operator+(const PiecewisePoly& a, const PiecewisePoly& b) {
        std::vector<Rational> merged;
        merged.reserve(a.breaks_.size() + b.breaks_.size());
        std::merge(a.breaks_.begin(), a.breaks_.end(), b.breaks_.begin(), b.breaks_.end(),
                   std::back_inserter(merged));
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        std::vector<Poly> pieces;
        pieces.reserve(merged.size() + 1);
        size_t ia = 0, ib = 0;
        for (size_t r = 0; r <= merged.size(); ++r) {
            while (ia < a.breaks_.size() && (r == 0 ? false : a.breaks_[ia] <= merged[r - 1])) ++ia;
            while (ib < b.breaks_.size() && (r == 0 ? false : b.breaks_[ib] <= merged[r - 1])) ++ib;
            pieces.push_back(a.pieces_[ia] + b.pieces_[ib]);
        }
        return PiecewisePoly(std::move(merged), std::move(pieces));
    }

    /// Exact integral over [a, b] (a <= b).
    Rational integrate(const Rational& a, const Rational& b) const {
        if (a > b) throw std::invalid_argument("PiecewisePoly::integrate: reversed bounds");
        Rational acc(0);
        Rational lo = a;
        for (size_t i = 0; i <= breaks_.size() && lo < b; ++i) {
            const bool last = i == breaks_.size();
            // piece i spans (breaks_[i-1], breaks_[i])
            if (!last && breaks_[i] <= lo) continue;
            const Rational hi = last ? b : std::min(b, breaks_[i]);
            acc += pieces_[i].integrate(lo, hi);
            lo = hi;
        }
        return acc;
    }

    /// Integral over the whole line; requires the unbounded end pieces to
    /// vanish identically.
    Rational integrate_all() const {
        if (!pieces_.front().is_zero() || !pieces_.back().is_zero())
            throw std::logic_error("PiecewisePoly::integrate_all: unbounded support");
        if (breaks_.empty()) return Rational(0);
        return integrate(breaks_.front(), breaks_.back());
    }

    /// Per-piece sign certification over the whole line. Weak signs
    /// combine across pieces; a strict conflict yields a witness pair of
    /// points with opposite nonzero values. Values exactly at breakpoints
    /// follow the right-closure convention.
    IntervalSignCertificate certify_sign() const {
        std::optional<Rational> pos_at, neg_at;
        auto note = [&](const Rational& x, int s) {
            if (s > 0 && !pos_at) pos_at = x;
            if (s < 0 && !neg_at) neg_at = x;
        };
        for (size_t i = 0; i < pieces_.size(); ++i) {
            const Poly& p = pieces_[i];
            if (p.is_zero()) continue;
            const bool first = i == 0, last = i == pieces_.size() - 1;
            Rational lo, hi;
            if (first || last) {
                // unbounded piece: certify out to a bound covering every
                // root, then read the constant tail sign beyond it
                Rational bound(1);
                for (int j = 0; j < p.degree(); ++j) {
                    const Rational m = abs(p.coeff(static_cast<size_t>(j)) / p.leading()) + 1;
                    if (m > bound) bound = m;
                }
                const Rational neg_bound = -bound;
                const Rational below_first = breaks_.empty() ? neg_bound : breaks_.front() - 1;
                const Rational above_last = breaks_.empty() ? bound : breaks_.back() + 1;
                lo = first ? std::min(neg_bound, below_first) : breaks_[i - 1];
                hi = last ? std::max(bound, above_last) : breaks_[i];
                if (first) note(lo, sign(p.eval(lo)));
                if (last) note(hi, sign(p.eval(hi)));
            } else {
                lo = breaks_[i - 1];
                hi = breaks_[i];
            }
            const IntervalSignCertificate c = sharpsob::certify_sign(p, lo, hi);
            if (c.witness) return c;
            if (c.strict_point) note(*c.strict_point, sign(p.eval(*c.strict_point)));
        }
        // breakpoint values come from the right piece
        for (size_t i = 0; i < breaks_.size(); ++i)
            note(breaks_[i], sign(pieces_[i + 1].eval(breaks_[i])));
        if (pos_at && neg_at)
            return {false, false, std::make_pair(*pos_at, *neg_at), std::nullopt};
        return {!neg_at, !pos_at, std::nullopt, pos_at ? pos_at : neg_at};
    }

  private:
    std::vector<Rational> breaks_;
    std::vector<Poly> pieces_;
};

}  // namespace sharpsob
