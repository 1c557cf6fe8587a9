#pragma once

#include <mpfr.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "sharpsob/rational.hpp"

namespace sharpsob {

namespace detail {

// n = root^2 * squarefree with squarefree square-free; n > 0.
// Trial division up to cbrt leaves a cofactor with at most two prime
// factors, which is square-free unless it is a perfect square.
inline void extract_square_part(Integer n, Integer& root, Integer& squarefree) {
    root = 1;
    squarefree = 1;
    Integer p = 2;
    while (p * p * p <= n) {
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            unsigned long e = 0;
            do {
                n /= p;
                ++e;
            } while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()));
            Integer pe;
            mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e / 2);
            root *= pe;
            if (e % 2) squarefree *= p;
        }
        p += (p == 2) ? 1 : 2;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Integer s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        root *= s;
    } else {
        squarefree *= n;
    }
}

// RAII wrapper around a pair of mpfr floats holding a certified enclosure.
struct MpfrInterval {
    mpfr_t lo, hi;
    explicit MpfrInterval(mpfr_prec_t prec) {
        mpfr_init2(lo, prec);
        mpfr_init2(hi, prec);
    }
    MpfrInterval(const MpfrInterval&) = delete;
    MpfrInterval& operator=(const MpfrInterval&) = delete;
    ~MpfrInterval() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
};

inline std::string mpfr_decimal(const mpfr_t v, int digits) {
    if (mpfr_zero_p(v))
        return digits == 1 ? "0" : "0." + std::string(static_cast<size_t>(digits - 1), '0');
    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), v, MPFR_RNDN);
    std::string s(raw);
    mpfr_free_str(raw);
    const bool negative = !s.empty() && s[0] == '-';
    if (negative) s.erase(0, 1);
    return place_decimal_point(s, static_cast<long>(exp10), negative);
}

}  // namespace detail

/// Structured real of the form q * sqrt(r) * pi^e with q, r rational,
/// r >= 0 and e in {0, 1}. Canonical form pulls square factors of r into
/// q, so equality is decidable componentwise. The class is closed under
/// multiplication as long as the combined power of pi stays below 2.
class RadicalScalar {
  public:
    RadicalScalar() : coeff_(0), radicand_(1), pi_power_(0) {}

    RadicalScalar(Rational coeff, Rational radicand, int pi_power)
        : coeff_(std::move(coeff)), radicand_(std::move(radicand)), pi_power_(pi_power) {
        if (pi_power_ < 0 || pi_power_ > 1)
            throw std::domain_error("RadicalScalar: pi power must be 0 or 1");
        if (sharpsob::sign(radicand_) < 0)
            throw std::domain_error("RadicalScalar: negative radicand");
        canonicalize();
    }

    static RadicalScalar from_rational(Rational v) { return {std::move(v), Rational(1), 0}; }
    static RadicalScalar sqrt_of(Rational r) { return {Rational(1), std::move(r), 0}; }
    static RadicalScalar pi_times(Rational v) { return {std::move(v), Rational(1), 1}; }

    const Rational& coeff() const { return coeff_; }
    const Rational& radicand() const { return radicand_; }
    int pi_power() const { return pi_power_; }

    bool is_zero() const { return coeff_ == 0; }
    bool is_rational() const { return radicand_ == 1 && pi_power_ == 0; }
    int sign() const { return sharpsob::sign(coeff_); }

    RadicalScalar operator*(const RadicalScalar& other) const {
        const int e = pi_power_ + other.pi_power_;
        if (e >= 2 && coeff_ != 0 && other.coeff_ != 0)
            throw std::domain_error("RadicalScalar: product leaves the representable class (pi^2)");
        return {coeff_ * other.coeff_, radicand_ * other.radicand_, e >= 2 ? 0 : e};
    }

    RadicalScalar scaled(const Rational& f) const {
        return {coeff_ * f, radicand_, pi_power_};
    }

    /// Exact square; only defined for pi-free values.
    Rational squared_rational() const {
        if (pi_power_ != 0)
            throw std::domain_error("RadicalScalar: square of a pi multiple is not rational");
        return coeff_ * coeff_ * radicand_;
    }

    friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
        return a.coeff_ == b.coeff_ && a.radicand_ == b.radicand_ && a.pi_power_ == b.pi_power_;
    }

    /// Certified enclosure value <= [lo, hi] at the given working precision.
    void enclosure(detail::MpfrInterval& out) const {
        if (coeff_ == 0) {
            mpfr_set_zero(out.lo, 1);
            mpfr_set_zero(out.hi, 1);
            return;
        }
        // Build the magnitude with directed rounding, then apply the sign.
        const Rational mag_q = abs(coeff_);
        mpfr_set_q(out.lo, mag_q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(out.hi, mag_q.get_mpq_t(), MPFR_RNDU);
        if (radicand_ != 1) {
            detail::MpfrInterval root(mpfr_get_prec(out.lo));
            mpfr_set_q(root.lo, radicand_.get_mpq_t(), MPFR_RNDD);
            mpfr_set_q(root.hi, radicand_.get_mpq_t(), MPFR_RNDU);
            mpfr_sqrt(root.lo, root.lo, MPFR_RNDD);
            mpfr_sqrt(root.hi, root.hi, MPFR_RNDU);
            mpfr_mul(out.lo, out.lo, root.lo, MPFR_RNDD);
            mpfr_mul(out.hi, out.hi, root.hi, MPFR_RNDU);
        }
        if (pi_power_ == 1) {
            detail::MpfrInterval pi(mpfr_get_prec(out.lo));
            mpfr_const_pi(pi.lo, MPFR_RNDD);
            mpfr_const_pi(pi.hi, MPFR_RNDU);
            mpfr_mul(out.lo, out.lo, pi.lo, MPFR_RNDD);
            mpfr_mul(out.hi, out.hi, pi.hi, MPFR_RNDU);
        }
        if (sharpsob::sign(coeff_) < 0) {
            mpfr_swap(out.lo, out.hi);
            mpfr_neg(out.lo, out.lo, MPFR_RNDD);
            mpfr_neg(out.hi, out.hi, MPFR_RNDU);
        }
    }

    double to_double() const {
        detail::MpfrInterval iv(128);
        enclosure(iv);
        return mpfr_get_d(iv.lo, MPFR_RNDN);
    }

    /// Correctly rounded decimal with `digits` significant digits. Exact
    /// for rational values; otherwise refines a certified enclosure until
    /// both endpoints round to the same string (the value is irrational,
    /// so refinement terminates).
    std::string decimal(int digits) const {
        if (digits < 1) throw std::invalid_argument("RadicalScalar::decimal: digits >= 1");
        if (is_rational() || is_zero()) return decimal_string(coeff_, digits);
        for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t{1} << 22); prec *= 2) {
            detail::MpfrInterval iv(prec);
            enclosure(iv);
            const std::string a = detail::mpfr_decimal(iv.lo, digits);
            const std::string b = detail::mpfr_decimal(iv.hi, digits);
            if (a == b) return a;
        }
        throw std::logic_error("RadicalScalar::decimal: enclosure failed to separate");
    }

    /// Canonical exact text form, e.g. "sqrt(2/3)", "1/4*sqrt(2)*pi", "2/45".
    std::string exact_string() const {
        if (is_zero()) return "0";
        std::string out;
        const bool have_tail = radicand_ != 1 || pi_power_ == 1;
        if (coeff_ == 1 && have_tail) {
            // coefficient omitted
        } else if (coeff_ == -1 && have_tail) {
            out += "-";
        } else {
            out += to_string(coeff_);
            if (have_tail) out += "*";
        }
        if (radicand_ != 1) {
            out += "sqrt(" + to_string(radicand_) + ")";
            if (pi_power_ == 1) out += "*";
        }
        if (pi_power_ == 1) out += "pi";
        return out;
    }

  private:
    void canonicalize() {
        if (coeff_ == 0 || radicand_ == 0) {
            coeff_ = 0;
            radicand_ = 1;
            pi_power_ = 0;
            return;
        }
        if (radicand_ != 1) {
            Integer root_n, sf_n, root_d, sf_d;
            detail::extract_square_part(radicand_.get_num(), root_n, sf_n);
            detail::extract_square_part(radicand_.get_den(), root_d, sf_d);
            coeff_ *= make_rational(root_n, root_d);
            radicand_ = make_rational(sf_n, sf_d);
        }
    }

    Rational coeff_;
    Rational radicand_;
    int pi_power_;
};

/// Exact three-way comparison: -1, 0, +1. Values sharing the power of pi
/// compare through signs and squared rational parts; mixed powers separate
/// by enclosure refinement (equality across powers would make pi algebraic).
inline int radical_cmp(const RadicalScalar& a, const RadicalScalar& b) {
    if (a == b) return 0;
    const int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    if (a.pi_power() == b.pi_power()) {
        const Rational qa = a.coeff() * a.coeff() * a.radicand();
        const Rational qb = b.coeff() * b.coeff() * b.radicand();
        if (qa == qb) return 0;  // same canonical square and sign
        const bool mag_less = qa < qb;
        return (mag_less == (sa > 0)) ? -1 : 1;
    }
    for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t{1} << 22); prec *= 2) {
        detail::MpfrInterval ia(prec), ib(prec);
        a.enclosure(ia);
        b.enclosure(ib);
        if (mpfr_cmp(ia.hi, ib.lo) < 0) return -1;
        if (mpfr_cmp(ib.hi, ia.lo) < 0) return 1;
    }
    throw std::logic_error("radical_cmp: enclosures failed to separate");
}

/// Certifies |a - b| < tol by enclosure refinement; returns false only when
/// |a - b| > tol is certified.
inline bool radical_abs_diff_below(const RadicalScalar& a, const RadicalScalar& b,
                                   const Rational& tol) {
    for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t{1} << 22); prec *= 2) {
        detail::MpfrInterval ia(prec), ib(prec), d(prec), t(prec);
        a.enclosure(ia);
        b.enclosure(ib);
        mpfr_sub(d.lo, ia.lo, ib.hi, MPFR_RNDD);
        mpfr_sub(d.hi, ia.hi, ib.lo, MPFR_RNDU);
        mpfr_set_q(t.lo, tol.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(t.hi, tol.get_mpq_t(), MPFR_RNDU);
        detail::MpfrInterval mag(prec);
        // upper bound on |a - b|
        mpfr_abs(mag.lo, d.lo, MPFR_RNDU);
        mpfr_abs(mag.hi, d.hi, MPFR_RNDU);
        if (mpfr_cmp(mag.lo, mag.hi) > 0) mpfr_swap(mag.lo, mag.hi);
        if (mpfr_cmp(mag.hi, t.lo) < 0) return true;
        // lower bound on |a - b| is zero unless the enclosure is sign-definite
        if (mpfr_sgn(d.lo) > 0 && mpfr_cmp(d.lo, t.hi) > 0) return false;
        if (mpfr_sgn(d.hi) < 0) {
            mpfr_abs(mag.lo, d.hi, MPFR_RNDD);
            if (mpfr_cmp(mag.lo, t.hi) > 0) return false;
        }
    }
    throw std::logic_error("radical_abs_diff_below: undecided at maximum precision");
}

}  // namespace sharpsob
