#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace sharpsob {

using Integer = mpz_class;

/// Arbitrary-precision rational scalar. Backed by GMP's mpq_class, which
/// keeps results canonical (positive denominator, coprime) after every
/// arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline int sign(const Rational& v) { return sgn(v); }

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

/// Serialize as "p" or "p/q"; round-trips through parse_rational.
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Accepts "p", "p/q" and plain decimal literals ("0.5" becomes 1/2).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
        Integer num;
        if (mpz_set_str(num.get_mpz_t(), digits.c_str(), 10) != 0)
            throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
        return make_rational(num, den);
    }
    Rational r;
    if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("parse_rational: bad literal '" + text + "'");
    r.canonicalize();
    return r;
}

inline Integer factorial_integer(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Rational factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    return Rational(factorial_integer(static_cast<unsigned long>(n)));
}

/// n!! with the empty-product convention (-1)!! = 0!! = 1.
inline Rational double_factorial(long n) {
    if (n < -1) throw std::domain_error("double_factorial: argument below -1");
    if (n <= 0) return Rational(1);
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(r);
}

/// v^e for integer e (e < 0 requires v != 0).
inline Rational pow_rational(const Rational& v, long e) {
    if (e == 0) return Rational(1);
    if (v == 0 && e < 0) throw std::domain_error("pow_rational: zero to negative power");
    const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), v.get_num().get_mpz_t(), mag);
    mpz_pow_ui(den.get_mpz_t(), v.get_den().get_mpz_t(), mag);
    return e > 0 ? make_rational(num, den) : make_rational(den, num);
}

inline Integer pow_integer(long base, unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), e);
    return r;
}

namespace detail {

// Digits of |v| mapped to a fixed-point string. `exp10` is the position of
// the decimal point: |v| = 0.d1d2... * 10^exp10.
inline std::string place_decimal_point(const std::string& digits, long exp10, bool negative) {
    std::string out = negative ? "-" : "";
    const long n = static_cast<long>(digits.size());
    if (exp10 <= 0) {
        out += "0.";
        out.append(static_cast<size_t>(-exp10), '0');
        out += digits;
    } else if (exp10 >= n) {
        out += digits;
        out.append(static_cast<size_t>(exp10 - n), '0');
    } else {
        out += digits.substr(0, static_cast<size_t>(exp10));
        out += '.';
        out += digits.substr(static_cast<size_t>(exp10));
    }
    return out;
}

}  // namespace detail

/// Correctly rounded decimal expansion of v with `digits` significant
/// digits (ties to even). Zero prints as "0.00..." with digits-1 zeros.
inline std::string decimal_string(const Rational& v, int digits) {
    if (digits < 1) throw std::invalid_argument("decimal_string: digits must be >= 1");
    if (v == 0)
        return digits == 1 ? "0" : "0." + std::string(static_cast<size_t>(digits - 1), '0');

    const bool negative = sign(v) < 0;
    Integer p = abs(v.get_num());
    const Integer q = v.get_den();

    // exp10: smallest e with |v| < 10^e.
    long exp10 = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
                 static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10)) + 1;
    Integer pow10;
    auto less_than_pow = [&](long e) {
        // |v| < 10^e  <=>  p < q * 10^e  (e may be negative)
        if (e >= 0) {
            mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(e));
            return p < q * pow10;
        }
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-e));
        return p * pow10 < q;
    };
    while (!less_than_pow(exp10)) ++exp10;
    while (less_than_pow(exp10 - 1)) --exp10;

    // mantissa = round_half_even(|v| * 10^(digits - exp10))
    Integer num = p, den = q;
    const long shift = digits - exp10;
    if (shift >= 0) {
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift));
        num *= pow10;
    } else {
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
        den *= pow10;
    }
    Integer mant, rem;
    mpz_fdiv_qr(mant.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    const Integer twice = rem * 2;
    if (twice > den || (twice == den && mpz_odd_p(mant.get_mpz_t())))
        mant += 1;

    std::string ds = mant.get_str();
    if (static_cast<int>(ds.size()) > digits) {  // carry: 999.. -> 1000..
        ds = ds.substr(0, static_cast<size_t>(digits));
        ++exp10;
    }
    return detail::place_decimal_point(ds, exp10, negative);
}

}  // namespace sharpsob
