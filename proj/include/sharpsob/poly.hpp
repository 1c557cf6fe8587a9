#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sharpsob/rational.hpp"

namespace sharpsob {

/// Dense univariate polynomial with rational coefficients. The coefficient
/// at index i multiplies x^i; trailing zeros are trimmed, so the zero
/// polynomial has an empty coefficient vector and degree() == -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly constant(Rational c) { return Poly({std::move(c)}); }

    static Poly monomial(int degree, Rational c = Rational(1)) {
        if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
        std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
        v.back() = std::move(c);
        return Poly(std::move(v));
    }

    /// prod (x - r) over the given roots.
    static Poly from_roots(std::span<const Rational> roots) {
        Poly p = constant(Rational(1));
        for (const Rational& r : roots) p = p * Poly({-r, Rational(1)});
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational coeff(size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    const Rational& leading() const {
        if (is_zero()) throw std::logic_error("Poly::leading: zero polynomial");
        return coeffs_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return Poly(std::move(out));
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    Poly operator-() const {
        std::vector<Rational> out(coeffs_.size());
        for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
        return Poly(std::move(out));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(out));
    }

    friend Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }

    Poly scaled(const Rational& c) const {
        if (c == 0) return {};
        std::vector<Rational> out(coeffs_.size());
        for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = c * coeffs_[i];
        return Poly(std::move(out));
    }

    Poly pow(unsigned e) const {
        Poly r = constant(Rational(1));
        for (unsigned i = 0; i < e; ++i) r = r * (*this);
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Rational eval(const Rational& x) const {
        Rational r(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly derivative(int times = 1) const {
        if (times < 0) throw std::invalid_argument("Poly::derivative: negative order");
        Poly p = *this;
        for (int t = 0; t < times; ++t) {
            if (p.coeffs_.size() <= 1) return {};
            std::vector<Rational> out(p.coeffs_.size() - 1);
            for (size_t i = 1; i < p.coeffs_.size(); ++i)
                out[i - 1] = Rational(static_cast<long>(i)) * p.coeffs_[i];
            p = Poly(std::move(out));
        }
        return p;
    }

    /// Antiderivative with zero constant term.
    Poly antiderivative() const {
        if (is_zero()) return {};
        std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            out[i + 1] = coeffs_[i] / Rational(static_cast<long>(i) + 1);
        return Poly(std::move(out));
    }

    /// Exact integral over [a, b].
    Rational integrate(const Rational& a, const Rational& b) const {
        const Poly f = antiderivative();
        return f.eval(b) - f.eval(a);
    }

    std::string to_string(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i] == 0) continue;
            if (!out.empty()) out += sign(coeffs_[i]) < 0 ? " - " : " + ";
            else if (sign(coeffs_[i]) < 0) out += "-";
            const Rational mag = abs(coeffs_[i]);
            if (i == 0) {
                out += sharpsob::to_string(mag);
            } else {
                if (mag != 1) out += sharpsob::to_string(mag) + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// Quotient and remainder of exact polynomial division.
inline std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    std::vector<Rational> rem(num.coefficients());
    const int dd = den.degree();
    if (num.degree() < dd) return {Poly{}, num};
    std::vector<Rational> quot(static_cast<size_t>(num.degree() - dd) + 1, Rational(0));
    for (int i = num.degree(); i >= dd; --i) {
        const Rational f = rem[static_cast<size_t>(i)] / den.leading();
        if (f == 0) continue;
        quot[static_cast<size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<size_t>(i - dd + j)] -= f * den.coeff(static_cast<size_t>(j));
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

/// Monic Legendre polynomial of degree k via the Rodrigues formula
/// P_k(y) = k!/(2k)! d^k/dy^k (y^2 - 1)^k. Orthogonal on [-1, 1] to all
/// polynomials of lower degree.
inline Poly monic_legendre(int k) {
    if (k < 1) throw std::invalid_argument("monic_legendre: k must be >= 1");
    const Poly w = Poly({Rational(-1), Rational(0), Rational(1)}).pow(static_cast<unsigned>(k));
    const Rational scale = factorial(k) / factorial(2 * k);
    return w.derivative(k).scaled(scale);
}

/// Landau kernel (1 - x^2)^k, expanded.
inline Poly landau_kernel(int k) {
    if (k < 1) throw std::invalid_argument("landau_kernel: k must be >= 1");
    return Poly({Rational(1), Rational(0), Rational(-1)}).pow(static_cast<unsigned>(k));
}

}  // namespace sharpsob
