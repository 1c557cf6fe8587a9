#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sharpsob/linalg.hpp"
#include "sharpsob/poly.hpp"
#include "sharpsob/radical.hpp"

namespace sharpsob {

/// Polynomial trial spaces for the Rayleigh-quotient discretization.
/// landau_weighted uses (1-x^2)^k x^n and therefore contains the extremal
/// function; landau_excluded uses (1-x^2)^(k+1) x^n, which strictly avoids
/// it and approaches the sharp constant from below.
enum class BasisSpec { landau_weighted, landau_excluded };

inline std::string to_string(BasisSpec spec) {
    return spec == BasisSpec::landau_weighted ? "landau_weighted" : "landau_excluded";
}

/// Exactly assembled Galerkin system for the clamped problem of order 2k:
/// gram[m][n] = Int phi_m^(k) phi_n^(k), load[n] = Int phi_n, both over
/// [-1, 1]. Every basis element carries the weight (1-x^2)^k (or higher),
/// so the clamped boundary conditions phi^(j)(+-1) = 0, j < k, hold by
/// construction and are asserted by exact evaluation.
struct GalerkinSystem {
    int k = 0;
    BasisSpec spec = BasisSpec::landau_weighted;
    std::vector<Poly> basis;
    RatMat gram;
    RatVec load;
};

inline GalerkinSystem assemble_galerkin(int k, BasisSpec spec, int size) {
    if (k < 1) throw std::invalid_argument("assemble_galerkin: k must be >= 1");
    if (size < 1) throw std::invalid_argument("assemble_galerkin: size must be >= 1");
    GalerkinSystem sys;
    sys.k = k;
    sys.spec = spec;
    const Poly weight = landau_kernel(spec == BasisSpec::landau_weighted ? k : k + 1);
    for (int n = 0; n < size; ++n) {
        const Poly phi = weight * Poly::monomial(n);
        for (int j = 0; j < k; ++j) {
            if (phi.derivative(j).eval(Rational(-1)) != 0 ||
                phi.derivative(j).eval(Rational(1)) != 0)
                throw std::logic_error("assemble_galerkin: clamped boundary condition violated");
        }
        sys.basis.push_back(phi);
    }
    std::vector<Poly> dk;
    dk.reserve(sys.basis.size());
    for (const Poly& phi : sys.basis) dk.push_back(phi.derivative(k));
    sys.gram.assign(static_cast<size_t>(size), RatVec(static_cast<size_t>(size), Rational(0)));
    for (int m = 0; m < size; ++m)
        for (int n = m; n < size; ++n) {
            Rational v = (dk[static_cast<size_t>(m)] * dk[static_cast<size_t>(n)])
                             .integrate(Rational(-1), Rational(1));
            sys.gram[static_cast<size_t>(m)][static_cast<size_t>(n)] = v;
            sys.gram[static_cast<size_t>(n)][static_cast<size_t>(m)] = v;
        }
    for (const Poly& phi : sys.basis)
        sys.load.push_back(phi.integrate(Rational(-1), Rational(1)));
    return sys;
}

/// Squared best constant over the trial space: the maximum of
/// (Int u)^2 / ||u^(k)||^2, computed exactly as load^T gram^-1 load. This
/// equals the subspace Rayleigh bound because the minimizing u is a
/// nonnegative function whenever the trial space contains the extremal,
/// and is always a lower bound for the squared sharp constant.
inline Rational constrained_min(const GalerkinSystem& sys) {
    const Ldlt f = ldlt_decompose(sys.gram);
    if (!f.positive_definite)
        throw std::logic_error("constrained_min: Gram matrix is not positive definite");
    return dot(sys.load, ldlt_solve(f, sys.load));
}

struct SweepRow {
    int size = 0;
    Rational c_squared;  // subspace value
    Rational gap;        // sharp c^2 minus the subspace value
};

/// Subspace values for sizes 1..max_size against the closed-form target.
/// Nested spaces make the sequence nondecreasing; parity of the monomial
/// ladder makes it advance only at even-power additions.
inline std::vector<SweepRow> convergence_sweep(int k, BasisSpec spec, int max_size,
                                               const Rational& c_squared_target) {
    if (max_size < 1) throw std::invalid_argument("convergence_sweep: max_size must be >= 1");
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<size_t>(max_size));
    for (int size = 1; size <= max_size; ++size) {
        const Rational v = constrained_min(assemble_galerkin(k, spec, size));
        rows.push_back({size, v, c_squared_target - v});
    }
    return rows;
}

/// Outcome of the sign-pattern fixed-point iteration for the nonlinear
/// eigenvalue problem (-1)^k u^(2k) = lambda (u/|u|) ||u||_1.
struct FixedPointResult {
    Rational lambda;
    RatVec coefficients;          // normalized so the surrogate L1 norm is 1
    int iterations = 0;
    bool sign_pattern_stable = false;
    bool positive_pattern = false;  // minimizer nonnegative on the grid
};

/// Discretized fixed-point iteration: freeze s = sign(u) on a uniform
/// rational grid, solve gram c = load_s with load_s[n] = Int phi_n s,
/// and repeat until the sign pattern reproduces itself. At a stable
/// positive pattern lambda equals the reciprocal subspace constant.
/// Midpoint signs of 0 count as +1.
inline FixedPointResult bvp_fixed_point(const GalerkinSystem& sys, const RatVec& init,
                                        int max_iter, int grid_points = 257) {
    if (init.size() != sys.basis.size())
        throw std::invalid_argument("bvp_fixed_point: init size mismatch");
    if (max_iter < 1) throw std::invalid_argument("bvp_fixed_point: max_iter must be >= 1");
    if (grid_points < 2) throw std::invalid_argument("bvp_fixed_point: grid too small");
    bool nonzero = false;
    for (const Rational& c : init) nonzero = nonzero || c != 0;
    if (!nonzero) throw std::invalid_argument("bvp_fixed_point: init must be nonzero");

    const int cells = grid_points - 1;
    std::vector<Rational> grid;
    grid.reserve(static_cast<size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i)
        grid.push_back(Rational(-1) + make_rational(2 * i, cells));

    auto pattern_of = [&](const RatVec& coeffs) {
        std::vector<int> s(static_cast<size_t>(cells));
        for (int i = 0; i < cells; ++i) {
            const Rational mid = (grid[static_cast<size_t>(i)] + grid[static_cast<size_t>(i) + 1]) / 2;
            Rational u(0);
            for (size_t n = 0; n < coeffs.size(); ++n)
                u += coeffs[n] * sys.basis[n].eval(mid);
            s[static_cast<size_t>(i)] = sign(u) < 0 ? -1 : 1;
        }
        return s;
    };
    // cell integrals of each basis function, for the signed load
    std::vector<RatVec> cell_int(sys.basis.size(), RatVec(static_cast<size_t>(cells)));
    for (size_t n = 0; n < sys.basis.size(); ++n) {
        const Poly anti = sys.basis[n].antiderivative();
        for (int i = 0; i < cells; ++i)
            cell_int[n][static_cast<size_t>(i)] =
                anti.eval(grid[static_cast<size_t>(i) + 1]) - anti.eval(grid[static_cast<size_t>(i)]);
    }

    const Ldlt f = ldlt_decompose(sys.gram);
    if (!f.positive_definite)
        throw std::logic_error("bvp_fixed_point: Gram matrix is not positive definite");

    FixedPointResult result;
    std::vector<int> pattern = pattern_of(init);
    RatVec coeffs = init;
    RatVec load_s(sys.basis.size());
    for (int iter = 1; iter <= max_iter; ++iter) {
        for (size_t n = 0; n < sys.basis.size(); ++n) {
            Rational acc(0);
            for (int i = 0; i < cells; ++i)
                acc += Rational(pattern[static_cast<size_t>(i)]) * cell_int[n][static_cast<size_t>(i)];
            load_s[n] = acc;
        }
        coeffs = ldlt_solve(f, load_s);
        result.iterations = iter;
        const std::vector<int> next = pattern_of(coeffs);
        if (next == pattern) {
            result.sign_pattern_stable = true;
            break;
        }
        pattern = next;
    }

    const Rational energy = dot(coeffs, mat_vec(sys.gram, coeffs));
    const Rational mass = dot(coeffs, load_s);  // surrogate L1 norm under the frozen signs
    if (mass == 0) throw std::logic_error("bvp_fixed_point: degenerate iterate");
    result.lambda = energy / (mass * mass);
    for (Rational& c : coeffs) c /= mass;  // normalize the surrogate L1 norm to 1
    result.coefficients = coeffs;
    result.positive_pattern = true;
    for (int s : pattern) result.positive_pattern = result.positive_pattern && s > 0;
    return result;
}

/// One side of the closed-form two-sided estimate for the embedding
/// constant. Exact when the half-line integral L(s) = Int (1-x^2)^s dx
/// stays inside the radical class after the 1/q power; otherwise a
/// documented floating-point evaluation, flagged by exact = false.
struct BoundValue {
    bool exact = false;
    RadicalScalar value;  // meaningful when exact
    double approx = 0.0;
};

struct KalyabinBounds {
    BoundValue lower;
    BoundValue upper;
};

namespace detail {

// L(s) for integer s >= 0: 2^(2s+1) (s!)^2 / (2s+1)!.
inline Rational l_integral_integer(long n) {
    const Rational num = Rational(pow_integer(2, static_cast<unsigned long>(2 * n + 1))) *
                         factorial(n) * factorial(n);
    return num / factorial(2 * n + 1);
}

// L(n - 1/2) = pi (2n-1)!! / (2^n n!) for integer n >= 1.
inline Rational l_integral_half_coeff(long n) {
    return double_factorial(2 * n - 1) / (Rational(pow_integer(2, static_cast<unsigned long>(n))) *
                                          factorial(n));
}

// L(s) as a radical when s is a nonnegative integer or positive
// half-integer.
inline std::optional<RadicalScalar> l_integral_exact(const Rational& s) {
    if (is_integer(s) && sign(s) >= 0)
        return RadicalScalar::from_rational(l_integral_integer(s.get_num().get_si()));
    const Rational twice = s * 2;
    if (is_integer(twice) && sign(s) > 0) {
        const Rational n_rat = (twice + 1) / 2;
        return RadicalScalar::pi_times(l_integral_half_coeff(n_rat.get_num().get_si()));
    }
    return std::nullopt;
}

inline double l_integral_double(double s) {
    // Beta(1/2, s+1) = sqrt(pi) Gamma(s+1) / Gamma(s+3/2)
    return std::exp(0.5 * std::log(M_PI) + std::lgamma(s + 1.0) - std::lgamma(s + 1.5));
}

// L(s)^(1/q) within the radical class, when possible.
inline std::optional<RadicalScalar> l_power_exact(const Rational& s, const Rational& q) {
    const auto l = l_integral_exact(s);
    if (!l) return std::nullopt;
    if (q == 1) return l;
    if (q == 2 && l->pi_power() == 0 && l->radicand() == 1)
        return RadicalScalar::sqrt_of(l->coeff());
    const Rational inv_q = Rational(1) / q;
    if (is_integer(inv_q) && sign(inv_q) > 0 && l->pi_power() == 0 && l->radicand() == 1) {
        const long m = inv_q.get_num().get_si();
        return RadicalScalar::from_rational(pow_rational(l->coeff(), m));
    }
    return std::nullopt;
}

}  // namespace detail

/// Two-sided closed-form estimate of the embedding constant at integrability
/// exponent q:
///   sqrt(k+1/2)/(2^k k!) L(kq)^(1/q) <= c <= L((k-1/2)q)^(1/q) / (2^k (k-1)! sqrt(k-1/2)).
/// At q = 1 the lower bound coincides with the sharp constant.
inline KalyabinBounds kalyabin_bounds(int k, const Rational& q) {
    if (k < 1) throw std::invalid_argument("kalyabin_bounds: k must be >= 1");
    if (sign(q) <= 0) throw std::invalid_argument("kalyabin_bounds: q must be positive");

    const Rational two_pow_k(pow_integer(2, static_cast<unsigned long>(k)));
    // sqrt(k+1/2)/(2^k k!) = [1/(2^k k!)] sqrt((2k+1)/2)
    const RadicalScalar pre_lower(Rational(1) / (two_pow_k * factorial(k)),
                                  make_rational(2 * k + 1, 2), 0);
    // 1/(2^k (k-1)! sqrt(k-1/2)) = [1/(2^k (k-1)!)] sqrt(2/(2k-1))
    const RadicalScalar pre_upper(Rational(1) / (two_pow_k * factorial(k - 1)),
                                  make_rational(2, 2 * k - 1), 0);

    const Rational s_lower = Rational(k) * q;
    const Rational s_upper = (Rational(k) - make_rational(1, 2)) * q;
    const double dq = q.get_d();

    KalyabinBounds out;
    auto assemble = [&](const RadicalScalar& prefactor, const Rational& s) {
        BoundValue b;
        const std::optional<RadicalScalar> lp = detail::l_power_exact(s, q);
        if (lp) {
            b.value = prefactor * (*lp);
            b.exact = true;
            b.approx = b.value.to_double();
        } else {
            b.approx = prefactor.to_double() *
                       std::pow(detail::l_integral_double(s.get_d()), 1.0 / dq);
        }
        return b;
    };
    out.lower = assemble(pre_lower, s_lower);
    out.upper = assemble(pre_upper, s_upper);
    return out;
}

}  // namespace sharpsob
