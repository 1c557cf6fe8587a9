#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sharpsob/poly.hpp"
#include "sharpsob/radical.hpp"
#include "sharpsob/variational.hpp"

namespace sharpsob {

/// Sharp constant of the embedding W^{k,2}_0(-1,1) -> L^1(-1,1):
///   c_k = 1 / ((2k-1)!! sqrt(k + 1/2)) = sqrt(2/(2k+1)) / (2k-1)!!.
inline RadicalScalar sharp_constant(int k) {
    if (k < 1) throw std::invalid_argument("sharp_constant: k must be >= 1");
    return {Rational(1) / double_factorial(2 * k - 1), make_rational(2, 2 * k + 1), 0};
}

inline Rational sharp_constant_squared(int k) {
    if (k < 1) throw std::invalid_argument("sharp_constant_squared: k must be >= 1");
    const Rational df = double_factorial(2 * k - 1);
    return make_rational(2, 2 * k + 1) / (df * df);
}

/// Norms of the Landau kernel L_k = (1-x^2)^k that realize equality in the
/// embedding: its L1 norm, the squared L2 norm of its k-th derivative, and
/// their ratio. Both norms are computed twice, by direct symbolic
/// integration and from the closed forms
///   ||L_k||_1      = (k!)^2/(2k)! * 2^(2k+1)/(2k+1),
///   ||L_k^(k)||_2^2 = (k!)^2 * 2^(2k+1)/(2k+1),
/// and any disagreement (an implementation bug) raises.
struct ExtremalRatio {
    Rational l1;
    Rational deriv_l2_sq;
    RadicalScalar ratio;  // l1 / sqrt(deriv_l2_sq)
};

inline ExtremalRatio extremal_ratio(int k) {
    if (k < 1) throw std::invalid_argument("extremal_ratio: k must be >= 1");
    const Poly lk = landau_kernel(k);
    const Rational l1 = lk.integrate(Rational(-1), Rational(1));  // L_k >= 0 on [-1, 1]
    const Poly dk = lk.derivative(k);
    const Rational deriv = (dk * dk).integrate(Rational(-1), Rational(1));

    const Rational pow_term = Rational(pow_integer(2, static_cast<unsigned long>(2 * k + 1))) /
                              Rational(2 * k + 1);
    const Rational kfac_sq = factorial(k) * factorial(k);
    if (l1 != kfac_sq / factorial(2 * k) * pow_term)
        throw std::logic_error("extremal_ratio: L1 norm disagrees with the closed form");
    if (deriv != kfac_sq * pow_term)
        throw std::logic_error("extremal_ratio: derivative norm disagrees with the closed form");

    return {l1, deriv, RadicalScalar(l1, Rational(1) / deriv, 0)};
}

/// One row of the cross-check table: the closed-form constant, the Landau
/// norms, the q = 1 two-sided estimate, and the Galerkin value, with all
/// the exact identities between them asserted before the row is emitted.
struct ConstantsRow {
    int k = 0;
    RadicalScalar c_exact;
    Rational c_squared;
    Rational landau_l1;
    Rational landau_deriv_l2_sq;
    RadicalScalar kalyabin_lower;
    RadicalScalar kalyabin_upper;
    Rational galerkin_check;
    std::string decimal;
};

/// Trial-space size used for the table's Galerkin column; any size works
/// because the trial space contains the extremal function.
inline constexpr int kTableGalerkinSize = 3;

inline ConstantsRow constants_row(int k, int digits) {
    ConstantsRow row;
    row.k = k;
    row.c_exact = sharp_constant(k);
    row.c_squared = sharp_constant_squared(k);
    const ExtremalRatio er = extremal_ratio(k);
    row.landau_l1 = er.l1;
    row.landau_deriv_l2_sq = er.deriv_l2_sq;
    const KalyabinBounds kb = kalyabin_bounds(k, Rational(1));
    if (!kb.lower.exact || !kb.upper.exact)
        throw std::logic_error("constants_row: q = 1 bounds must be exact");
    row.kalyabin_lower = kb.lower.value;
    row.kalyabin_upper = kb.upper.value;
    row.galerkin_check =
        constrained_min(assemble_galerkin(k, BasisSpec::landau_weighted, kTableGalerkinSize));
    row.decimal = row.c_exact.decimal(digits);

    if (row.c_exact.squared_rational() != row.c_squared)
        throw std::logic_error("constants_row: closed form disagrees with its square");
    if (row.landau_l1 * row.landau_l1 / row.landau_deriv_l2_sq != row.c_squared)
        throw std::logic_error("constants_row: extremal ratio disagrees with the sharp constant");
    if (!(er.ratio == row.c_exact))
        throw std::logic_error("constants_row: ratio radical disagrees with the sharp constant");
    if (!(row.kalyabin_lower == row.c_exact))
        throw std::logic_error("constants_row: lower estimate must coincide at q = 1");
    if (radical_cmp(row.kalyabin_upper, row.c_exact) <= 0)
        throw std::logic_error("constants_row: upper estimate not above the sharp constant");
    if (row.galerkin_check != row.c_squared)
        throw std::logic_error("constants_row: Galerkin value disagrees with the sharp constant");
    return row;
}

inline std::vector<ConstantsRow> constants_table(int k_max, int digits) {
    if (k_max < 1) throw std::invalid_argument("constants_table: k_max must be >= 1");
    if (digits < 1) throw std::invalid_argument("constants_table: digits must be >= 1");
    std::vector<ConstantsRow> rows;
    rows.reserve(static_cast<size_t>(k_max));
    for (int k = 1; k <= k_max; ++k) rows.push_back(constants_row(k, digits));
    return rows;
}

}  // namespace sharpsob
