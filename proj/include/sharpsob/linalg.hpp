#pragma once

#include <stdexcept>
#include <vector>

#include "sharpsob/rational.hpp"

namespace sharpsob {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/// LDL^T factorization of a symmetric matrix, A = L D L^T with unit lower
/// triangular L. positive_definite is true iff every pivot is positive,
/// which certifies positive definiteness exactly.
struct Ldlt {
    RatMat lower;
    RatVec diag;
    bool positive_definite = false;
};

inline Ldlt ldlt_decompose(const RatMat& a) {
    const size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("ldlt_decompose: matrix is not square");
    Ldlt f;
    f.lower.assign(n, RatVec(n, Rational(0)));
    f.diag.assign(n, Rational(0));
    f.positive_definite = true;
    for (size_t j = 0; j < n; ++j) {
        Rational d = a[j][j];
        for (size_t t = 0; t < j; ++t) d -= f.lower[j][t] * f.lower[j][t] * f.diag[t];
        f.diag[j] = d;
        f.lower[j][j] = 1;
        if (sign(d) <= 0) {
            f.positive_definite = false;
            return f;
        }
        for (size_t i = j + 1; i < n; ++i) {
            Rational v = a[i][j];
            for (size_t t = 0; t < j; ++t) v -= f.lower[i][t] * f.lower[j][t] * f.diag[t];
            f.lower[i][j] = v / d;
        }
    }
    return f;
}

/// Solves A x = b given the LDL^T factors of A.
inline RatVec ldlt_solve(const Ldlt& f, const RatVec& b) {
    const size_t n = f.diag.size();
    if (b.size() != n) throw std::invalid_argument("ldlt_solve: size mismatch");
    if (!f.positive_definite) throw std::invalid_argument("ldlt_solve: matrix is not SPD");
    RatVec x = b;
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < i; ++t) x[i] -= f.lower[i][t] * x[t];
    for (size_t i = 0; i < n; ++i) x[i] /= f.diag[i];
    for (size_t i = n; i-- > 0;)
        for (size_t t = i + 1; t < n; ++t) x[i] -= f.lower[t][i] * x[t];
    return x;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rational acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline RatVec mat_vec(const RatMat& m, const RatVec& v) {
    RatVec out;
    out.reserve(m.size());
    for (const auto& row : m) out.push_back(dot(row, v));
    return out;
}

}  // namespace sharpsob
