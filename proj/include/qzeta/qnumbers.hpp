#pragma once

#include "polyx.hpp"

#include <vector>

namespace qzeta {

/// [n]_q = (q^n - 1)/(q - 1) as an integer Laurent polynomial; negative n gives -(q^-1 + ... + q^n).
inline LaurentPolyZ qint_laurent(int n) {
    if (n == 0) return {};
    if (n > 0) return LaurentPolyZ(IntPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1))));
    return LaurentPolyZ(IntPoly(std::vector<BigInt>(static_cast<std::size_t>(-n), BigInt(-1))), n);
}

inline RationalFunctionQ qint(int n) { return RationalFunctionQ(qint_laurent(n)); }

inline LaurentPolyZ qfactorial_laurent(int n) {
    if (n < 0) throw PreconditionError("q-factorial of a negative integer");
    LaurentPolyZ acc(1);
    for (int j = 1; j <= n; ++j) acc *= qint_laurent(j);
    return acc;
}

inline RationalFunctionQ qfactorial(int n) { return RationalFunctionQ(qfactorial_laurent(n)); }

/// Gaussian binomial [m choose k]_q via the q-Pascal recurrence; zero when k > m or k < 0.
inline LaurentPolyZ gauss_binomial(int m, int k) {
    if (m < 0 || k < 0 || k > m) return {};
    // row[j] = [i choose j]_q
    std::vector<LaurentPolyZ> row{LaurentPolyZ(1)};
    for (int i = 1; i <= m; ++i) {
        std::vector<LaurentPolyZ> next(static_cast<std::size_t>(i) + 1);
        next[0] = LaurentPolyZ(1);
        next[static_cast<std::size_t>(i)] = LaurentPolyZ(1);
        for (int j = 1; j < i; ++j)
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

inline int binom2(int n) { return n * (n - 1) / 2; }

} // namespace qzeta
