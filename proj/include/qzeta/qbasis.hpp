#pragma once

// Polynomials with integer Laurent values at q-integers: the basis B_k, the
// difference operator, shifted q-binomials and the series/numerator dictionary.

#include "qnumbers.hpp"

#include <string>
#include <vector>

namespace qzeta {

/// Coefficients c_k of P = sum_k c_k B_k, each in Z[q, q^-1].
struct BasisDecomposition {
    std::vector<LaurentPolyZ> coefficients;

    friend bool operator==(const BasisDecomposition&, const BasisDecomposition&) = default;
};

/// Numerator N(t) of a series N(t) / prod_{l=0..H} (1 - q^l t).
struct SeriesNumerator {
    std::vector<LaurentPolyZ> t_coefficients;
    int denominator_degree = 0;

    int t_degree() const {
        int d = static_cast<int>(t_coefficients.size()) - 1;
        while (d >= 0 && t_coefficients[static_cast<std::size_t>(d)].is_zero()) --d;
        return d;
    }
    LaurentPolyZ coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(t_coefficients.size())) return {};
        return t_coefficients[static_cast<std::size_t>(k)];
    }
    bool is_nonnegative() const {
        for (const auto& c : t_coefficients)
            if (!c.is_nonnegative()) return false;
        return true;
    }
    /// t-ascending canonical Laurent strings, trailing zeros dropped.
    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        for (int k = 0; k <= t_degree(); ++k) out.push_back(coeff(k).to_string());
        return out;
    }

    friend bool operator==(const SeriesNumerator& a, const SeriesNumerator& b) {
        if (a.denominator_degree != b.denominator_degree) return false;
        const int d = std::max(a.t_degree(), b.t_degree());
        for (int k = 0; k <= d; ++k)
            if (a.coeff(k) != b.coeff(k)) return false;
        return true;
    }
};

/// [j]_q + q^j x
inline PolyX qint_affine(int j) { return PolyX::linear(qint(j), RationalFunctionQ::q_power(j)); }

/// Shifted q-binomial polynomial prod_{j=a-b+1..a} ([j]_q + q^j x) / [b]!_q; its value at [n]_q is [a+n choose b]_q.
inline PolyX qbinom_shifted(int a, int b) {
    if (b < 0) throw PreconditionError("qbinom_shifted needs b >= 0");
    PolyX acc(1);
    for (int j = a - b + 1; j <= a; ++j) acc *= qint_affine(j);
    const RationalFunctionQ inv = qfactorial(b).inverse();
    return acc.map_coefficients([&](const RationalFunctionQ& c) { return c * inv; });
}

/// B_k(x) = prod_{j=1..k} ([j]_q + q^j x) / [k]!_q; B_{-1} = 0.
inline PolyX basis_B(int k) {
    if (k < 0) return {};
    return qbinom_shifted(k, k);
}

/// (P(x) - P((x-1)/q)) / (1 + (q-1)x), an exact polynomial quotient.
inline PolyX delta_q(const PolyX& p) {
    const RationalFunctionQ q = RationalFunctionQ::q();
    const RationalFunctionQ inv_q = q.inverse();
    const PolyX unshift = PolyX::linear(-inv_q, inv_q);
    const PolyX numer = p - p.compose(unshift);
    return divide_by_linear(numer, RationalFunctionQ(1), q - RationalFunctionQ(1));
}

/// Expresses P over the basis B_k by peeling off Delta_q^d P = c_d from the top degree down.
/// Throws NotInAq when some c_k is not an integer Laurent polynomial.
inline BasisDecomposition decompose_in_B(PolyX p) {
    BasisDecomposition out;
    const int d = p.degree();
    if (d < 0) return out;
    out.coefficients.resize(static_cast<std::size_t>(d) + 1);
    for (int k = d; k >= 0; --k) {
        PolyX reduced = p;
        for (int i = 0; i < k; ++i) reduced = delta_q(reduced);
        if (reduced.degree() > 0) throw InternalError("iterated difference did not reach a constant");
        const RationalFunctionQ c = reduced.coeff(0);
        auto lz = c.to_integer_laurent();
        if (!lz) throw NotInAq("coefficient on B_" + std::to_string(k) + " is " + c.to_string() + ", not in Z[q,q^-1]");
        out.coefficients[static_cast<std::size_t>(k)] = *lz;
        if (!c.is_zero()) p -= basis_B(k).map_coefficients([&](const RationalFunctionQ& b) { return b * c; });
    }
    if (!p.is_zero()) throw InternalError("basis decomposition left a remainder");
    while (!out.coefficients.empty() && out.coefficients.back().is_zero()) out.coefficients.pop_back();
    return out;
}

/// sum_k c_k B_k, accumulated over the common denominator [d]!_q so that each
/// coefficient is normalized once.
inline PolyX recompose_from_B(const BasisDecomposition& dec) {
    const int d = static_cast<int>(dec.coefficients.size()) - 1;
    if (d < 0) return {};
    auto qint_z = [](int j) {
        LaurentPolyZ v;
        for (int i = 0; i < j; ++i) v += LaurentPolyZ::monomial(BigInt(1), i);
        return v;
    };
    // tail[k] = prod_{j=k+1..d} [j]_q
    std::vector<LaurentPolyZ> tail(static_cast<std::size_t>(d) + 1);
    tail[static_cast<std::size_t>(d)] = LaurentPolyZ(1);
    for (int k = d - 1; k >= 0; --k) tail[static_cast<std::size_t>(k)] = tail[static_cast<std::size_t>(k) + 1] * qint_z(k + 1);
    std::vector<LaurentPolyZ> numer(static_cast<std::size_t>(d) + 1);
    std::vector<LaurentPolyZ> prod{LaurentPolyZ(1)};  // x-coefficients of prod_{j=1..k} ([j]_q + q^j x)
    for (int k = 0; k <= d; ++k) {
        if (k > 0) {
            std::vector<LaurentPolyZ> next(prod.size() + 1);
            const LaurentPolyZ a = qint_z(k);
            for (std::size_t i = 0; i < prod.size(); ++i) {
                next[i] += prod[i] * a;
                next[i + 1] += prod[i].shifted(k);
            }
            prod = std::move(next);
        }
        const LaurentPolyZ& c = dec.coefficients[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const LaurentPolyZ w = c * tail[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < prod.size(); ++i) numer[i] += w * prod[i];
    }
    const RationalFunctionQ den(tail[0]);
    std::vector<RationalFunctionQ> coeffs;
    for (const auto& n : numer) coeffs.push_back(RationalFunctionQ(n) / den);
    return PolyX(std::move(coeffs));
}

/// The polynomial whose values at [n]_q, n >= 0, are the coefficients of N(t)/prod_{l=0..d}(1-q^l t).
inline PolyX numerator_to_polynomial(const SeriesNumerator& n) {
    const int d = n.denominator_degree;
    if (n.t_degree() > d) throw PreconditionError("numerator t-degree exceeds the denominator degree");
    PolyX acc;
    for (int k = 0; k <= n.t_degree(); ++k) {
        if (n.coeff(k).is_zero()) continue;
        const RationalFunctionQ h(n.coeff(k));
        acc += qbinom_shifted(d - k, d).map_coefficients([&](const RationalFunctionQ& c) { return c * h; });
    }
    return acc;
}

/// Inverse of numerator_to_polynomial: sum_k c_k prod_{l=k+1..d} (1 - q^l t) where P = sum_k c_k B_k.
inline SeriesNumerator polynomial_to_numerator(const PolyX& p, int d) {
    if (p.degree() > d) throw PreconditionError("polynomial degree exceeds the denominator degree");
    const BasisDecomposition dec = decompose_in_B(p);
    SeriesNumerator out;
    out.denominator_degree = d;
    out.t_coefficients.assign(static_cast<std::size_t>(d) + 1, LaurentPolyZ{});
    for (std::size_t k = 0; k < dec.coefficients.size(); ++k) {
        if (dec.coefficients[k].is_zero()) continue;
        // prod_{l=k+1..d} (1 - q^l t) as a t-polynomial
        std::vector<LaurentPolyZ> factor{LaurentPolyZ(1)};
        for (int l = static_cast<int>(k) + 1; l <= d; ++l) {
            std::vector<LaurentPolyZ> next(factor.size() + 1);
            for (std::size_t i = 0; i < factor.size(); ++i) {
                next[i] += factor[i];
                next[i + 1] -= factor[i].shifted(l);
            }
            factor = std::move(next);
        }
        for (std::size_t i = 0; i < factor.size(); ++i) out.t_coefficients[i] += dec.coefficients[k] * factor[i];
    }
    while (!out.t_coefficients.empty() && out.t_coefficients.back().is_zero()) out.t_coefficients.pop_back();
    return out;
}

/// Limit at q = 0 of qbinom_shifted(d - i, d) * q^binom(i,2): 1 for i = 0 and x (x-1)^(i-1) otherwise.
inline RatPoly limit_q0_basis(int i, int d) {
    if (i < 0 || i > d) throw PreconditionError("limit_q0_basis needs 0 <= i <= d");
    const RationalFunctionQ scale = RationalFunctionQ::q_power(binom2(i));
    return eval_at_q0(qbinom_shifted(d - i, d).map_coefficients([&](const RationalFunctionQ& c) { return c * scale; }));
}

/// (Delta a)_n = (a_n - a_{n-1}) / q^n. The input's first entry is a_offset;
/// the output's first entry is (Delta a)_{offset+1}.
template <class R>
std::vector<Laurent<R>> delta_on_sequence(const std::vector<Laurent<R>>& a, int offset) {
    if (a.size() < 2) throw PreconditionError("delta_on_sequence needs at least two entries");
    std::vector<Laurent<R>> out;
    out.reserve(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) {
        const int n = offset + static_cast<int>(i);
        out.push_back(divide_by_q_power(a[i] - a[i - 1], n));
    }
    return out;
}

/// B-basis coefficients of the member of A_q taking values[i] at [first_n + i]_q.
/// Newton form: the k-th q-difference at [first_n + k]_q equals sum_{j>=k} c_j [first_n+j choose j-k]_q,
/// so the c_j come out top-down with integer Laurent arithmetic only.
inline BasisDecomposition decompose_from_q_integer_values(const std::vector<LaurentPolyZ>& values, int first_n) {
    if (first_n < 0) throw PreconditionError("q-Newton interpolation needs nodes [n]_q with n >= 0");
    BasisDecomposition dec;
    if (values.empty()) return dec;
    const int d = static_cast<int>(values.size()) - 1;
    std::vector<LaurentPolyZ> diffs{values.front()};
    std::vector<LaurentPolyZ> seq = values;
    for (int k = 1; k <= d; ++k) {
        seq = delta_on_sequence(seq, first_n + k - 1);
        diffs.push_back(seq.front());
    }
    dec.coefficients.assign(static_cast<std::size_t>(d + 1), LaurentPolyZ());
    for (int k = d; k >= 0; --k) {
        LaurentPolyZ c = diffs[static_cast<std::size_t>(k)];
        for (int j = k + 1; j <= d; ++j)
            if (!dec.coefficients[static_cast<std::size_t>(j)].is_zero())
                c -= dec.coefficients[static_cast<std::size_t>(j)] * gauss_binomial(first_n + j, j - k);
        dec.coefficients[static_cast<std::size_t>(k)] = std::move(c);
    }
    while (!dec.coefficients.empty() && dec.coefficients.back().is_zero()) dec.coefficients.pop_back();
    return dec;
}

inline PolyX interpolate_q_integer_values(const std::vector<LaurentPolyZ>& values, int first_n) {
    return recompose_from_B(decompose_from_q_integer_values(values, first_n));
}

} // namespace qzeta
