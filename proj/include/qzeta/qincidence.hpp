#pragma once

// Twisted incidence algebra Inc_q(P, h): upper-triangular matrices over Z[q, q^-1]
// with product A x_q B = A D_h B and unit D_h^-1.

#include "poset.hpp"
#include "qbasis.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace qzeta {

/// Dense square matrix over Z[q, q^-1], rows and columns indexed by poset elements.
class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

    int size() const { return n_; }
    const LaurentPolyZ& operator()(int x, int y) const { return e_[index(x, y)]; }
    LaurentPolyZ& at(int x, int y) { return e_[index(x, y)]; }

    /// Substitutes q = 1 entrywise.
    IntMatrix at_q1() const {
        IntMatrix m(static_cast<std::size_t>(n_), std::vector<std::int64_t>(static_cast<std::size_t>(n_), 0));
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) m[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (*this)(x, y).at_one().convert_to<std::int64_t>();
        return m;
    }

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y); }

    int n_ = 0;
    std::vector<LaurentPolyZ> e_;
};

/// Throws InternalError if some entry (x, y) with x not <= y is nonzero.
inline void assert_incidence(const Poset& p, const QMatrix& a) {
    if (a.size() != p.size()) throw PreconditionError("matrix does not match the poset size");
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (!p.leq(x, y) && !a(x, y).is_zero()) throw InternalError("incidence matrix has an entry outside the order relation");
}

inline QMatrix zeta_matrix(const Poset& p) {
    QMatrix z(p.size());
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y)) z.at(x, y) = LaurentPolyZ(1);
    return z;
}

/// D_h^-1, the unit of the twisted product.
inline QMatrix twisted_unit(const HeightFunction& h) {
    QMatrix u(static_cast<int>(h.size()));
    for (int x = 0; x < u.size(); ++x) u.at(x, x) = LaurentPolyZ::q_power(-h(x));
    return u;
}

inline QMatrix diagonal_height(const HeightFunction& h) {
    QMatrix d(static_cast<int>(h.size()));
    for (int x = 0; x < d.size(); ++x) d.at(x, x) = LaurentPolyZ::q_power(h(x));
    return d;
}

/// A D_h B.
inline QMatrix twisted_product(const Poset& p, const QMatrix& a, const QMatrix& b, const HeightFunction& h) {
    const int n = p.size();
    if (a.size() != n || b.size() != n || static_cast<int>(h.size()) != n) throw PreconditionError("twisted product shape mismatch");
    QMatrix c(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (a(x, y).is_zero()) continue;
            const LaurentPolyZ left = a(x, y).shifted(h(y));
            for (int z = 0; z < n; ++z)
                if (!b(y, z).is_zero()) c.at(x, z) += left * b(y, z);
        }
    assert_incidence(p, c);
    return c;
}

/// Inverse for the twisted product, by back-substitution. Diagonal entries must be +-q^k.
inline QMatrix twisted_inverse(const Poset& p, const QMatrix& a, const HeightFunction& h) {
    const int n = p.size();
    // Solve a * c = D_h^-1, then the twisted inverse is D_h^-1 c.
    QMatrix c(n);
    const auto& order = p.linear_extension();
    for (int y = 0; y < n; ++y) {
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int x = *it;
            if (!p.leq(x, y)) continue;
            LaurentPolyZ rhs = x == y ? LaurentPolyZ::q_power(-h(y)) : LaurentPolyZ{};
            for (int z = 0; z < n; ++z)
                if (z != x && p.leq(x, z) && p.leq(z, y) && !a(x, z).is_zero()) rhs -= a(x, z) * c(z, y);
            const LaurentPolyZ& diag = a(x, x);
            if (!diag.is_monomial()) throw PreconditionError("twisted inverse needs monomial diagonal entries");
            c.at(x, y) = rhs * pow(diag, -1);
        }
    }
    QMatrix out(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!c(x, y).is_zero()) out.at(x, y) = c(x, y).shifted(-h(x));
    assert_incidence(p, out);
    return out;
}

/// n-th power of the zeta matrix in Inc_q(P, h), any integer n.
inline QMatrix twisted_power(const Poset& p, const HeightFunction& h, int n) {
    validate_height(p, h);
    const QMatrix z = zeta_matrix(p);
    const QMatrix step = n >= 0 ? z : twisted_inverse(p, z, h);
    QMatrix acc = twisted_unit(h);
    for (int i = 0; i < (n >= 0 ? n : -n); ++i) acc = twisted_product(p, acc, step, h);
    return acc;
}

/// Powers Z^(x_q n) for n = lo..hi, sharing the work between consecutive exponents.
inline std::vector<QMatrix> twisted_power_range(const Poset& p, const HeightFunction& h, int lo, int hi) {
    validate_height(p, h);
    std::vector<QMatrix> out;
    if (hi < lo) return out;
    const QMatrix z = zeta_matrix(p);
    QMatrix cur = twisted_power(p, h, lo);
    out.push_back(cur);
    for (int n = lo + 1; n <= hi; ++n) {
        cur = twisted_product(p, cur, z, h);
        out.push_back(cur);
    }
    return out;
}

/// Coefficient (0, 1) of the n-th twisted power; equals the q-Zeta polynomial at [n]_q.
inline LaurentPolyZ corner_value(const Poset& p, const HeightFunction& h, int n) {
    if (!is_bounded(p)) throw PreconditionError("corner_value needs a bounded poset");
    return twisted_power(p, h, n)(*p.bottom(), *p.top());
}

struct AnnihilationReport {
    bool annihilated = false;               // Delta^(H+1) kills every entry sequence
    std::optional<std::pair<int, int>> witness;  // entry not killed by Delta^H
    bool ok() const { return annihilated && witness.has_value(); }
};

/// Applies Delta_q entrywise to the matrix sequence over n = lo..hi.
inline AnnihilationReport annihilation_report(const Poset& p, const HeightFunction& h, int lo, int hi) {
    const int H = h.max();
    if (hi - lo + 1 < H + 3) throw PreconditionError("annihilation window must hold at least H+3 terms");
    const auto mats = twisted_power_range(p, h, lo, hi);
    AnnihilationReport rep;
    rep.annihilated = true;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            if (!p.leq(x, y)) continue;
            std::vector<LaurentPolyZ> seq;
            for (const auto& m : mats) seq.push_back(m(x, y));
            int offset = lo;
            for (int k = 0; k < H; ++k) seq = delta_on_sequence(seq, offset++);
            bool h_zero = true;
            for (const auto& v : seq)
                if (!v.is_zero()) h_zero = false;
            if (!h_zero && !rep.witness) rep.witness = std::make_pair(x, y);
            seq = delta_on_sequence(seq, offset);
            for (const auto& v : seq)
                if (!v.is_zero()) rep.annihilated = false;
        }
    return rep;
}

inline bool annihilation_check(const Poset& p, const HeightFunction& h, int lo, int hi) {
    return annihilation_report(p, h, lo, hi).ok();
}

} // namespace qzeta
