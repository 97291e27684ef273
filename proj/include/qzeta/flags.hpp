#pragma once

// Flag f- and h-vectors, HH(q,t) numerators, volumes, R-labellings and the
// characteristic-polynomial and Eulerian checks.

#include "qzeta.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qzeta {

/// Rank subsets S of {1..H-1} are bitmasks: bit i set means rank i is in S.
using RankSet = std::uint32_t;

inline std::string rank_set_key(RankSet s) {
    std::string out;
    for (int i = 1; i < 32; ++i)
        if (s >> i & 1u) {
            if (!out.empty()) out += ",";
            out += std::to_string(i);
        }
    return out;
}

inline RankSet rank_set_of(const std::vector<int>& ranks) {
    RankSet s = 0;
    for (int r : ranks) s |= RankSet(1) << r;
    return s;
}

struct FlagVectors {
    int H = 0;
    std::map<RankSet, BigInt> alpha;
    std::map<RankSet, BigInt> beta;

    BigInt a(RankSet s) const {
        auto it = alpha.find(s);
        return it == alpha.end() ? BigInt(0) : it->second;
    }
    BigInt b(RankSet s) const {
        auto it = beta.find(s);
        return it == beta.end() ? BigInt(0) : it->second;
    }
};

/// All subsets of {1..H-1} in increasing bitmask order.
inline std::vector<RankSet> rank_subsets(int H) {
    std::vector<RankSet> out;
    const RankSet full = H >= 2 ? ((RankSet(1) << H) - 2) : 0;
    for (RankSet s = 0;; s = (s - full) & full) {  // walks submasks of full upward
        out.push_back(s);
        if (s == full) break;
    }
    return out;
}

/// beta(S) = sum_{T subset S} (-1)^(#S - #T) alpha(T).
inline std::map<RankSet, BigInt> mobius_invert_subsets(const std::map<RankSet, BigInt>& alpha, int H) {
    std::map<RankSet, BigInt> beta;
    for (RankSet s : rank_subsets(H)) {
        BigInt acc = 0;
        for (RankSet t = s;; t = (t - 1) & s) {
            auto it = alpha.find(t);
            if (it != alpha.end()) {
                if ((__builtin_popcount(s) - __builtin_popcount(t)) % 2 == 0) acc += it->second;
                else acc -= it->second;
            }
            if (t == 0) break;
        }
        beta[s] = acc;
    }
    return beta;
}

/// alpha by rank-selected chain counting, beta by inclusion-exclusion. P bounded and graded.
inline FlagVectors flag_vectors(const Poset& p) {
    if (!is_bounded(p)) throw PreconditionError("flag vectors need a bounded poset");
    const RankFunction rk = rank_function(p);
    FlagVectors f;
    f.H = rk(*p.top());
    if (f.H > 30) throw PreconditionError("rank too large for flag vectors");
    for (RankSet s : rank_subsets(f.H)) {
        // ways[x] = chains through the selected ranks so far ending at x
        std::vector<BigInt> ways(static_cast<std::size_t>(p.size()), BigInt(0));
        bool first = true;
        for (int r = 1; r < f.H; ++r) {
            if (!(s >> r & 1u)) continue;
            std::vector<BigInt> next(static_cast<std::size_t>(p.size()), BigInt(0));
            for (int y = 0; y < p.size(); ++y) {
                if (rk(y) != r) continue;
                if (first) {
                    next[static_cast<std::size_t>(y)] = 1;
                    continue;
                }
                for (int x = 0; x < p.size(); ++x)
                    if (p.lt(x, y)) next[static_cast<std::size_t>(y)] += ways[static_cast<std::size_t>(x)];
            }
            ways = std::move(next);
            first = false;
        }
        BigInt total = 0;
        if (first) total = 1;
        else
            for (const auto& w : ways) total += w;
        f.alpha[s] = total;
    }
    f.beta = mobius_invert_subsets(f.alpha, f.H);
    return f;
}

/// Z of a bounded graded poset (h = rk) from its flag f-vector alone.
inline PolyX qzeta_from_flag_vectors(const FlagVectors& f) {
    std::map<std::vector<int>, BigInt> counts;
    // a strict chain has rank set T in {0..H}; 0 and H are carried by the unique bottom and top
    const int H = f.H;
    if (H == 0) {
        counts[{0}] = 1;
        return qzeta_from_height_tuple_counts(counts);
    }
    for (RankSet s : rank_subsets(H)) {
        const BigInt n = f.a(s);
        if (n == 0) continue;
        std::vector<int> inner;
        for (int r = 1; r < H; ++r)
            if (s >> r & 1u) inner.push_back(r);
        for (int ends = 0; ends < 4; ++ends) {
            std::vector<int> t;
            if (ends & 1) t.push_back(0);
            t.insert(t.end(), inner.begin(), inner.end());
            if (ends & 2) t.push_back(H);
            if (!t.empty()) counts[t] += n;
        }
    }
    return qzeta_from_height_tuple_counts(counts);
}

// ---------------------------------------------------------------------------
// HH numerators and volumes

/// Route A: numerator of sum_{n >= 0} Z([n+1]_q) t^n over prod_{l=0..d} (1 - q^l t).
/// d defaults to max h.
inline SeriesNumerator hh_numerator_from_series(const Poset& p, const HeightFunction& h, std::optional<int> d = std::nullopt) {
    if (p.empty()) throw PreconditionError("HH numerator needs a nonempty poset");
    const PolyX z = qzeta_poly(p, h).poly;
    const int deg = d.value_or(h.max());
    const PolyX shifted = z.compose(PolyX::linear(RationalFunctionQ(1), RationalFunctionQ::q()));
    try {
        SeriesNumerator n = polynomial_to_numerator(shifted, deg);
        if (n.t_degree() > deg) throw InternalError("HH numerator t-degree exceeds H");
        return n;
    } catch (const NotInAq& e) {
        throw InternalError(std::string("q-Zeta polynomial left the ring A_q: ") + e.what());
    }
}

/// Route B: sum_S beta(S) t^#S q^(sum S), for bounded graded P with h = rk.
inline SeriesNumerator hh_numerator_from_flags(const FlagVectors& f) {
    SeriesNumerator n;
    n.denominator_degree = f.H;
    n.t_coefficients.assign(static_cast<std::size_t>(f.H) + 1, LaurentPolyZ{});
    for (const auto& [s, b] : f.beta) {
        if (b == 0) continue;
        int sum = 0;
        for (int i = 1; i < 32; ++i)
            if (s >> i & 1u) sum += i;
        n.t_coefficients[static_cast<std::size_t>(__builtin_popcount(s))] += LaurentPolyZ::monomial(b, sum);
    }
    while (!n.t_coefficients.empty() && n.t_coefficients.back().is_zero()) n.t_coefficients.pop_back();
    return n;
}

/// HH_{P,h}. When P is bounded graded and h is its rank function, both routes run and must agree.
inline SeriesNumerator hh_numerator(const Poset& p, const HeightFunction& h, std::optional<int> d = std::nullopt) {
    SeriesNumerator a = hh_numerator_from_series(p, h, d);
    if (is_bounded(p) && is_graded(p) && a.denominator_degree == h.max() && rank_function(p).values == h.values) {
        if (hh_numerator_from_flags(flag_vectors(p)) != a) throw InternalError("HH numerator routes disagree");
    }
    return a;
}

/// Numerator of sum_{n>=0} Z([n]_q) t^n over the same denominator: the indexing one step
/// below hh_numerator. Under this indexing the V poset and the ex6 poset both have a negative coefficient.
inline SeriesNumerator hh_numerator_shifted(const Poset& p, const HeightFunction& h, std::optional<int> d = std::nullopt) {
    if (p.empty()) throw PreconditionError("HH numerator needs a nonempty poset");
    const int deg = d.value_or(h.max());
    try {
        return polynomial_to_numerator(qzeta_poly(p, h).poly, deg);
    } catch (const NotInAq& e) {
        throw InternalError(std::string("shifted HH numerator left Z[q,q^-1]: ") + e.what());
    }
}

/// Sum of t-coefficients, i.e. HH(q, 1).
inline LaurentPolyZ hh_at_t1(const SeriesNumerator& n) {
    LaurentPolyZ s;
    for (const auto& c : n.t_coefficients) s += c;
    return s;
}

/// Leading coefficient of Z times [H]!_q, without the HH cross-check.
inline LaurentPolyQ qzeta_volume_raw(const Poset& p, const HeightFunction& h) {
    if (p.empty()) throw PreconditionError("q-Zeta volume needs a nonempty poset");
    const auto r = qzeta_poly(p, h);
    auto v = (r.poly.leading() * qfactorial(r.H)).to_laurent();
    if (!v) throw InternalError("q-Zeta volume is not a Laurent polynomial");
    return *v;
}

/// q^binom(H,2) HH_{dual P, H-h}(1/q, 1), with the denominator degree of P.
inline LaurentPolyQ volume_from_dual_hh(const Poset& p, const HeightFunction& h) {
    const int H = h.max();
    const SeriesNumerator n = hh_numerator(dual(p), dual_height(h, H), H);
    return to_rational(hh_at_t1(n).inverted_q().shifted(binom2(H)));
}

/// q-Zeta volume, checked against the dual HH numerator.
inline LaurentPolyQ qzeta_volume(const Poset& p, const HeightFunction& h) {
    const LaurentPolyQ v = qzeta_volume_raw(p, h);
    const LaurentPolyQ w = volume_from_dual_hh(p, h);
    if (v != w) throw InternalError("q-Zeta volume " + v.to_string() + " differs from the HH form " + w.to_string());
    return v;
}

/// Leading coefficient of the q-order polynomial times [#P]!_q.
inline LaurentPolyQ q_order_volume(const Poset& p) {
    const PolyX l = q_order_polynomial(p);
    auto v = (l.leading() * qfactorial(p.size())).to_laurent();
    if (!v) throw InternalError("q-order volume is not a Laurent polynomial");
    return *v;
}

// ---------------------------------------------------------------------------
// R-labellings

struct RLabelling {
    std::map<std::pair<int, int>, int> labels;  // Hasse edge (lower, upper) -> label
    std::set<std::pair<int, int>> relation;      // ordered label pairs (a, b) meaning a rel b

    int at(int x, int y) const {
        auto it = labels.find({x, y});
        if (it == labels.end()) throw PreconditionError("labelling is missing a Hasse edge");
        return it->second;
    }
    bool related(int a, int b) const { return relation.count({a, b}) != 0; }
};

/// Labelling of B_n by the index of the added atom, with the strict order on 1..n.
inline RLabelling boolean_atom_labelling(const Poset& b, int n) {
    RLabelling l;
    for (const auto& [x, y] : b.covers()) l.labels[{x, y}] = __builtin_ctz(static_cast<unsigned>(y ^ x)) + 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) l.relation.insert({i, j});
    return l;
}

struct RLabellingReport {
    bool valid = false;
    std::string reason;
    std::map<std::vector<int>, RankSet> descent_sets;  // maximal chain -> D(M)
};

namespace detail {
inline bool chain_increasing(const std::vector<int>& c, const RLabelling& l) {
    for (std::size_t i = 2; i < c.size(); ++i)
        if (!l.related(l.at(c[i - 2], c[i - 1]), l.at(c[i - 1], c[i]))) return false;
    return true;
}
}  // namespace detail

/// Checks that each interval has exactly one increasing maximal chain, then computes descent sets
/// D(M) = { i in 1..H-1 : not lambda(p_{i-1}, p_i) rel lambda(p_i, p_{i+1}) } of the maximal chains.
inline RLabellingReport r_labelling_check(const Poset& p, const RLabelling& l) {
    if (!is_bounded(p) || !is_graded(p)) throw PreconditionError("R-labelling check needs a bounded graded poset");
    for (const auto& e : p.covers())
        if (!l.labels.count(e)) throw PreconditionError("labelling is missing the edge " + p.label(e.first) + " < " + p.label(e.second));
    RLabellingReport rep;
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            if (!p.lt(x, y)) continue;
            int inc = 0;
            for (const auto& c : saturated_chains(p, x, y))
                if (detail::chain_increasing(c, l)) ++inc;
            if (inc != 1) {
                rep.reason = "interval [" + p.label(x) + ", " + p.label(y) + "] has " + std::to_string(inc) + " increasing maximal chains";
                return rep;
            }
        }
    rep.valid = true;
    for (const auto& c : maximal_chains(p)) {
        RankSet d = 0;
        for (std::size_t i = 1; i + 1 < c.size(); ++i)
            if (!l.related(l.at(c[i - 1], c[i]), l.at(c[i], c[i + 1]))) d |= RankSet(1) << i;
        rep.descent_sets[c] = d;
    }
    return rep;
}

/// beta(S) counts maximal chains with descent set S, and alpha(S) those with descent set inside S.
inline bool bjorner_stanley_check(const Poset& p, const RLabelling& l) {
    const auto rep = r_labelling_check(p, l);
    if (!rep.valid) throw PreconditionError("not an R-labelling: " + rep.reason);
    const FlagVectors f = flag_vectors(p);
    for (RankSet s : rank_subsets(f.H)) {
        BigInt exact = 0, inside = 0;
        for (const auto& [chain, d] : rep.descent_sets) {
            if (d == s) exact += 1;
            if ((d & ~s) == 0) inside += 1;
        }
        if (exact != f.b(s) || inside != f.a(s)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// q = 0 and Eulerian checks

/// y^H X_P(1/y) = sum_p mu(0, p) y^rk(p).
inline IntPoly reversed_characteristic_polynomial(const Poset& p) {
    const RankFunction rk = rank_function(p);
    const IntMatrix mu = mobius(p);
    const int b = *p.bottom();
    std::vector<BigInt> c(static_cast<std::size_t>(rk(*p.top())) + 1, BigInt(0));
    for (int x = 0; x < p.size(); ++x) c[static_cast<std::size_t>(rk(x))] += mu[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)];
    return IntPoly(std::move(c));
}

/// 1 + sum_{j=1..H} (beta([1..j-1]) + beta([1..j])) (-y)^j, with beta of a set containing H read as 0.
inline IntPoly characteristic_from_beta(const FlagVectors& f) {
    std::vector<BigInt> c(static_cast<std::size_t>(f.H) + 1, BigInt(0));
    c[0] = 1;
    auto initial = [](int j) {
        RankSet s = 0;
        for (int i = 1; i <= j; ++i) s |= RankSet(1) << i;
        return s;
    };
    for (int j = 1; j <= f.H; ++j) {
        BigInt v = f.b(initial(j - 1));
        if (j < f.H) v += f.b(initial(j));
        c[static_cast<std::size_t>(j)] = (j % 2 == 0) ? v : BigInt(-v);
    }
    return IntPoly(std::move(c));
}

/// Z_{P,rk} at q = 0 with x = 1 - y.
inline RatPoly q0_specialization_in_y(const Poset& p) {
    const RatPoly z0 = eval_at_q0(qzeta_poly(p, rank_function(p)).poly);
    const RatPoly one_minus_y(std::vector<BigRational>{BigRational(1), BigRational(-1)});
    RatPoly out;
    for (int k = z0.degree(); k >= 0; --k) out = out * one_minus_y + RatPoly(z0.coeff(k));
    return out;
}

/// Z_{P,rk}|_{q=0}(1-y) = y^H X_P(1/y), plus the flag h-vector form of the right side.
/// A pole at q = 0 counts as failure.
inline bool q0_theorem_check(const Poset& p) {
    if (!is_bounded(p) || !is_graded(p)) throw PreconditionError("q=0 theorem needs a bounded graded poset");
    const IntPoly rev = reversed_characteristic_polynomial(p);
    if (characteristic_from_beta(flag_vectors(p)) != rev) return false;
    try {
        return q0_specialization_in_y(p) == to_rational(rev);
    } catch (const PoleError&) {
        return false;
    }
}

/// Z(x) = (-q)^-H Z|_{q -> 1/q}(-q x) for Eulerian P with h = rk.
inline bool eulerian_reciprocity_check(const Poset& p) {
    if (!is_eulerian(p)) throw PreconditionError("Eulerian reciprocity needs an Eulerian poset");
    const auto r = qzeta_poly(p, rank_function(p));
    const RationalFunctionQ q = RationalFunctionQ::q();
    const RationalFunctionQ scale = pow(-q, -r.H);
    const PolyX rhs = r.poly.inverted_q()
                          .compose(PolyX::monomial(-q, 1))
                          .map_coefficients([&](const RationalFunctionQ& c) { return c * scale; });
    return rhs == r.poly;
}

} // namespace qzeta
