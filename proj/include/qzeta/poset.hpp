#pragma once

#include "errors.hpp"
#include "upoly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qzeta {

/// h : P -> N with h(x) < h(y) on every cover x < y.
struct HeightFunction {
    std::vector<int> values;

    int operator()(int x) const { return values[static_cast<std::size_t>(x)]; }
    int max() const { return values.empty() ? 0 : *std::max_element(values.begin(), values.end()); }
    int min() const { return values.empty() ? 0 : *std::min_element(values.begin(), values.end()); }
    std::size_t size() const { return values.size(); }

    friend bool operator==(const HeightFunction&, const HeightFunction&) = default;
};

/// A height function that increases by exactly one along covers and is 0 at the
/// bottom of every connected component.
struct RankFunction : HeightFunction {};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Finite poset on elements 0..n-1. Labels are for I/O only.
/// Immutable once built; covers are irredundant and the order relation is precomputed.
class Poset {
public:
    Poset() = default;

    /// Builds from labelled covers. Redundant covers are dropped (and reported in `warnings`);
    /// cycles raise CycleError, repeated labels DuplicateLabel.
    static Poset from_covers(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& covers,
                             std::vector<std::string>* warnings = nullptr) {
        std::map<std::string, int> index;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (!index.emplace(labels[i], static_cast<int>(i)).second) throw DuplicateLabel("duplicate label '" + labels[i] + "'");
        std::vector<std::pair<int, int>> idx;
        for (const auto& [a, b] : covers) {
            auto ia = index.find(a);
            auto ib = index.find(b);
            if (ia == index.end() || ib == index.end())
                throw PreconditionError("cover (" + a + ", " + b + ") names an unknown element");
            idx.emplace_back(ia->second, ib->second);
        }
        return from_index_covers(std::move(labels), idx, warnings);
    }

    /// As from_covers, with covers given by element index.
    static Poset from_index_covers(std::vector<std::string> labels, std::vector<std::pair<int, int>> covers,
                                   std::vector<std::string>* warnings = nullptr) {
        Poset p;
        const int n = static_cast<int>(labels.size());
        {
            std::set<std::string> seen;
            for (const auto& l : labels)
                if (!seen.insert(l).second) throw DuplicateLabel("duplicate label '" + l + "'");
        }
        p.labels_ = std::move(labels);
        std::sort(covers.begin(), covers.end());
        covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
        for (const auto& [a, b] : covers) {
            if (a < 0 || b < 0 || a >= n || b >= n) throw PreconditionError("cover index out of range");
            if (a == b) throw CycleError("element '" + p.labels_[static_cast<std::size_t>(a)] + "' covers itself");
        }
        std::vector<std::vector<int>> up(static_cast<std::size_t>(n));
        for (const auto& [a, b] : covers) up[static_cast<std::size_t>(a)].push_back(b);

        // lexicographically smallest topological order
        std::vector<int> indeg(static_cast<std::size_t>(n), 0);
        for (const auto& [a, b] : covers) ++indeg[static_cast<std::size_t>(b)];
        std::priority_queue<int, std::vector<int>, std::greater<>> ready;
        for (int i = 0; i < n; ++i)
            if (indeg[static_cast<std::size_t>(i)] == 0) ready.push(i);
        std::vector<int> order;
        while (!ready.empty()) {
            const int x = ready.top();
            ready.pop();
            order.push_back(x);
            for (int y : up[static_cast<std::size_t>(x)])
                if (--indeg[static_cast<std::size_t>(y)] == 0) ready.push(y);
        }
        if (static_cast<int>(order.size()) != n) throw CycleError("cover relation contains a cycle");

        p.n_ = n;
        p.leq_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int x = *it;
            p.set_leq(x, x);
            for (int y : up[static_cast<std::size_t>(x)])
                for (int z = 0; z < n; ++z)
                    if (p.leq(y, z)) p.set_leq(x, z);
        }
        for (const auto& [a, b] : covers) {
            bool redundant = false;
            for (int c : up[static_cast<std::size_t>(a)])
                if (c != b && p.leq(c, b)) redundant = true;
            if (redundant) {
                if (warnings)
                    warnings->push_back("dropping redundant cover (" + p.labels_[static_cast<std::size_t>(a)] + ", " +
                                        p.labels_[static_cast<std::size_t>(b)] + ")");
                continue;
            }
            p.covers_.emplace_back(a, b);
        }
        p.upper_.assign(static_cast<std::size_t>(n), {});
        p.lower_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [a, b] : p.covers_) {
            p.upper_[static_cast<std::size_t>(a)].push_back(b);
            p.lower_[static_cast<std::size_t>(b)].push_back(a);
        }
        p.linear_ = std::move(order);
        return p;
    }

    /// Builds from an arbitrary relation (pairs a <= b); the transitive reduction becomes the cover set.
    static Poset from_relation(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& relation) {
        const int n = static_cast<int>(labels.size());
        std::vector<std::vector<char>> r(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
        for (const auto& [a, b] : relation)
            if (a != b) r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                if (r[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                    for (int j = 0; j < n; ++j)
                        if (r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
        std::vector<std::pair<int, int>> covers;
        for (int i = 0; i < n; ++i) {
            if (r[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]) throw CycleError("relation contains a cycle");
            for (int j = 0; j < n; ++j) {
                if (!r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) continue;
                bool cover = true;
                for (int k = 0; k < n && cover; ++k)
                    if (r[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] && r[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) cover = false;
                if (cover) covers.emplace_back(i, j);
            }
        }
        return from_index_covers(std::move(labels), std::move(covers));
    }

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int x) const { return labels_[static_cast<std::size_t>(x)]; }
    std::optional<int> index_of(const std::string& l) const {
        for (int i = 0; i < n_; ++i)
            if (labels_[static_cast<std::size_t>(i)] == l) return i;
        return std::nullopt;
    }

    /// Irredundant covers (lower, upper), sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& upper_covers(int x) const { return upper_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& lower_covers(int x) const { return lower_[static_cast<std::size_t>(x)]; }

    bool leq(int x, int y) const { return leq_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)] != 0; }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

    /// The lexicographically smallest linear extension (by index).
    const std::vector<int>& linear_extension() const { return linear_; }

    std::vector<int> minimal_elements() const {
        std::vector<int> out;
        for (int x = 0; x < n_; ++x)
            if (lower_[static_cast<std::size_t>(x)].empty()) out.push_back(x);
        return out;
    }
    std::vector<int> maximal_elements() const {
        std::vector<int> out;
        for (int x = 0; x < n_; ++x)
            if (upper_[static_cast<std::size_t>(x)].empty()) out.push_back(x);
        return out;
    }
    std::optional<int> bottom() const {
        auto m = minimal_elements();
        if (m.size() == 1) return m.front();
        return std::nullopt;
    }
    std::optional<int> top() const {
        auto m = maximal_elements();
        if (m.size() == 1) return m.front();
        return std::nullopt;
    }

    /// Same labels in the same order and same covers.
    friend bool operator==(const Poset& a, const Poset& b) { return a.labels_ == b.labels_ && a.covers_ == b.covers_; }
    friend bool operator!=(const Poset& a, const Poset& b) { return !(a == b); }

private:
    void set_leq(int x, int y) { leq_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(y)] = 1; }

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::vector<int>> upper_;
    std::vector<std::vector<int>> lower_;
    std::vector<std::uint8_t> leq_;
    std::vector<int> linear_;
};

// ---------------------------------------------------------------------------
// heights

inline void validate_height(const Poset& p, const HeightFunction& h) {
    if (static_cast<int>(h.size()) != p.size()) throw InvalidHeight("height function has the wrong number of values");
    for (int v : h.values)
        if (v < 0) throw InvalidHeight("height values must be natural numbers");
    for (const auto& [a, b] : p.covers())
        if (!(h(a) < h(b)))
            throw InvalidHeight("height must increase along the cover " + p.label(a) + " < " + p.label(b));
}

/// Canonical rank function; throws NotGraded if no height increases by exactly one on covers.
inline RankFunction rank_function(const Poset& p) {
    const int n = p.size();
    std::vector<std::optional<int>> r(static_cast<std::size_t>(n));
    for (int start = 0; start < n; ++start) {
        if (r[static_cast<std::size_t>(start)]) continue;
        std::vector<int> component{start};
        r[static_cast<std::size_t>(start)] = 0;
        for (std::size_t i = 0; i < component.size(); ++i) {
            const int x = component[i];
            const int rx = *r[static_cast<std::size_t>(x)];
            auto visit = [&](int y, int ry) {
                auto& slot = r[static_cast<std::size_t>(y)];
                if (!slot) {
                    slot = ry;
                    component.push_back(y);
                } else if (*slot != ry) {
                    throw NotGraded("poset is not graded");
                }
            };
            for (int y : p.upper_covers(x)) visit(y, rx + 1);
            for (int y : p.lower_covers(x)) visit(y, rx - 1);
        }
        int lo = 0;
        for (int x : component) lo = std::min(lo, *r[static_cast<std::size_t>(x)]);
        for (int x : component) *r[static_cast<std::size_t>(x)] -= lo;
    }
    RankFunction out;
    for (const auto& v : r) out.values.push_back(*v);
    return out;
}

inline bool is_graded(const Poset& p) {
    try {
        rank_function(p);
        return true;
    } catch (const NotGraded&) {
        return false;
    }
}

/// Positions (0-based) in the lexicographically smallest linear extension.
inline HeightFunction height_from_linear_extension(const Poset& p) {
    HeightFunction h;
    h.values.assign(static_cast<std::size_t>(p.size()), 0);
    const auto& order = p.linear_extension();
    for (std::size_t i = 0; i < order.size(); ++i) h.values[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    return h;
}

inline bool is_bounded(const Poset& p) { return p.bottom().has_value() && p.top().has_value(); }

// ---------------------------------------------------------------------------
// constructions

inline Poset dual(const Poset& p) {
    std::vector<std::pair<int, int>> c;
    for (const auto& [a, b] : p.covers()) c.emplace_back(b, a);
    return Poset::from_index_covers(p.labels(), std::move(c));
}

/// H - h on the dual; requires H >= max h.
inline HeightFunction dual_height(const HeightFunction& h, int H) {
    if (H < h.max()) throw PreconditionError("dual height needs H >= max h");
    HeightFunction out;
    for (int v : h.values) out.values.push_back(H - v);
    return out;
}

/// Elements (p, q) indexed p * |Q| + q, labelled "(a,b)".
inline Poset product(const Poset& p, const Poset& q) {
    const int m = q.size();
    std::vector<std::string> labels;
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < m; ++j) labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
    std::vector<std::pair<int, int>> c;
    for (const auto& [a, b] : p.covers())
        for (int j = 0; j < m; ++j) c.emplace_back(a * m + j, b * m + j);
    for (int i = 0; i < p.size(); ++i)
        for (const auto& [a, b] : q.covers()) c.emplace_back(i * m + a, i * m + b);
    return Poset::from_index_covers(std::move(labels), std::move(c));
}

inline HeightFunction product_height(const HeightFunction& g, const HeightFunction& h) {
    HeightFunction out;
    for (int a : g.values)
        for (int b : h.values) out.values.push_back(a + b);
    return out;
}

/// Elements of P first, then Q. Labels are kept unless they collide, in which case
/// they are prefixed with "1:" and "2:".
inline Poset disjoint_union(const Poset& p, const Poset& q) {
    std::set<std::string> left(p.labels().begin(), p.labels().end());
    bool clash = false;
    for (const auto& l : q.labels())
        if (left.count(l)) clash = true;
    std::vector<std::string> labels;
    for (const auto& l : p.labels()) labels.push_back(clash ? "1:" + l : l);
    for (const auto& l : q.labels()) labels.push_back(clash ? "2:" + l : l);
    std::vector<std::pair<int, int>> c = p.covers();
    for (const auto& [a, b] : q.covers()) c.emplace_back(a + p.size(), b + p.size());
    return Poset::from_index_covers(std::move(labels), std::move(c));
}

inline HeightFunction union_height(const HeightFunction& g, const HeightFunction& h) {
    HeightFunction out = g;
    out.values.insert(out.values.end(), h.values.begin(), h.values.end());
    return out;
}

/// Distributive lattice of lower ideals ordered by inclusion. Elements are sorted by
/// size, then by membership bitmask; labels list member labels, e.g. "{a,c}".
inline Poset j_of_p(const Poset& p) {
    const int n = p.size();
    if (n > 24) throw PreconditionError("j_of_p supports at most 24 elements");
    std::vector<std::uint32_t> down(static_cast<std::size_t>(n), 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (p.lt(y, x)) down[static_cast<std::size_t>(x)] |= (1u << y);
    // grow ideals by adding an element whose strict down-set is already inside
    std::set<std::uint32_t> seen{0u};
    std::vector<std::uint32_t> ideals{0u};
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        const std::uint32_t s = ideals[i];
        for (int x = 0; x < n; ++x) {
            if (s & (1u << x)) continue;
            if ((down[static_cast<std::size_t>(x)] & s) != down[static_cast<std::size_t>(x)]) continue;
            const std::uint32_t t = s | (1u << x);
            if (seen.insert(t).second) ideals.push_back(t);
        }
    }
    std::sort(ideals.begin(), ideals.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::map<std::uint32_t, int> pos;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        pos[ideals[i]] = static_cast<int>(i);
        std::string l = "{";
        bool first = true;
        for (int x = 0; x < n; ++x)
            if (ideals[i] & (1u << x)) {
                if (!first) l += ",";
                l += p.label(x);
                first = false;
            }
        labels.push_back(l + "}");
    }
    std::vector<std::pair<int, int>> covers;
    for (std::uint32_t s : ideals)
        for (int x = 0; x < n; ++x) {
            const std::uint32_t t = s | (1u << x);
            if (t != s && pos.count(t)) covers.emplace_back(pos[s], pos[t]);
        }
    return Poset::from_index_covers(std::move(labels), std::move(covers));
}

// ---------------------------------------------------------------------------
// Möbius function and chains

/// mu(x, y) for all pairs (zero when x is not <= y).
inline IntMatrix mobius(const Poset& p) {
    const int n = p.size();
    IntMatrix mu(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    const auto& order = p.linear_extension();
    for (int x = 0; x < n; ++x) {
        auto& row = mu[static_cast<std::size_t>(x)];
        for (int y : order) {
            if (!p.leq(x, y)) continue;
            if (x == y) {
                row[static_cast<std::size_t>(y)] = 1;
                continue;
            }
            std::int64_t s = 0;
            for (int z = 0; z < n; ++z)
                if (p.leq(x, z) && p.lt(z, y)) s += row[static_cast<std::size_t>(z)];
            row[static_cast<std::size_t>(y)] = -s;
        }
    }
    return mu;
}

/// Calls f(chain) for every strict chain c_1 < ... < c_k, k >= 1, in lexicographic DFS order.
template <class F>
void for_each_strict_chain(const Poset& p, F&& f) {
    std::vector<int> chain;
    std::function<void(int)> extend = [&](int x) {
        chain.push_back(x);
        f(static_cast<const std::vector<int>&>(chain));
        for (int y = 0; y < p.size(); ++y)
            if (p.lt(x, y)) extend(y);
        chain.pop_back();
    };
    for (int x = 0; x < p.size(); ++x) extend(x);
}

/// All strict chains with exactly k elements (k >= 1).
inline std::vector<std::vector<int>> strict_chains(const Poset& p, int k) {
    if (k < 1) throw PreconditionError("strict_chains needs k >= 1");
    std::vector<std::vector<int>> out;
    for_each_strict_chain(p, [&](const std::vector<int>& c) {
        if (static_cast<int>(c.size()) == k) out.push_back(c);
    });
    return out;
}

/// Number of strict chains by size: result[k] = #Ch_k (result[0] = 0).
inline std::vector<BigInt> chain_counts(const Poset& p) {
    const int n = p.size();
    std::vector<BigInt> total{BigInt(0)};
    // ending[x] = number of k-chains whose top is x
    std::vector<BigInt> ending(static_cast<std::size_t>(n), BigInt(1));
    const auto& order = p.linear_extension();
    for (int k = 1; k <= n; ++k) {
        BigInt s = 0;
        for (const auto& e : ending) s += e;
        if (s == 0) break;
        total.push_back(s);
        std::vector<BigInt> next(static_cast<std::size_t>(n), BigInt(0));
        for (int y : order)
            for (int x = 0; x < n; ++x)
                if (p.lt(x, y)) next[static_cast<std::size_t>(y)] += ending[static_cast<std::size_t>(x)];
        ending = std::move(next);
    }
    return total;
}

/// Saturated chains from a minimal to a maximal element.
inline std::vector<std::vector<int>> maximal_chains(const Poset& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> chain;
    std::function<void(int)> walk = [&](int x) {
        chain.push_back(x);
        if (p.upper_covers(x).empty()) out.push_back(chain);
        for (int y : p.upper_covers(x)) walk(y);
        chain.pop_back();
    };
    for (int x : p.minimal_elements()) walk(x);
    return out;
}

/// Saturated chains from x to y (x <= y), as element lists including both ends.
inline std::vector<std::vector<int>> saturated_chains(const Poset& p, int x, int y) {
    std::vector<std::vector<int>> out;
    if (!p.leq(x, y)) return out;
    std::vector<int> chain;
    std::function<void(int)> walk = [&](int z) {
        chain.push_back(z);
        if (z == y) {
            out.push_back(chain);
        } else {
            for (int w : p.upper_covers(z))
                if (p.leq(w, y)) walk(w);
        }
        chain.pop_back();
    };
    walk(x);
    return out;
}

/// Euler characteristic of the order complex: sum_k (-1)^(k-1) #Ch_k.
inline BigInt euler_characteristic(const Poset& p) {
    const auto counts = chain_counts(p);
    BigInt chi = 0;
    for (std::size_t k = 1; k < counts.size(); ++k) chi += (k % 2 == 1) ? BigInt(counts[k]) : BigInt(-counts[k]);
    return chi;
}

/// Subposet on the given elements (in the given order) with the induced order.
inline Poset induced_subposet(const Poset& p, const std::vector<int>& keep) {
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rel;
    for (int x : keep) labels.push_back(p.label(x));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j)
            if (p.lt(keep[i], keep[j])) rel.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Poset::from_relation(std::move(labels), rel);
}

/// mu(x, y) = (-1)^(rk y - rk x) on every interval. Requires a bounded graded poset.
inline bool is_eulerian(const Poset& p) {
    if (!is_bounded(p)) throw PreconditionError("is_eulerian needs a bounded poset");
    const RankFunction rk = rank_function(p);
    const IntMatrix mu = mobius(p);
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            if (!p.leq(x, y)) continue;
            const std::int64_t expect = ((rk(y) - rk(x)) % 2 == 0) ? 1 : -1;
            if (mu[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != expect) return false;
        }
    return true;
}

/// X_P(y) = sum_p mu(0, p) y^(H - rk p) for bounded graded P.
inline IntPoly characteristic_polynomial(const Poset& p) {
    if (!is_bounded(p)) throw PreconditionError("characteristic polynomial needs a bounded poset");
    const RankFunction rk = rank_function(p);
    const int bottom = *p.bottom();
    const int H = rk(*p.top());
    const IntMatrix mu = mobius(p);
    std::vector<BigInt> c(static_cast<std::size_t>(H) + 1, BigInt(0));
    for (int x = 0; x < p.size(); ++x) c[static_cast<std::size_t>(H - rk(x))] += mu[static_cast<std::size_t>(bottom)][static_cast<std::size_t>(x)];
    return IntPoly(std::move(c));
}

/// Human-readable integer polynomial, e.g. `1 - 2y + y^2`.
inline std::string format_spaced(const IntPoly& p, const std::string& var) {
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        const BigInt c = p.coeff(k);
        if (c == 0) continue;
        const bool neg = c < 0;
        const BigInt mag = neg ? BigInt(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty()) out += mag.str();
        else if (mag == 1) out += mono;
        else out += mag.str() + mono;
    }
    return out.empty() ? "0" : out;
}

} // namespace qzeta
