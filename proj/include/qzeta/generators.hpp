#pragma once

#include "poset.hpp"

#include <array>
#include <string>
#include <vector>

namespace qzeta {

/// Total order 0 < 1 < ... < n-1.
inline Poset chain(int n) {
    if (n < 0) throw PreconditionError("chain size must be >= 0");
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> c;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) c.emplace_back(i, i + 1);
    return Poset::from_index_covers(std::move(labels), std::move(c));
}

inline Poset antichain(int n) {
    if (n < 0) throw PreconditionError("antichain size must be >= 0");
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return Poset::from_index_covers(std::move(labels), {});
}

/// Subsets of {1..n} under inclusion; element index is the membership bitmask.
inline Poset boolean(int n) {
    if (n < 0 || n > 16) throw PreconditionError("boolean lattice rank must be in 0..16");
    const int size = 1 << n;
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> c;
    for (int s = 0; s < size; ++s) {
        std::string l = "{";
        bool first = true;
        for (int i = 0; i < n; ++i)
            if (s & (1 << i)) {
                if (!first) l += ",";
                l += std::to_string(i + 1);
                first = false;
            }
        labels.push_back(l + "}");
        for (int i = 0; i < n; ++i)
            if (!(s & (1 << i))) c.emplace_back(s, s | (1 << i));
    }
    return Poset::from_index_covers(std::move(labels), std::move(c));
}

/// Bottom "0", m pairwise incomparable middles "m1".."mm", top "1".
inline Poset diamond(int m) {
    if (m < 0) throw PreconditionError("diamond width must be >= 0");
    std::vector<std::string> labels{"0"};
    std::vector<std::pair<int, int>> c;
    for (int i = 1; i <= m; ++i) {
        labels.push_back("m" + std::to_string(i));
        c.emplace_back(0, i);
        c.emplace_back(i, m + 1);
    }
    labels.push_back("1");
    if (m == 0) c.emplace_back(0, 1);
    return Poset::from_index_covers(std::move(labels), std::move(c));
}

/// The six small example posets, ids "ex1".."ex6":
/// ex1 one point, ex2 a 3-element chain, ex3 bounded with three middles,
/// ex4 a,b < c,d, ex5 a < b,c, ex6 a < b,c with b < d and c < e.
inline Poset example(const std::string& id) {
    using Covers = std::vector<std::pair<std::string, std::string>>;
    if (id == "ex1") return Poset::from_covers({"o"}, {});
    if (id == "ex2") return Poset::from_covers({"a", "b", "c"}, Covers{{"a", "b"}, {"b", "c"}});
    if (id == "ex3")
        return Poset::from_covers({"0", "a", "b", "c", "1"},
                                  Covers{{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
    if (id == "ex4") return Poset::from_covers({"a", "b", "c", "d"}, Covers{{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
    if (id == "ex5") return Poset::from_covers({"a", "b", "c"}, Covers{{"a", "b"}, {"a", "c"}});
    if (id == "ex6")
        return Poset::from_covers({"a", "b", "c", "d", "e"}, Covers{{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "e"}});
    throw PreconditionError("unknown example id '" + id + "'");
}

/// Triangles of the icosahedron on vertices 0 (apex), 1..5 (upper ring), 6..10 (lower ring), 11 (nadir).
inline std::vector<std::array<int, 3>> icosahedron_triangles() {
    std::vector<std::array<int, 3>> f;
    for (int i = 0; i < 5; ++i) {
        const int u = 1 + i, u1 = 1 + (i + 1) % 5;
        const int l = 6 + i, l1 = 6 + (i + 1) % 5;
        f.push_back({0, u, u1});
        f.push_back({11, l, l1});
        f.push_back({u, u1, l});
        f.push_back({u1, l, l1});
    }
    for (auto& t : f) std::sort(t.begin(), t.end());
    std::sort(f.begin(), f.end());
    return f;
}

/// Face lattice of the icosahedron: empty face, 12 vertices, 30 edges, 20 triangles, the solid. Rank 4.
inline Poset icosahedron_face_lattice() {
    const auto tri = icosahedron_triangles();
    std::set<std::pair<int, int>> edge_set;
    for (const auto& t : tri) {
        edge_set.insert({t[0], t[1]});
        edge_set.insert({t[0], t[2]});
        edge_set.insert({t[1], t[2]});
    }
    const std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
    std::vector<std::string> labels{"empty"};
    for (int v = 0; v < 12; ++v) labels.push_back("v" + std::to_string(v));
    for (const auto& [a, b] : edges) labels.push_back("e" + std::to_string(a) + "_" + std::to_string(b));
    for (const auto& t : tri)
        labels.push_back("f" + std::to_string(t[0]) + "_" + std::to_string(t[1]) + "_" + std::to_string(t[2]));
    labels.push_back("solid");
    const int vbase = 1, ebase = 13, fbase = ebase + static_cast<int>(edges.size());
    const int top = fbase + static_cast<int>(tri.size());
    std::vector<std::pair<int, int>> c;
    for (int v = 0; v < 12; ++v) c.emplace_back(0, vbase + v);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        c.emplace_back(vbase + edges[e].first, ebase + static_cast<int>(e));
        c.emplace_back(vbase + edges[e].second, ebase + static_cast<int>(e));
    }
    for (std::size_t f = 0; f < tri.size(); ++f) {
        for (std::size_t e = 0; e < edges.size(); ++e) {
            const auto& t = tri[f];
            const bool a = std::find(t.begin(), t.end(), edges[e].first) != t.end();
            const bool b = std::find(t.begin(), t.end(), edges[e].second) != t.end();
            if (a && b) c.emplace_back(ebase + static_cast<int>(e), fbase + static_cast<int>(f));
        }
        c.emplace_back(fbase + static_cast<int>(f), top);
    }
    return Poset::from_index_covers(std::move(labels), std::move(c));
}

/// Diagonals (i, j), i < j, of a convex polygon with `sides` vertices.
inline std::vector<std::pair<int, int>> polygon_diagonals(int sides) {
    std::vector<std::pair<int, int>> d;
    for (int i = 0; i < sides; ++i)
        for (int j = i + 2; j < sides; ++j)
            if (!(i == 0 && j == sides - 1)) d.emplace_back(i, j);
    return d;
}

inline bool diagonals_cross(std::pair<int, int> a, std::pair<int, int> b) {
    auto [i, j] = a;
    auto [k, l] = b;
    return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

/// All sets of pairwise noncrossing diagonals of a convex polygon, as bitmasks over polygon_diagonals().
inline std::vector<std::uint32_t> noncrossing_dissections(int sides) {
    const auto d = polygon_diagonals(sides);
    const int m = static_cast<int>(d.size());
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < (1u << m); ++s) {
        bool ok = true;
        for (int a = 0; a < m && ok; ++a)
            for (int b = a + 1; b < m && ok; ++b)
                if ((s >> a & 1u) && (s >> b & 1u) && diagonals_cross(d[static_cast<std::size_t>(a)], d[static_cast<std::size_t>(b)])) ok = false;
        if (ok) out.push_back(s);
    }
    return out;
}

/// Face lattice of the 3-dimensional associahedron: dissections of a hexagon ordered by
/// reverse inclusion, with an adjoined bottom. 14 vertices, 21 edges, 9 facets; 46 elements, rank 4.
inline Poset associahedron3_face_lattice() {
    const auto diag = polygon_diagonals(6);
    auto sets = noncrossing_dissections(6);
    // faces from vertices (triangulations, 3 diagonals) up to the whole polytope (no diagonal)
    std::stable_sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
        return __builtin_popcount(a) > __builtin_popcount(b);
    });
    std::vector<std::string> labels{"empty"};
    for (std::uint32_t s : sets) {
        std::string l = "D[";
        bool first = true;
        for (std::size_t k = 0; k < diag.size(); ++k)
            if (s >> k & 1u) {
                if (!first) l += ",";
                l += std::to_string(diag[k].first) + std::to_string(diag[k].second);
                first = false;
            }
        labels.push_back(l + "]");
    }
    std::vector<std::pair<int, int>> c;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (__builtin_popcount(sets[i]) == 3) c.emplace_back(0, static_cast<int>(i) + 1);
        for (std::size_t j = 0; j < sets.size(); ++j) {
            const bool sub = (sets[j] & sets[i]) == sets[j];
            if (sub && __builtin_popcount(sets[i]) == __builtin_popcount(sets[j]) + 1)
                c.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
        }
    }
    return Poset::from_index_covers(std::move(labels), std::move(c));
}

/// Weak order on S_3: the hexagon 0 < s,t; s < st; t < ts; st,ts < w0.
inline Poset weak_order_s3() {
    return Poset::from_covers({"e", "s", "t", "st", "ts", "w0"},
                              {{"e", "s"}, {"e", "t"}, {"s", "st"}, {"t", "ts"}, {"st", "w0"}, {"ts", "w0"}});
}

} // namespace qzeta
