#pragma once

// Seeded random posets and heights shared by the property tests and the acceptance run.

#include "qzeta/qzeta_all.hpp"

#include <random>
#include <string>
#include <vector>

namespace suite {

using qzeta::HeightFunction;
using qzeta::Poset;

/// Random poset on n elements: a random DAG along the identity order, then its closure.
inline Poset random_poset(std::mt19937& rng, int n, double density = 0.35) {
    std::bernoulli_distribution edge(density);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) rel.emplace_back(i, j);
    return Poset::from_relation(std::move(labels), rel);
}

/// Length of the longest chain strictly above each element.
inline std::vector<int> depth_above(const Poset& p) {
    std::vector<int> up(static_cast<std::size_t>(p.size()), 0);
    const auto& order = p.linear_extension();
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (int y : p.upper_covers(*it)) up[static_cast<std::size_t>(*it)] = std::max(up[static_cast<std::size_t>(*it)], up[static_cast<std::size_t>(y)] + 1);
    return up;
}

/// Longest chain length minus one (0 for an antichain, -1 when empty).
inline int poset_height(const Poset& p) {
    if (p.empty()) return -1;
    int m = 0;
    for (int v : depth_above(p)) m = std::max(m, v);
    return m;
}

/// Uniformly random admissible height with values in 0..max_h; P must have height <= max_h.
inline HeightFunction random_height(std::mt19937& rng, const Poset& p, int max_h) {
    const auto up = depth_above(p);
    HeightFunction h;
    h.values.assign(static_cast<std::size_t>(p.size()), 0);
    for (int x : p.linear_extension()) {
        int lo = 0;
        for (int y : p.lower_covers(x)) lo = std::max(lo, h(y) + 1);
        const int hi = max_h - up[static_cast<std::size_t>(x)];
        std::uniform_int_distribution<int> pick(lo, hi);
        h.values[static_cast<std::size_t>(x)] = pick(rng);
    }
    return h;
}

/// Random poset with 1..max_n elements and height at most max_h.
inline Poset random_small_poset(std::mt19937& rng, int max_n, int max_h = 4) {
    std::uniform_int_distribution<int> size(1, max_n);
    std::uniform_real_distribution<double> dens(0.15, 0.6);
    for (;;) {
        Poset p = random_poset(rng, size(rng), dens(rng));
        if (poset_height(p) <= max_h) return p;
    }
}

/// Random bounded graded poset of rank H: level sizes 1..width, covers only between adjacent levels.
inline Poset random_bounded_graded(std::mt19937& rng, int H, int width) {
    std::uniform_int_distribution<int> wpick(1, width);
    std::vector<std::vector<int>> levels;
    std::vector<std::string> labels;
    int next = 0;
    for (int r = 0; r <= H; ++r) {
        const int w = (r == 0 || r == H) ? 1 : wpick(rng);
        std::vector<int> lev;
        for (int i = 0; i < w; ++i) {
            lev.push_back(next++);
            labels.push_back("r" + std::to_string(r) + "_" + std::to_string(i));
        }
        levels.push_back(lev);
    }
    std::vector<std::pair<int, int>> covers;
    std::bernoulli_distribution coin(0.5);
    for (int r = 0; r < H; ++r) {
        const auto& lo = levels[static_cast<std::size_t>(r)];
        const auto& up = levels[static_cast<std::size_t>(r + 1)];
        std::vector<bool> lo_used(lo.size(), false), up_used(up.size(), false);
        for (std::size_t i = 0; i < lo.size(); ++i)
            for (std::size_t j = 0; j < up.size(); ++j)
                if (coin(rng)) {
                    covers.emplace_back(lo[i], up[j]);
                    lo_used[i] = up_used[j] = true;
                }
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (!lo_used[i]) {
                std::uniform_int_distribution<std::size_t> j(0, up.size() - 1);
                const std::size_t k = j(rng);
                covers.emplace_back(lo[i], up[k]);
                up_used[k] = true;
            }
        for (std::size_t j = 0; j < up.size(); ++j)
            if (!up_used[j]) {
                std::uniform_int_distribution<std::size_t> i(0, lo.size() - 1);
                covers.emplace_back(lo[i(rng)], up[j]);
            }
    }
    return Poset::from_index_covers(std::move(labels), std::move(covers));
}

/// Named posets from the generators and the examples.
struct Named {
    std::string name;
    Poset poset;
};

inline std::vector<Named> fixed_posets() {
    std::vector<Named> out;
    for (int i = 1; i <= 6; ++i) out.push_back({"ex" + std::to_string(i), qzeta::example("ex" + std::to_string(i))});
    for (int n = 1; n <= 5; ++n) out.push_back({"chain" + std::to_string(n), qzeta::chain(n)});
    for (int n = 1; n <= 3; ++n) out.push_back({"antichain" + std::to_string(n), qzeta::antichain(n)});
    for (int n = 0; n <= 4; ++n) out.push_back({"boolean" + std::to_string(n), qzeta::boolean(n)});
    for (int m = 1; m <= 4; ++m) out.push_back({"diamond" + std::to_string(m), qzeta::diamond(m)});
    out.push_back({"dualV", qzeta::dual(qzeta::example("ex5"))});
    out.push_back({"weakS3", qzeta::weak_order_s3()});
    return out;
}

/// The bounded graded suite: fixed members, ideal lattices of random posets, and random graded posets.
inline std::vector<Named> bounded_graded_suite(std::uint32_t seed = 20240601, int random_count = 90) {
    std::vector<Named> out;
    for (auto& n : fixed_posets())
        if (qzeta::is_bounded(n.poset) && qzeta::is_graded(n.poset)) out.push_back(std::move(n));
    std::mt19937 rng(seed);
    for (int i = 0; i < 12; ++i) {
        const Poset p = random_small_poset(rng, 4);
        out.push_back({"J(random" + std::to_string(i) + ")", qzeta::j_of_p(p)});
    }
    std::uniform_int_distribution<int> hpick(1, 4);
    for (int i = 0; i < random_count; ++i)
        out.push_back({"graded" + std::to_string(i), random_bounded_graded(rng, hpick(rng), 3)});
    return out;
}

/// Random posets with at most max_n elements, each with an admissible height of maximum <= 4.
struct HeightedPoset {
    std::string name;
    Poset poset;
    HeightFunction height;
};

inline std::vector<HeightedPoset> heighted_suite(std::uint32_t seed, int count, int max_n) {
    std::mt19937 rng(seed);
    std::vector<HeightedPoset> out;
    for (int i = 0; i < count; ++i) {
        Poset p = random_small_poset(rng, max_n);
        HeightFunction h = random_height(rng, p, 4);
        out.push_back({"random" + std::to_string(i), std::move(p), std::move(h)});
    }
    return out;
}

} // namespace suite
