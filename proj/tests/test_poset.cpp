#include "support/oracles.hpp"
#include "support/suite.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace qzeta;

namespace {

std::vector<int> rank_profile(const Poset& p) {
    const RankFunction rk = rank_function(p);
    std::vector<int> out(static_cast<std::size_t>(rk.max()) + 1, 0);
    for (int x = 0; x < p.size(); ++x) ++out[static_cast<std::size_t>(rk(x))];
    return out;
}

bool is_lattice(const Poset& p) {
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            // join: the unique minimal upper bound
            std::vector<int> ub;
            for (int z = 0; z < p.size(); ++z)
                if (p.leq(x, z) && p.leq(y, z)) ub.push_back(z);
            int minimal = 0;
            for (int z : ub) {
                bool m = true;
                for (int w : ub)
                    if (p.lt(w, z)) m = false;
                if (m) ++minimal;
            }
            if (minimal != 1) return false;
        }
    return is_bounded(p);
}

} // namespace

TEST(FromCovers, Basics) {
    const Poset two = Poset::from_covers({"a", "b"}, {{"a", "b"}});
    EXPECT_EQ(two.size(), 2);
    EXPECT_TRUE(two.leq(0, 1));
    EXPECT_FALSE(two.leq(1, 0));
    EXPECT_THROW(Poset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    EXPECT_THROW(Poset::from_covers({"a", "a"}, {}), DuplicateLabel);
    EXPECT_THROW(Poset::from_covers({"a"}, {{"a", "z"}}), PreconditionError);
}

TEST(FromCovers, RedundantCoverDroppedWithWarning) {
    std::vector<std::string> warnings;
    const Poset p = Poset::from_covers({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}, &warnings);
    EXPECT_EQ(p.covers().size(), 2u);
    EXPECT_EQ(warnings.size(), 1u);
    EXPECT_TRUE(p.leq(0, 2));
}

TEST(FromCovers, DiamondIsBoundedGraded) {
    const Poset d = example("ex3");
    EXPECT_TRUE(is_bounded(d));
    EXPECT_TRUE(is_graded(d));
    EXPECT_EQ(rank_profile(d), (std::vector<int>{1, 3, 1}));
}

TEST(RankFunction, Examples) {
    EXPECT_EQ(rank_function(chain(3)).values, (std::vector<int>{0, 1, 2}));
    EXPECT_EQ(rank_function(example("ex4")).values, (std::vector<int>{0, 0, 1, 1}));
    // a < b < c together with a < d < c is graded; adding the short side a < e < ... breaks it
    const Poset pentagon = Poset::from_covers({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
    EXPECT_THROW(rank_function(pentagon), NotGraded);
    EXPECT_FALSE(is_graded(pentagon));
    // components each start at 0
    EXPECT_EQ(rank_function(disjoint_union(chain(2), chain(3))).values, (std::vector<int>{0, 1, 0, 1, 2}));
}

TEST(RankFunction, InvariantsOnRandomPosets) {
    std::mt19937 rng(17);
    int graded = 0;
    for (int i = 0; i < 200; ++i) {
        const Poset p = suite::random_small_poset(rng, 7);
        if (!is_graded(p)) continue;
        ++graded;
        const RankFunction rk = rank_function(p);
        for (const auto& [a, b] : p.covers()) EXPECT_EQ(rk(b), rk(a) + 1);
        // minimum 0 on each connected component of the comparability graph
        std::vector<int> comp(static_cast<std::size_t>(p.size()));
        for (int x = 0; x < p.size(); ++x) comp[static_cast<std::size_t>(x)] = x;
        for (bool changed = true; changed;) {
            changed = false;
            for (int x = 0; x < p.size(); ++x)
                for (int y = 0; y < p.size(); ++y)
                    if (p.comparable(x, y) && comp[static_cast<std::size_t>(y)] < comp[static_cast<std::size_t>(x)]) {
                        comp[static_cast<std::size_t>(x)] = comp[static_cast<std::size_t>(y)];
                        changed = true;
                    }
        }
        std::map<int, int> low;
        for (int x = 0; x < p.size(); ++x) {
            auto [it, fresh] = low.emplace(comp[static_cast<std::size_t>(x)], rk(x));
            if (!fresh) it->second = std::min(it->second, rk(x));
        }
        for (const auto& [c, m] : low) EXPECT_EQ(m, 0);
    }
    EXPECT_GT(graded, 20);
}

TEST(HeightFromLinearExtension, IsAdmissible) {
    const Poset p = example("ex6");
    const HeightFunction h = height_from_linear_extension(p);
    EXPECT_NO_THROW(validate_height(p, h));
    std::vector<int> sorted = h.values;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2, 3, 4}));
    EXPECT_THROW(validate_height(p, HeightFunction{{0, 0, 1, 1, 1}}), InvalidHeight);
}

TEST(Constructions, DualProductUnion) {
    const Poset v = example("ex5");
    const Poset dv = dual(v);
    EXPECT_TRUE(dv.leq(1, 0));
    EXPECT_EQ(dual(dv), v);
    const Poset b2 = product(chain(2), chain(2));
    EXPECT_EQ(b2.size(), 4);
    EXPECT_TRUE(is_bounded(b2));
    EXPECT_EQ(rank_profile(b2), (std::vector<int>{1, 2, 1}));
    const Poset u = disjoint_union(chain(2), antichain(1));
    EXPECT_EQ(u.size(), 3);
    EXPECT_FALSE(u.comparable(0, 2));
}

TEST(Constructions, DualInvolutionOnRandomPosets) {
    std::mt19937 rng(23);
    for (int i = 0; i < 50; ++i) {
        const Poset p = suite::random_small_poset(rng, 7);
        EXPECT_EQ(dual(dual(p)), p);
    }
}

TEST(Constructions, CoversAreTheHasseDiagram) {
    std::mt19937 rng(29);
    for (int i = 0; i < 60; ++i) {
        const Poset p = suite::random_small_poset(rng, 7);
        // x < y is a cover iff nothing lies strictly between
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y) {
                bool between = false;
                for (int z = 0; z < p.size(); ++z) between = between || (p.lt(x, z) && p.lt(z, y));
                const bool cover = std::find(p.covers().begin(), p.covers().end(), std::make_pair(x, y)) != p.covers().end();
                EXPECT_EQ(cover, p.lt(x, y) && !between);
            }
        // rebuilding from the covers gives the same closure
        EXPECT_EQ(Poset::from_index_covers(p.labels(), p.covers()), p);
    }
}

TEST(Mobius, Examples) {
    const Poset d = example("ex3");
    const auto mu = mobius(d);
    EXPECT_EQ(mu[0][4], 2);
    EXPECT_EQ(mu[0][1], -1);
    EXPECT_EQ(mobius(chain(3))[0][2], 0);
    EXPECT_EQ(mobius(boolean(3))[0][7], -1);
}

TEST(Mobius, MatchesHallsTheoremAndRecursion) {
    std::mt19937 rng(31);
    for (int i = 0; i < 60; ++i) {
        const Poset p = suite::random_small_poset(rng, 7);
        const auto mu = mobius(p);
        for (int x = 0; x < p.size(); ++x)
            for (int y = 0; y < p.size(); ++y) {
                EXPECT_EQ(mu[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)], oracle::hall_mobius(p, x, y));
                if (p.lt(x, y)) {
                    std::int64_t s = 0;
                    for (int z = 0; z < p.size(); ++z)
                        if (p.leq(x, z) && p.leq(z, y)) s += mu[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
                    EXPECT_EQ(s, 0);
                }
            }
    }
}

TEST(Chains, Examples) {
    const Poset d = example("ex3");
    EXPECT_EQ(strict_chains(d, 1).size(), 5u);
    EXPECT_EQ(strict_chains(d, 3).size(), 3u);
    EXPECT_EQ(maximal_chains(d).size(), 3u);
    EXPECT_EQ(maximal_chains(boolean(3)).size(), 6u);
    EXPECT_EQ(euler_characteristic(d), BigInt(1));
    EXPECT_EQ(euler_characteristic(antichain(2)), BigInt(2));
    EXPECT_THROW(strict_chains(d, 0), PreconditionError);
}

TEST(Chains, CountsMatchEnumeration) {
    std::mt19937 rng(37);
    for (int i = 0; i < 60; ++i) {
        const Poset p = suite::random_small_poset(rng, 7);
        EXPECT_EQ(chain_counts(p), oracle::chain_counts(p));
    }
}

TEST(JofP, Examples) {
    const Poset j = j_of_p(example("ex5"));
    EXPECT_EQ(j.size(), 5);
    EXPECT_TRUE(is_graded(j));
    EXPECT_EQ(rank_profile(j), (std::vector<int>{1, 1, 2, 1}));
    EXPECT_EQ(rank_profile(j_of_p(antichain(3))), rank_profile(boolean(3)));
    EXPECT_EQ(j_of_p(antichain(3)).covers().size(), boolean(3).covers().size());
    EXPECT_EQ(j_of_p(chain(3)).size(), 4);
}

TEST(JofP, IsAGradedLatticeRankedBySize) {
    std::mt19937 rng(41);
    for (int i = 0; i < 30; ++i) {
        const Poset p = suite::random_small_poset(rng, 5);
        const Poset j = j_of_p(p);
        EXPECT_TRUE(is_lattice(j));
        const RankFunction rk = rank_function(j);
        EXPECT_EQ(rk(*j.top()), p.size());
        for (const auto& [a, b] : j.covers()) EXPECT_EQ(rk(b), rk(a) + 1);
    }
}

TEST(Predicates, Eulerian) {
    for (int n = 0; n <= 4; ++n) EXPECT_TRUE(is_eulerian(boolean(n)));
    EXPECT_FALSE(is_eulerian(example("ex3")));
    EXPECT_TRUE(is_eulerian(diamond(2)));
    EXPECT_THROW(is_eulerian(example("ex4")), PreconditionError);
}

TEST(CharacteristicPolynomial, Examples) {
    EXPECT_EQ(format_spaced(characteristic_polynomial(boolean(2)), "y"), "1 - 2y + y^2");
    EXPECT_EQ(format_spaced(characteristic_polynomial(example("ex3")), "y"), "2 - 3y + y^2");
    EXPECT_EQ(format_spaced(characteristic_polynomial(chain(2)), "y"), "-1 + y");
    // B_n gives (y - 1)^n
    EXPECT_EQ(format_spaced(characteristic_polynomial(boolean(3)), "y"), "-1 + 3y - 3y^2 + y^3");
}

TEST(Generators, Examples) {
    EXPECT_EQ(boolean(2).covers(), diamond(2).covers());
    EXPECT_EQ(rank_profile(boolean(2)), rank_profile(diamond(2)));
    EXPECT_EQ(rank_profile(boolean(3)), (std::vector<int>{1, 3, 3, 1}));
    EXPECT_THROW(example("ex9"), PreconditionError);
    EXPECT_EQ(example("ex1").size(), 1);
    EXPECT_EQ(example("ex2").covers(), chain(3).covers());
    EXPECT_EQ(maximal_chains(example("ex2")).size(), 1u);
    EXPECT_EQ(example("ex6").size(), 5);
}

TEST(Generators, Icosahedron) {
    const Poset ico = icosahedron_face_lattice();
    EXPECT_EQ(ico.size(), 64);
    EXPECT_EQ(rank_profile(ico), (std::vector<int>{1, 12, 30, 20, 1}));
    EXPECT_EQ(12 - 30 + 20, 2);
    EXPECT_TRUE(is_eulerian(ico));
    // every vertex lies on five triangles
    std::vector<int> deg(12, 0);
    for (const auto& t : icosahedron_triangles())
        for (int v : t) ++deg[static_cast<std::size_t>(v)];
    for (int d : deg) EXPECT_EQ(d, 5);
}

TEST(Generators, Associahedron) {
    EXPECT_EQ(polygon_diagonals(6).size(), 9u);
    const auto diss = noncrossing_dissections(6);
    std::vector<int> by_size(4, 0);
    for (auto s : diss) ++by_size[static_cast<std::size_t>(__builtin_popcount(s))];
    EXPECT_EQ(by_size, (std::vector<int>{1, 9, 21, 14}));
    const Poset a = associahedron3_face_lattice();
    EXPECT_EQ(a.size(), 46);
    EXPECT_EQ(rank_profile(a), (std::vector<int>{1, 14, 21, 9, 1}));
    EXPECT_TRUE(is_eulerian(a));
}

TEST(Generators, WeakOrderS3) {
    const Poset w = weak_order_s3();
    EXPECT_EQ(rank_profile(w), (std::vector<int>{1, 2, 2, 1}));
    EXPECT_EQ(maximal_chains(w).size(), 2u);
}
