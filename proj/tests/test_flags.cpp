#include "support/oracles.hpp"
#include "support/shorthand.hpp"
#include "support/suite.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

using namespace qzeta;
using namespace sh;

namespace {

SeriesNumerator numer(std::vector<LaurentPolyZ> t, int d) { return SeriesNumerator{std::move(t), d}; }

bool has_negative_coefficient(const SeriesNumerator& n) {
    for (const auto& c : n.t_coefficients)
        if (!c.is_nonnegative()) return true;
    return false;
}

RLabelling diamond_labelling(const Poset& d, std::vector<int> lower, std::vector<int> upper) {
    RLabelling l;
    const int b = *d.bottom(), t = *d.top();
    int i = 0, j = 0;
    for (int x = 0; x < d.size(); ++x) {
        if (x == b || x == t) continue;
        l.labels[{b, x}] = lower[static_cast<std::size_t>(i++)];
        l.labels[{x, t}] = upper[static_cast<std::size_t>(j++)];
    }
    return l;
}

RLabelling less_than_on(RLabelling l, int max_label) {
    for (int a = 1; a <= max_label; ++a)
        for (int b = a + 1; b <= max_label; ++b) l.relation.insert({a, b});
    return l;
}

/// Cover S < S + {x} of J(P) labelled by the position of x in a linear extension of P.
/// Ideal ids follow j_of_p: sorted by size, then by bit mask.
RLabelling distributive_labelling(const Poset& p, const Poset& j) {
    const int n = p.size();
    std::vector<std::uint32_t> ideals;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool closed = true;
        for (int x = 0; x < n && closed; ++x)
            for (int y = 0; y < n && closed; ++y)
                if ((s >> x & 1u) && p.lt(y, x) && !(s >> y & 1u)) closed = false;
        if (closed) ideals.push_back(s);
    }
    std::sort(ideals.begin(), ideals.end(), [](std::uint32_t a, std::uint32_t b) {
        const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto below = [&](int x) {
        int c = 0;
        for (int y = 0; y < n; ++y) c += p.lt(y, x);
        return c;
    };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return below(a) < below(b); });
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i + 1;
    RLabelling l;
    for (const auto& [a, b] : j.covers()) {
        const std::uint32_t added = ideals[static_cast<std::size_t>(b)] & ~ideals[static_cast<std::size_t>(a)];
        l.labels[{a, b}] = position[static_cast<std::size_t>(__builtin_ctz(added))];
    }
    return less_than_on(std::move(l), n);
}

} // namespace

// ---------------------------------------------------------------------------
// flag vectors

TEST(FlagVectors, Examples) {
    const auto d = flag_vectors(example("ex3"));
    EXPECT_EQ(d.H, 2);
    EXPECT_EQ(d.a(0), BigInt(1));
    EXPECT_EQ(d.a(rank_set_of({1})), BigInt(3));
    EXPECT_EQ(d.b(0), BigInt(1));
    EXPECT_EQ(d.b(rank_set_of({1})), BigInt(2));

    const auto c = flag_vectors(chain(5));
    for (RankSet s : rank_subsets(c.H)) EXPECT_EQ(c.b(s), BigInt(s == 0 ? 1 : 0)) << rank_set_key(s);

    const auto b3 = flag_vectors(boolean(3));
    EXPECT_EQ(b3.a(rank_set_of({1, 2})), BigInt(6));
    EXPECT_EQ(b3.b(rank_set_of({1, 2})), BigInt(1));
    EXPECT_EQ(b3.b(rank_set_of({1})), BigInt(2));
    EXPECT_EQ(rank_set_key(rank_set_of({3, 1})), "1,3");
    EXPECT_THROW(flag_vectors(example("ex5")), PreconditionError);
}

TEST(FlagVectors, MatchChainEnumerationAndInvert) {
    for (const auto& n : suite::bounded_graded_suite(21, 40)) {
        const auto f = flag_vectors(n.poset);
        EXPECT_EQ(f.alpha, oracle::flag_alpha(n.poset)) << n.name;
        EXPECT_EQ(f.a(0), BigInt(1));
        for (RankSet s : rank_subsets(f.H)) {
            BigInt sum = 0;
            for (RankSet t : rank_subsets(f.H))
                if ((t & ~s) == 0) sum += f.b(t);
            EXPECT_EQ(sum, f.a(s)) << n.name << " " << rank_set_key(s);
        }
    }
}

// ---------------------------------------------------------------------------
// HH numerators

TEST(HH, Examples) {
    const Poset d = example("ex3");
    EXPECT_EQ(hh_numerator(d, rank_function(d)), numer({LaurentPolyZ(1), lz({{1, 2}})}, 2));
    EXPECT_EQ(hh_numerator(chain(3), rank_function(chain(3))), numer({LaurentPolyZ(1)}, 2));
    EXPECT_EQ(hh_numerator(example("ex1"), HeightFunction{{0}}), numer({LaurentPolyZ(1)}, 0));
}

TEST(HH, ExampleSixBothIndexings) {
    const Poset p = example("ex6");
    const RankFunction rk = rank_function(p);
    // sum_{n>=0} Z([n+1]_q) t^n: constant term Z(1) = 1
    EXPECT_EQ(hh_numerator(p, rk), numer({LaurentPolyZ(1), lz({{1, 1}, {2, 1}}), lz({{3, -1}})}, 2));
    // the printed form: numerator of sum_{n>=0} Z([n]_q) t^n
    const auto printed = hh_numerator_shifted(p, rk);
    EXPECT_EQ(printed, numer({LaurentPolyZ(-1), lz({{0, 2}, {1, 1}, {2, 1}}), lz({{3, -1}})}, 2));
    EXPECT_TRUE(has_negative_coefficient(hh_numerator(p, rk)));
    EXPECT_TRUE(has_negative_coefficient(printed));
}

TEST(HH, SmallCounterexamples) {
    const Poset v = example("ex5");
    const Poset e6 = example("ex6");
    // indexing from Z([0]_q): both carry a negative coefficient
    EXPECT_EQ(hh_numerator_shifted(v, rank_function(v)), numer({LaurentPolyZ(-1), lz({{0, 2}, {1, 1}})}, 1));
    EXPECT_TRUE(has_negative_coefficient(hh_numerator_shifted(v, rank_function(v))));
    EXPECT_TRUE(has_negative_coefficient(hh_numerator_shifted(e6, rank_function(e6))));
    // indexing from Z([1]_q): V becomes 1 + q t, ex6 stays negative
    EXPECT_EQ(hh_numerator(v, rank_function(v)), numer({LaurentPolyZ(1), lz({{1, 1}})}, 1));
    EXPECT_TRUE(has_negative_coefficient(hh_numerator(e6, rank_function(e6))));
}

TEST(HH, RoutesAgreeOnBoundedGradedSuite) {
    for (const auto& n : suite::bounded_graded_suite(22, 60)) {
        const RankFunction rk = rank_function(n.poset);
        const auto a = hh_numerator_from_series(n.poset, rk);
        EXPECT_EQ(a, hh_numerator_from_flags(flag_vectors(n.poset))) << n.name;
        EXPECT_LE(a.t_degree(), rk(*n.poset.top()));
    }
}

TEST(HH, SeriesExpansionReproducesValues) {
    for (const auto& hp : suite::heighted_suite(23, 30, 6)) {
        const auto n = hh_numerator(hp.poset, hp.height);
        const PolyX z = qzeta_poly(hp.poset, hp.height).poly;
        EXPECT_EQ(numerator_to_polynomial(n), z.compose(PolyX::linear(c(1), q()))) << hp.name;
        EXPECT_LE(n.t_degree(), hp.height.max());
    }
}

TEST(HH, DistributiveLatticesArePositive) {
    std::mt19937 rng(24);
    for (int i = 0; i < 40; ++i) {
        const Poset p = suite::random_small_poset(rng, 5);
        const Poset j = j_of_p(p);
        const auto n = hh_numerator(j, rank_function(j));
        EXPECT_TRUE(n.is_nonnegative()) << i;
    }
}

// ---------------------------------------------------------------------------
// volumes

TEST(Volume, Examples) {
    const Poset d = example("ex3");
    EXPECT_EQ(qzeta_volume(d, rank_function(d)), lq({{0, 2}, {1, 1}}));
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(qzeta_volume(chain(n), rank_function(chain(n))), lq({{binom2(n - 1), 1}})) << n;
    for (int H = 0; H <= 4; ++H) {
        const RatFunc expect = pow((q() - c(1)) / q(), H) * qfactorial(H);
        EXPECT_EQ(RatFunc(qzeta_volume(example("ex1"), HeightFunction{{H}})), expect) << H;
    }
    EXPECT_THROW(qzeta_volume(antichain(0), HeightFunction{}), PreconditionError);
}

TEST(Volume, DualHHIdentityOnRandomPosets) {
    for (const auto& hp : suite::heighted_suite(31, 60, 7))
        EXPECT_EQ(qzeta_volume_raw(hp.poset, hp.height), volume_from_dual_hh(hp.poset, hp.height)) << hp.name;
}

TEST(Volume, CountsMaximalChainsAtQOne) {
    for (const auto& n : suite::bounded_graded_suite(32, 40)) {
        const auto v = qzeta_volume(n.poset, rank_function(n.poset));
        EXPECT_EQ(v.at_one(), BigRational(static_cast<long>(maximal_chains(n.poset).size()))) << n.name;
    }
}

TEST(Volume, QOrderVolume) {
    EXPECT_EQ(q_order_volume(chain(3)), lq({{6, 1}}));
    EXPECT_EQ(q_order_volume(antichain(2)), lq({{2, 1}, {3, 1}}));
    // at q = 1 the volume counts linear extensions
    EXPECT_EQ(q_order_volume(antichain(3)).at_one(), BigRational(6));
    EXPECT_EQ(q_order_volume(example("ex5")).at_one(), BigRational(2));
    for (const auto& n : {example("ex3"), boolean(2), chain(4)}) {
        const PolyX l = q_order_polynomial(n);
        EXPECT_EQ(RatFunc(q_order_volume(n)), l.leading() * qfactorial(n.size()));
    }
}

// ---------------------------------------------------------------------------
// R-labellings

TEST(RLabelling, BooleanAtomLabelling) {
    for (int n = 1; n <= 4; ++n) {
        const Poset b = boolean(n);
        const auto l = boolean_atom_labelling(b, n);
        const auto rep = r_labelling_check(b, l);
        EXPECT_TRUE(rep.valid) << rep.reason;
        for (int x = 0; x < b.size(); ++x)
            for (int y = 0; y < b.size(); ++y)
                if (b.lt(x, y)) EXPECT_EQ(oracle::increasing_chains(b, l, x, y), 1);
        EXPECT_TRUE(bjorner_stanley_check(b, l));
    }
}

TEST(RLabelling, WeakOrderOfS3HasNone) {
    const Poset w = weak_order_s3();
    const auto edges = w.covers();
    ASSERT_EQ(edges.size(), 6u);
    // every labelling by {1,2} and every relation on {1,2}
    for (unsigned lab = 0; lab < (1u << 6); ++lab)
        for (unsigned rel = 0; rel < 16u; ++rel) {
            RLabelling l;
            for (std::size_t e = 0; e < edges.size(); ++e) l.labels[edges[e]] = 1 + static_cast<int>(lab >> e & 1u);
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    if (rel >> (2 * a + b) & 1u) l.relation.insert({a + 1, b + 1});
            ASSERT_FALSE(r_labelling_check(w, l).valid) << lab << " " << rel;
        }
    // distinct labels with several relations
    for (int variant = 0; variant < 3; ++variant) {
        RLabelling l;
        for (std::size_t e = 0; e < edges.size(); ++e) l.labels[edges[e]] = static_cast<int>(e) + 1;
        for (int a = 1; a <= 6; ++a)
            for (int b = 1; b <= 6; ++b)
                if ((variant == 0 && a < b) || (variant == 1 && a > b) || variant == 2) l.relation.insert({a, b});
        EXPECT_FALSE(r_labelling_check(w, l).valid);
    }
}

TEST(RLabelling, ConstantChain) {
    const Poset c = chain(4);
    RLabelling l;
    for (const auto& e : c.covers()) l.labels[e] = 7;
    l.relation.insert({7, 7});
    const auto rep = r_labelling_check(c, l);
    ASSERT_TRUE(rep.valid);
    ASSERT_EQ(rep.descent_sets.size(), 1u);
    EXPECT_EQ(rep.descent_sets.begin()->second, RankSet(0));
    EXPECT_TRUE(bjorner_stanley_check(c, l));
}

TEST(RLabelling, Diamond) {
    const Poset d = example("ex3");
    // lower 1,2,3 with upper 1,1,1 under "<" has no increasing chain at all
    const auto flat = less_than_on(diamond_labelling(d, {1, 2, 3}, {1, 1, 1}), 3);
    EXPECT_FALSE(r_labelling_check(d, flat).valid);
    // upper 2,1,1 makes exactly the first chain increasing
    const auto l = less_than_on(diamond_labelling(d, {1, 2, 3}, {2, 1, 1}), 3);
    const auto rep = r_labelling_check(d, l);
    ASSERT_TRUE(rep.valid) << rep.reason;
    int descents = 0;
    for (const auto& [chain, s] : rep.descent_sets) descents += s == rank_set_of({1});
    EXPECT_EQ(descents, 2);
    EXPECT_TRUE(bjorner_stanley_check(d, l));
}

TEST(RLabelling, Rejections) {
    const Poset b = boolean(2);
    RLabelling partial = boolean_atom_labelling(b, 2);
    partial.labels.erase(partial.labels.begin());
    EXPECT_THROW(r_labelling_check(b, partial), PreconditionError);
    EXPECT_THROW(r_labelling_check(example("ex5"), RLabelling{}), PreconditionError);
}

TEST(RLabelling, DistributiveLatticesArePositive) {
    std::mt19937 rng(41);
    for (int i = 0; i < 25; ++i) {
        const Poset p = suite::random_small_poset(rng, 5);
        const Poset j = j_of_p(p);
        const auto l = distributive_labelling(p, j);
        const auto rep = r_labelling_check(j, l);
        ASSERT_TRUE(rep.valid) << rep.reason;
        EXPECT_TRUE(bjorner_stanley_check(j, l));
        EXPECT_TRUE(hh_numerator(j, rank_function(j)).is_nonnegative());
    }
}

TEST(RLabelling, LabelledSuiteMembersArePositive) {
    for (int n = 0; n <= 4; ++n) EXPECT_TRUE(hh_numerator(boolean(n), rank_function(boolean(n))).is_nonnegative());
    for (int n = 1; n <= 5; ++n) EXPECT_TRUE(hh_numerator(chain(n), rank_function(chain(n))).is_nonnegative());
    const Poset d = example("ex3");
    EXPECT_TRUE(hh_numerator(d, rank_function(d)).is_nonnegative());
}

// ---------------------------------------------------------------------------
// q = 0

TEST(QZero, Examples) {
    const RatPoly diamond_y(std::vector<BigRational>{1, -3, 2});
    EXPECT_EQ(q0_specialization_in_y(example("ex3")), diamond_y);
    EXPECT_EQ(reversed_characteristic_polynomial(example("ex3")), IntPoly(std::vector<BigInt>{1, -3, 2}));
    EXPECT_EQ(q0_specialization_in_y(chain(2)), RatPoly(std::vector<BigRational>{1, -1}));
    EXPECT_TRUE(q0_theorem_check(example("ex3")));
    EXPECT_TRUE(q0_theorem_check(chain(2)));
    EXPECT_TRUE(q0_theorem_check(boolean(3)));
    EXPECT_THROW(q0_theorem_check(example("ex5")), PreconditionError);
}

TEST(QZero, TheoremOnBoundedGradedSuite) {
    for (const auto& n : suite::bounded_graded_suite(51, 60)) {
        EXPECT_TRUE(q0_theorem_check(n.poset)) << n.name;
        // reversed characteristic polynomial against Hall's chain formula
        const auto rev = reversed_characteristic_polynomial(n.poset);
        const RankFunction rk = rank_function(n.poset);
        std::vector<BigInt> expect(static_cast<std::size_t>(rk(*n.poset.top())) + 1, BigInt(0));
        for (int x = 0; x < n.poset.size(); ++x) expect[static_cast<std::size_t>(rk(x))] += oracle::hall_mobius(n.poset, *n.poset.bottom(), x);
        EXPECT_EQ(rev, IntPoly(std::move(expect))) << n.name;
        EXPECT_EQ(characteristic_from_beta(flag_vectors(n.poset)), rev) << n.name;
    }
}

// ---------------------------------------------------------------------------
// Eulerian posets

TEST(Eulerian, ReciprocityOnBooleanLattices) {
    for (int n = 0; n <= 4; ++n) EXPECT_TRUE(eulerian_reciprocity_check(boolean(n))) << n;
    EXPECT_TRUE(eulerian_reciprocity_check(chain(2)));
    EXPECT_THROW(eulerian_reciprocity_check(example("ex3")), PreconditionError);
}

TEST(Eulerian, Icosahedron) {
    const Poset p = icosahedron_face_lattice();
    const RatFunc den = (q() * q() + c(1)) * (q() * q() + q() + c(1));
    auto qpoly = [](std::vector<long> c) {
        LaurentPolyZ l;
        for (std::size_t i = 0; i < c.size(); ++i) l += LaurentPolyZ::monomial(BigInt(c[i]), static_cast<int>(i));
        return rf(l);
    };
    const PolyX expect(std::vector<RatFunc>{c(0), c(-8) * qpoly({-1, 1}) / den, c(-24) * qpoly({1, -1, 1}) / den,
                                            c(-16) * qpoly({-1, 2, -2, 1}) / den, qpoly({1, 17, -6, 17, 1}) / den});
    EXPECT_EQ(qzeta_poly(p, rank_function(p)).poly, expect);
    EXPECT_TRUE(eulerian_reciprocity_check(p));
}

TEST(Eulerian, Associahedron) {
    const Poset p = associahedron3_face_lattice();
    const RatFunc den = (q() * q() + c(1)) * (q() * q() + q() + c(1));
    auto qpoly = [](std::vector<long> c) {
        LaurentPolyZ l;
        for (std::size_t i = 0; i < c.size(); ++i) l += LaurentPolyZ::monomial(BigInt(c[i]), static_cast<int>(i));
        return rf(l);
    };
    const PolyX expect(std::vector<RatFunc>{c(0), c(5) * qpoly({-1, 1}) / den, c(-15) * q() / den,
                                            c(-5) * qpoly({-1, -1, 1, 1}) / den, qpoly({1, 6, 7, 6, 1}) / den});
    EXPECT_EQ(qzeta_poly(p, rank_function(p)).poly, expect);
    EXPECT_TRUE(eulerian_reciprocity_check(p));
}
