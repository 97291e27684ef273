#include "support/oracles.hpp"
#include "support/shorthand.hpp"
#include "support/suite.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qzeta;
using namespace sh;

namespace {

QMatrix random_incidence(std::mt19937& rng, const Poset& p) {
    std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2);
    QMatrix m(p.size());
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y)
            if (p.leq(x, y)) m.at(x, y) = lz({{expo(rng), coef(rng)}, {expo(rng), coef(rng)}});
    return m;
}

IntMatrix plain_product(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    IntMatrix out(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

QMatrix plain_product(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int k = 0; k < a.size(); ++k)
            for (int j = 0; j < a.size(); ++j) out.at(i, j) += a(i, k) * b(k, j);
    return out;
}

} // namespace

TEST(TwistedProduct, TwoChain) {
    const Poset c = chain(2);
    const RankFunction rk = rank_function(c);
    const QMatrix z = zeta_matrix(c);
    const QMatrix zz = twisted_product(c, z, z, rk);
    EXPECT_EQ(zz(0, 1), lz({{0, 1}, {1, 1}}));
    EXPECT_EQ(zz, twisted_power(c, rk, 2));
    EXPECT_EQ(twisted_product(c, z, twisted_unit(rk), rk), z);
    EXPECT_THROW(twisted_product(c, z, QMatrix(3), rk), PreconditionError);
}

TEST(TwistedProduct, AssociativeWithUnit) {
    std::mt19937 rng(61);
    for (const auto& hp : suite::heighted_suite(62, 25, 6)) {
        const QMatrix a = random_incidence(rng, hp.poset), b = random_incidence(rng, hp.poset), d = random_incidence(rng, hp.poset);
        const auto& h = hp.height;
        EXPECT_EQ(twisted_product(hp.poset, twisted_product(hp.poset, a, b, h), d, h),
                  twisted_product(hp.poset, a, twisted_product(hp.poset, b, d, h), h))
            << hp.name;
        const QMatrix u = twisted_unit(h);
        EXPECT_EQ(twisted_product(hp.poset, a, u, h), a);
        EXPECT_EQ(twisted_product(hp.poset, u, a, h), a);
        // A D_h B by hand
        EXPECT_EQ(twisted_product(hp.poset, a, b, h), plain_product(plain_product(a, diagonal_height(h)), b));
        // q = 1 is the ordinary product
        EXPECT_EQ(twisted_product(hp.poset, a, b, h).at_q1(), plain_product(a.at_q1(), b.at_q1()));
    }
}

TEST(TwistedPower, SmallExponents) {
    const Poset d = example("ex3");
    const RankFunction rk = rank_function(d);
    EXPECT_EQ(twisted_power(d, rk, 1), zeta_matrix(d));
    EXPECT_EQ(twisted_power(d, rk, 0), twisted_unit(rk));
    const QMatrix inv = twisted_power(d, rk, -1);
    EXPECT_EQ(twisted_product(d, inv, zeta_matrix(d), rk), twisted_unit(rk));
    EXPECT_EQ(twisted_product(d, zeta_matrix(d), inv, rk), twisted_unit(rk));
    EXPECT_EQ(corner_value(chain(2), rank_function(chain(2)), -1), lz({{-1, -1}}));
}

TEST(TwistedPower, InverseIsMobiusAtQOne) {
    for (const auto& hp : suite::heighted_suite(63, 30, 7)) {
        const QMatrix m = twisted_power(hp.poset, hp.height, -1);
        const IntMatrix mu = mobius(hp.poset);
        EXPECT_EQ(m.at_q1(), mu) << hp.name;
        // D_h M D_h is exactly the classical inverse of Z
        const QMatrix dh = diagonal_height(hp.height);
        const IntMatrix dmd = plain_product(plain_product(dh, m), dh).at_q1();
        const QMatrix exact = plain_product(plain_product(dh, m), dh);
        for (int x = 0; x < hp.poset.size(); ++x)
            for (int y = 0; y < hp.poset.size(); ++y) {
                EXPECT_EQ(exact(x, y), LaurentPolyZ(BigInt(mu[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])));
                EXPECT_EQ(mu[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)], oracle::hall_mobius(hp.poset, x, y));
            }
        EXPECT_EQ(dmd, mu);
    }
}

TEST(TwistedPower, PowersAddExponents) {
    const Poset d = example("ex3");
    const RankFunction rk = rank_function(d);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            EXPECT_EQ(twisted_product(d, twisted_power(d, rk, a), twisted_power(d, rk, b), rk), twisted_power(d, rk, a + b)) << a << "," << b;
    const auto range = twisted_power_range(d, rk, -2, 3);
    ASSERT_EQ(range.size(), 6u);
    for (int n = -2; n <= 3; ++n) EXPECT_EQ(range[static_cast<std::size_t>(n + 2)], twisted_power(d, rk, n));
}

TEST(CornerValue, Examples) {
    const Poset d = example("ex3");
    const RankFunction rk = rank_function(d);
    EXPECT_EQ(corner_value(d, rk, 2), lz({{0, 1}, {1, 3}, {2, 1}}));
    EXPECT_EQ(corner_value(d, rk, -1), lz({{-2, 2}}));
    EXPECT_THROW(corner_value(example("ex5"), rank_function(example("ex5")), 2), PreconditionError);
    for (const auto& n : suite::bounded_graded_suite(64, 10)) EXPECT_EQ(corner_value(n.poset, rank_function(n.poset), 1), LaurentPolyZ(1)) << n.name;
}

TEST(CornerValue, MatchesPolynomialForAllIntegers) {
    int checked = 0;
    for (const auto& hp : suite::heighted_suite(65, 80, 7)) {
        if (!is_bounded(hp.poset)) continue;
        ++checked;
        const PolyX z = qzeta_poly(hp.poset, hp.height).poly;
        const int H = hp.height.max();
        const auto mats = twisted_power_range(hp.poset, hp.height, -3, H + 3);
        for (int n = -3; n <= H + 3; ++n)
            EXPECT_EQ(rf(mats[static_cast<std::size_t>(n + 3)](*hp.poset.bottom(), *hp.poset.top())), polyx_eval(z, qint(n))) << hp.name << " n=" << n;
    }
    for (const auto& n : suite::bounded_graded_suite(66, 20)) {
        ++checked;
        const RankFunction rk = rank_function(n.poset);
        const PolyX z = qzeta_poly(n.poset, rk).poly;
        const int H = rk(*n.poset.top());
        for (int m = -3; m <= H + 3; ++m) EXPECT_EQ(rf(corner_value(n.poset, rk, m)), polyx_eval(z, qint(m))) << n.name << " n=" << m;
    }
    EXPECT_GT(checked, 20);
}

TEST(Annihilation, Examples) {
    const Poset c = chain(2);
    const auto rep = annihilation_report(c, rank_function(c), -2, 3);
    EXPECT_TRUE(rep.annihilated);
    ASSERT_TRUE(rep.witness.has_value());
    EXPECT_TRUE(annihilation_check(c, rank_function(c), -2, 3));
    EXPECT_TRUE(annihilation_check(example("ex1"), HeightFunction{{0}}, 0, 3));
    EXPECT_TRUE(annihilation_check(example("ex3"), rank_function(example("ex3")), -3, 3));
    EXPECT_THROW(annihilation_check(example("ex3"), rank_function(example("ex3")), 0, 2), PreconditionError);
}

TEST(Annihilation, RandomPosets) {
    for (const auto& hp : suite::heighted_suite(67, 25, 6)) {
        const int H = hp.height.max();
        EXPECT_TRUE(annihilation_check(hp.poset, hp.height, -2, H + 2)) << hp.name;
    }
}
