#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace homring;

namespace {

QProfile ones(std::initializer_list<std::uint64_t> qs) {
    std::vector<QProfile::Entry> e;
    for (auto q : qs) e.push_back({q, 1});
    return QProfile(e);
}

MultiIndex mi(std::initializer_list<unsigned> v) { return MultiIndex(std::vector<unsigned>(v)); }

}  // namespace

TEST(QProfile, ParsingAndCanonicalOrder) {
    const auto p = QProfile::parse("(5,1);(3,2)");
    ASSERT_EQ(p.size(), 2u);
    EXPECT_EQ(p[0].q, 3u);
    EXPECT_EQ(p[0].n, 2u);
    EXPECT_EQ(p.to_string(), "(3,2);(5,1)");
    EXPECT_EQ(p.socle_order(), BigInt(45));
    EXPECT_THROW(QProfile::parse("(6,1)"), DomainError);
    EXPECT_THROW(QProfile::parse("(3,0)"), DomainError);
    EXPECT_THROW(QProfile::parse("(3,1);(3,2)"), DomainError);
    EXPECT_THROW(QProfile::parse("(3;1)"), ParseError);
    EXPECT_THROW(QProfile::parse("3,1"), ParseError);
}

TEST(QProfile, OfInteger) {
    EXPECT_EQ(QProfile::of_integer(546), ones({2, 3, 7, 13}));
    EXPECT_EQ(QProfile::of_integer(8), ones({2}));
    EXPECT_EQ(QProfile::of_integer(12), ones({2, 3}));
}

TEST(Separating, ReferenceVerdicts) {
    const auto a = is_separating(ones({2, 3, 7, 13}));
    EXPECT_FALSE(a.separating);
    ASSERT_TRUE(a.witness);
    EXPECT_EQ(unit_product(ones({2, 3, 7, 13}), a.witness->first),
              unit_product(ones({2, 3, 7, 13}), a.witness->second));

    EXPECT_TRUE(is_separating(ones({3, 7, 13})).separating);
    EXPECT_TRUE(is_separating(QProfile::parse("(3,2);(5,1)")).separating);

    const auto c = is_separating(QProfile::parse("(2,1);(3,2);(5,1)"));
    EXPECT_FALSE(c.separating);
    EXPECT_FALSE(is_separating(QProfile::parse("(3,4);(5,2)")).separating);
}

TEST(Separating, WitnessIsLexicographicallyFirst) {
    const auto profile = ones({2, 3, 7, 13});
    const auto r = is_separating(profile);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->first, mi({0, 0, 0, 1}));
    EXPECT_EQ(r.witness->second, mi({1, 1, 1, 0}));
    // the brute-force list contains both coincidences 1*2*6 = 12 and 2*6 = 1*12
    const auto all = separating_violations(profile);
    const auto has = [&](MultiIndex x, MultiIndex y) {
        return std::find(all.begin(), all.end(), std::make_pair(x, y)) != all.end();
    };
    EXPECT_TRUE(has(mi({0, 0, 0, 1}), mi({1, 1, 1, 0})));
    EXPECT_TRUE(has(mi({0, 1, 1, 0}), mi({1, 0, 0, 1})));
    EXPECT_EQ(all.front(), *r.witness);
}

TEST(Separating, WitnessForSquaredUnitGroup) {
    const auto profile = QProfile::parse("(2,1);(3,2);(5,1)");
    const auto all = separating_violations(profile);
    // (3-1)^2 = (2-1)(5-1): m = (0,2,0) against l = (1,0,1)
    EXPECT_NE(std::find(all.begin(), all.end(), std::make_pair(mi({0, 2, 0}), mi({1, 0, 1}))), all.end());
}

TEST(Separating, Integers) {
    EXPECT_FALSE(is_separating_integer(546).separating);
    EXPECT_TRUE(is_separating_integer(6).separating);
    EXPECT_TRUE(is_separating_integer(8).separating);
}

TEST(Separating, TwoWithMultiplicityNeverSeparates) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        for (unsigned n = 1; n <= 3; ++n) {
            for (std::uint64_t q2 : {3u, 5u, 7u, 9u, 11u}) {
                if (q2 == q) continue;
                std::vector<QProfile::Entry> e{{2, n}, {q2, 1}};
                if (q != 2 && q != q2) e.push_back({q, 1});
                const QProfile p(e);
                if (is_separating(p).separating) {
                    EXPECT_EQ(n, 1u) << p.to_string();
                }
            }
        }
    }
    EXPECT_FALSE(is_separating(QProfile::parse("(2,2)")).separating);
}

TEST(Separating, NonSeparatingSquareFreeIntegersHaveFourPrimes) {
    for (std::uint64_t n = 2; n <= 3000; ++n) {
        const auto f = factorize(n);
        if (is_separating_integer(n).separating) continue;
        EXPECT_GE(f.size(), 4u) << n;
    }
}

TEST(Separating, ScanMatchesPointwiseTest) {
    const auto found = scan_separating(300);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 2; n <= 300; ++n) {
        if (is_separating_integer(n).separating) expected.push_back(n);
    }
    EXPECT_EQ(found, expected);
    EXPECT_EQ(std::find(found.begin(), found.end(), 546u), found.end());
}

TEST(HomWeightOfIndex, Examples) {
    EXPECT_EQ(hom_weight_of_index(ones({2, 3}), mi({0, 0})), Rational(0));
    EXPECT_EQ(hom_weight_of_index(ones({2, 3}), mi({1, 1})), Rational(1, 2));
    EXPECT_EQ(hom_weight_of_index(ones({2, 3, 7, 13}), mi({0, 1, 1, 0})), Rational(11, 12));
    EXPECT_EQ(hom_weight_of_index(ones({2, 3}), MultiIndex::diamond()), Rational(1));
    EXPECT_THROW(hom_weight_of_index(ones({2, 3}), mi({2, 0})), DomainError);
}

TEST(HomWeightOfIndex, LocalValueIsQOverQMinusOne) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u}) {
        EXPECT_EQ(hom_weight_of_index(ones({q}), mi({1})), Rational(BigInt(q), BigInt(q - 1)));
    }
}

TEST(KrawtchoukClosed, FiveCases) {
    const auto z8 = QProfile::of_integer(8);
    const BigInt size(8);
    const auto d = MultiIndex::diamond();
    EXPECT_EQ(krawtchouk_closed(z8, d, d, size), BigInt(-2));
    EXPECT_EQ(krawtchouk_closed(z8, mi({0}), d, size), BigInt(6));
    EXPECT_EQ(krawtchouk_closed(z8, mi({1}), d, size), BigInt(0));
    EXPECT_EQ(krawtchouk_closed(z8, d, mi({1}), size), BigInt(1));
    EXPECT_EQ(krawtchouk_closed(z8, mi({1}), mi({1}), size), BigInt(-1));
    EXPECT_THROW(krawtchouk_closed(z8, d, d), DomainError);
    EXPECT_THROW(krawtchouk_closed(z8, mi({2}), mi({0}), size), DomainError);
}

TEST(KrawtchoukClosed, ClassicalPolynomials) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 9u}) {
        for (unsigned n = 1; n <= 6; ++n) {
            for (unsigned l = 0; l <= n; ++l) {
                EXPECT_EQ(krawtchouk_polynomial(0, n, q, l), BigInt(1));
                EXPECT_EQ(krawtchouk_polynomial(1, n, q, l), BigInt((std::int64_t(n) - l) * std::int64_t(q) - n));
                for (unsigned m = 0; m <= n; ++m) {
                    EXPECT_EQ(krawtchouk_polynomial(m, n, q, l), BigInt(oracle::krawtchouk(m, n, q, l)));
                }
            }
        }
    }
}

TEST(Classify, Examples) {
    const auto z8 = classify_integer(8);
    EXPECT_TRUE(z8.reflexive);
    EXPECT_FALSE(z8.self_dual);
    EXPECT_FALSE(z8.semisimple);
    const auto z546 = classify_integer(546);
    EXPECT_EQ(z546, (Classification{false, true, false, false}));
    EXPECT_TRUE(classify(QProfile::parse("(3,2)"), true).self_dual);
}

TEST(Classify, LengthTwoChainRingsAreSelfDual) {
    // P_hom on Z_{p^2} is 0 | soc \ 0 | units, which is also its dual
    for (std::uint64_t n : {4u, 9u, 25u, 49u}) EXPECT_TRUE(classify_integer(n).self_dual) << n;
    for (std::uint64_t n : {8u, 27u, 12u, 18u, 36u}) EXPECT_FALSE(classify_integer(n).self_dual) << n;
    EXPECT_FALSE(classify(*make_ring("Z9xF4")).self_dual);
}
