#include <gtest/gtest.h>

#include <thread>

#include "oracles/pell.hpp"
#include "oracles/quadratic_forms.hpp"
#include "quartic/quadratic.hpp"

using namespace quartic;

TEST(FundamentalDiscriminant, Examples) {
    EXPECT_EQ(fundamental_discriminant(29), 29);
    EXPECT_EQ(fundamental_discriminant(1517), 1517);
    EXPECT_EQ(fundamental_discriminant(2), 8);
    EXPECT_EQ(fundamental_discriminant(3), 12);
    EXPECT_THROW(fundamental_discriminant(12), std::invalid_argument);
    EXPECT_THROW(fundamental_discriminant(1), std::invalid_argument);
}

TEST(FundamentalDiscriminant, Predicate) {
    for (std::int64_t D = 2; D < 3000; ++D) {
        ASSERT_EQ(is_fundamental_discriminant(D), oracle::is_fundamental(D)) << D;
    }
}

TEST(ClassNumber, Examples) {
    EXPECT_EQ(class_number(5).h, 1);
    EXPECT_EQ(class_number(229).h, 3);
    EXPECT_EQ(class_number(1517).h, 2);
    EXPECT_THROW(class_number(20), std::invalid_argument);
}

TEST(ClassNumber, ReducedFormsMatchIndependentEnumeration) {
    for (std::int64_t D : {5, 8, 12, 229, 1517, 4729}) {
        auto mine = reduced_forms(D);
        auto theirs = oracle::reduced_forms_by_b(D);
        std::vector<oracle::FormT> conv;
        for (const auto& f : mine) conv.emplace_back(f.a, f.b, f.c);
        std::sort(conv.begin(), conv.end());
        std::sort(theirs.begin(), theirs.end());
        EXPECT_EQ(conv, theirs) << D;
    }
}

TEST(ClassNumber, RhoAgreesWithBruteForceNeighbour) {
    for (std::int64_t D : {13, 40, 229, 1517, 9997}) {
        if (!is_fundamental_discriminant(D)) continue;
        for (const auto& f : reduced_forms(D)) {
            const Form g = rho(f, D);
            EXPECT_EQ(oracle::FormT(g.a, g.b, g.c), oracle::rho_search({f.a, f.b, f.c}, D)) << D;
        }
    }
}

TEST(ClassNumber, OrbitOracleBelowTwoThousand) {
    for (std::int64_t D = 5; D < 2000; ++D) {
        if (!oracle::is_fundamental(D)) continue;
        const auto got = class_number(D);
        const auto want = oracle::class_numbers_by_orbits(D);
        ASSERT_EQ(got.h, want.h) << D;
        ASSERT_EQ(got.h_narrow, want.h_narrow) << D;
    }
}

TEST(FundamentalUnit, Examples) {
    const auto u5 = fundamental_unit(5);
    EXPECT_EQ(u5.x, 1);
    EXPECT_EQ(u5.y, 1);
    EXPECT_EQ(u5.norm, -1);
    const auto u8 = fundamental_unit(8);  // 1 + sqrt 2
    EXPECT_EQ(u8.x, 2);
    EXPECT_EQ(u8.y, 1);
    EXPECT_EQ(u8.norm, -1);
    const auto u29 = fundamental_unit(29);
    EXPECT_EQ(u29.x, 5);
    EXPECT_EQ(u29.y, 1);
    EXPECT_EQ(u29.norm, -1);
}

TEST(FundamentalUnit, PellOracleBelowFiveHundred) {
    for (std::int64_t D = 5; D < 500; ++D) {
        if (!is_fundamental_discriminant(D)) continue;
        const auto u = fundamental_unit(D);
        const auto v = oracle::check_fundamental_unit(static_cast<long>(D), u.x, u.y, u.norm);
        ASSERT_TRUE(v.ok) << D << ": " << v.why;
    }
}

TEST(FundamentalUnit, OracleRejectsSquaredUnit) {
    const auto u = fundamental_unit(29);
    mpz_class X, Y;
    oracle::unit_power(u.x, u.y, 29, 2, X, Y);
    EXPECT_FALSE(oracle::check_fundamental_unit(29, X, Y, 1).ok);
    // Fundamental y beyond the direct window, so only the power certificate can reject the cube.
    const auto big = fundamental_unit(1621);
    ASSERT_GT(big.y, oracle::kPellDirect);
    oracle::unit_power(big.x, big.y, 1621, 3, X, Y);
    EXPECT_FALSE(oracle::check_fundamental_unit(1621, X, Y, big.norm).ok);
}

TEST(FundamentalUnit, LargeDiscriminantStaysExact) {
    const auto u = fundamental_unit(9949);
    EXPECT_EQ(u.norm, -1);
    EXPECT_EQ(u.x * u.x - 9949 * u.y * u.y, 4 * u.norm);
    EXPECT_EQ(u.x, BigInt("190037781417862791843945590566574739"));
    EXPECT_EQ(u.y, BigInt("1905242392545245797181244822046025"));
}

TEST(QuadraticFieldData, NarrowRuleAndCache) {
    for (std::int64_t D : {5, 12, 229, 1517, 43993}) {
        const auto d = quadratic_field_data(D);
        EXPECT_EQ(d.D, D);
        EXPECT_EQ(d.h_narrow, d.eps_norm == 1 ? 2 * d.h : d.h) << D;
        EXPECT_EQ(d.x * d.x - D * d.y * d.y, 4 * d.eps_norm);
    }
}

TEST(QuadraticFieldData, ConcurrentInsertionIsIdempotent) {
    std::vector<QuadraticFieldData> seen(8);
    std::vector<std::thread> ts;
    for (int i = 0; i < 8; ++i) {
        ts.emplace_back([i, &seen] { seen[static_cast<std::size_t>(i)] = quadratic_field_data(65453); });
    }
    for (auto& t : ts) t.join();
    for (const auto& s : seen) {
        EXPECT_EQ(s.x, seen[0].x);
        EXPECT_EQ(s.h, seen[0].h);
    }
}
