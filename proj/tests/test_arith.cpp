#include <gtest/gtest.h>

#include <random>

#include "oracles/number_theory.hpp"
#include "quartic/arith.hpp"

using namespace quartic;

TEST(IsPrime, SmallCases) {
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(43993));  // 29 * 37 * 41
    EXPECT_FALSE(is_prime(87999));
    EXPECT_TRUE(is_prime(1399));
    EXPECT_TRUE(is_prime(2));
    EXPECT_FALSE(is_prime(0));
    EXPECT_FALSE(is_prime(std::int64_t{-7}));
}

TEST(IsPrime, AgreesWithTrialDivisionUpToMillion) {
    for (std::uint64_t n = 0; n <= 1'000'000; ++n) {
        ASSERT_EQ(is_prime(n), oracle::is_prime_trial(n)) << n;
    }
}

TEST(IsPrime, LargeSixtyFourBitValues) {
    EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ULL}));  // largest 64-bit prime
    EXPECT_FALSE(is_prime(std::uint64_t{3215031751ULL}));          // strong pseudoprime to 2,3,5,7
    EXPECT_FALSE(is_prime(std::uint64_t{3825123056546413051ULL}));  // strong pseudoprime to bases up to 23
    EXPECT_TRUE(is_prime(BigInt("1000000007")));
}

TEST(IsPrime, RejectsInputsBeyondSixtyFourBits) {
    EXPECT_THROW(is_prime(BigInt("340282366920938463463374607431768211507")), std::invalid_argument);
}

TEST(PrimesInRange, MatchesIsPrime) {
    const auto ps = primes_in_range(29, 100);
    const std::vector<std::int64_t> want{29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    EXPECT_EQ(ps, want);
    EXPECT_TRUE(primes_in_range(10, 5).empty());
}

TEST(Jacobi, Examples) {
    EXPECT_EQ(jacobi(1, 13), 1);
    EXPECT_EQ(jacobi(37, 13), -1);
    EXPECT_EQ(jacobi(29, 23), 1);
    EXPECT_EQ(jacobi(0, 1), 1);
    EXPECT_EQ(jacobi(26, 13), 0);
    EXPECT_EQ(jacobi(-1, 13), 1);
    EXPECT_EQ(jacobi(-1, 7), -1);
    EXPECT_EQ(jacobi(BigInt("123456789012345678901234567890"), 43993),
              jacobi(static_cast<std::int64_t>(mod_u64(BigInt("123456789012345678901234567890"), 43993)), 43993));
}

TEST(Jacobi, RejectsEvenOrNonPositiveModulus) {
    EXPECT_THROW(jacobi(3, 8), std::invalid_argument);
    EXPECT_THROW(jacobi(3, 0), std::invalid_argument);
    EXPECT_THROW(jacobi(3, -5), std::invalid_argument);
}

TEST(Jacobi, Multiplicative) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> an(-1'000'000, 1'000'000), nn(0, 499'999);
    for (int i = 0; i < 20000; ++i) {
        const std::int64_t a = an(rng), b = an(rng), n = 2 * nn(rng) + 1;
        ASSERT_EQ(jacobi(a * b, n), jacobi(a, n) * jacobi(b, n)) << a << " " << b << " " << n;
    }
}

TEST(Jacobi, EulerCriterionForPrimes) {
    std::mt19937_64 rng(23);
    const auto primes = primes_in_range(3, 100'000);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<std::int64_t> an(-10'000'000, 10'000'000);
    for (int i = 0; i < 2000; ++i) {
        const std::int64_t p = primes[pick(rng)], a = an(rng);
        ASSERT_EQ(jacobi(a, p), oracle::legendre_euler(a, static_cast<std::uint64_t>(p))) << a << " " << p;
    }
}

TEST(Jacobi, AgreesWithFactoredLegendreProduct) {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<std::int64_t> an(-100'000, 100'000), nn(0, 49'999);
    for (int i = 0; i < 3000; ++i) {
        const std::int64_t a = an(rng), n = 2 * nn(rng) + 1;
        ASSERT_EQ(jacobi(a, n), oracle::jacobi_by_factoring(a, static_cast<std::uint64_t>(n))) << a << " " << n;
    }
}

TEST(QuarticCharacter, Examples) {
    EXPECT_EQ(quartic_character(1, 41), QuarticCharValue::PlusOne);
    EXPECT_EQ(quartic_character(5, 41), QuarticCharValue::MinusOne);
    EXPECT_EQ(quartic_character(3, 41), QuarticCharValue::Imaginary);
    EXPECT_STREQ(to_string(QuarticCharValue::Imaginary), "i");
}

TEST(QuarticCharacter, RejectsBadModulus) {
    EXPECT_THROW(quartic_character(2, 43), std::invalid_argument);  // 43 = 3 mod 4
    EXPECT_THROW(quartic_character(82, 41), std::invalid_argument);
    EXPECT_THROW(quartic_character(2, 45), std::invalid_argument);
}

TEST(QuarticCharacter, CollapsesToJacobiSymbol) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::int64_t> pn(-1'000'000, 1'000'000);
    for (std::int64_t k : primes_in_range(5, 10'000)) {
        if (k % 4 != 1) continue;
        for (int i = 0; i < 20; ++i) {
            std::int64_t p = pn(rng);
            if (p % k == 0) ++p;
            const auto v = quartic_character(p, k);
            const int j = jacobi(p, k);
            ASSERT_EQ(v != QuarticCharValue::Imaginary, j == 1) << p << " " << k;
            const auto raw = oracle::quartic_power(p, static_cast<std::uint64_t>(k));
            if (v == QuarticCharValue::PlusOne) {
                ASSERT_EQ(raw, 1U);
            } else if (v == QuarticCharValue::MinusOne) {
                ASSERT_EQ(raw, static_cast<std::uint64_t>(k - 1));
            } else {
                ASSERT_NE(raw, 1U);
                ASSERT_NE(raw, static_cast<std::uint64_t>(k - 1));
            }
        }
    }
}

TEST(PerfectSquare, Examples) {
    EXPECT_EQ(is_perfect_square(std::int64_t{0}), 0);
    EXPECT_EQ(is_perfect_square(std::int64_t{25}), 5);
    EXPECT_FALSE(is_perfect_square(std::int64_t{6068}));
    EXPECT_FALSE(is_perfect_square(std::int64_t{-4}));
    EXPECT_EQ(*is_perfect_square(BigInt("1000000000000000000000000000000000000")),
              BigInt("1000000000000000000"));
}

TEST(PerfectSquare, AgreesWithIntegerRoot) {
    for (std::int64_t n = 0; n < 200'000; ++n) {
        const std::int64_t r = isqrt(n);
        ASSERT_TRUE(r * r <= n && (r + 1) * (r + 1) > n) << n;
        ASSERT_EQ(is_perfect_square(n).has_value(), r * r == n) << n;
    }
}

TEST(RationalSqrt, Cases) {
    EXPECT_EQ(*rational_sqrt(Rational(9, 4)), Rational(3, 2));
    EXPECT_FALSE(rational_sqrt(Rational(2, 9)));
    EXPECT_FALSE(rational_sqrt(Rational(-1, 4)));
}

TEST(Squarefree, Cases) {
    EXPECT_TRUE(is_squarefree(1517));
    EXPECT_FALSE(is_squarefree(18));
    EXPECT_FALSE(is_squarefree(0));
    EXPECT_EQ(odd_prime_divisors(2 * 9 * 5 * 29), (std::vector<std::int64_t>{3, 5, 29}));
}

TEST(ModArithmetic, HandlesNegativeAndWideValues) {
    EXPECT_EQ(mod_u64(std::int64_t{-1}, 13), 12U);
    EXPECT_EQ(mod_u64(BigInt(-27), 13), 12U);
    EXPECT_EQ(mul_mod(~0ULL, ~0ULL, 1'000'000'007ULL), (~0ULL % 1'000'000'007ULL) * (~0ULL % 1'000'000'007ULL) % 1'000'000'007ULL);
    EXPECT_EQ(pow_mod(5, 10, 41), 40U);
}
