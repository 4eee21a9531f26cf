#include <gtest/gtest.h>

#include <sstream>

#include "oracles/k_squares.hpp"
#include "quartic/class_number.hpp"
#include "quartic/report.hpp"

using namespace quartic;

namespace {

const BiquadraticSpec kSpec{29, 37, 41};

KElement elem(std::array<long, 4> c, long den = 1) {
    return KElement(kSpec, {Rational(c[0], den), Rational(c[1], den), Rational(c[2], den), Rational(c[3], den)});
}

/// 16 * coords, for the exhaustive oracle.
oracle::KSquareQuery query(const KElement& d) {
    oracle::KSquareQuery q{d.spec().q, d.spec().k * d.spec().r, {}};
    for (int i = 0; i < 4; ++i) {
        const Rational v = d.coords()[static_cast<std::size_t>(i)] * 16;
        EXPECT_EQ(v.get_den(), 1);
        q.delta16[static_cast<std::size_t>(i)] = v.get_num().get_si();
    }
    return q;
}

}  // namespace

TEST(SubfieldData, Discriminants) {
    const auto d = subfield_data(kSpec);
    EXPECT_EQ(d[0].D, 29);
    EXPECT_EQ(d[1].D, 1517);
    EXPECT_EQ(d[2].D, 43993);
    const auto e = subfield_data(BiquadraticSpec{29, 37, 61});
    EXPECT_EQ(e[1].D, 2257);
    EXPECT_EQ(e[2].D, 65453);
    for (const auto& x : e) EXPECT_EQ(x.D % 4, 1);
}

TEST(KElement, Arithmetic) {
    const auto sq = elem({0, 1, 0, 0});
    EXPECT_EQ(sq * sq, elem({29, 0, 0, 0}));
    const auto sd = elem({0, 0, 1, 0});
    EXPECT_EQ(sq * sd, elem({0, 0, 0, 1}));
    EXPECT_EQ(elem({0, 0, 0, 1}) * elem({0, 0, 0, 1}), elem({29 * 1517, 0, 0, 0}));
    EXPECT_EQ(-sq + sq, elem({0, 0, 0, 0}));
    EXPECT_NEAR(sq.embed(1, 1), std::sqrt(29.0), 1e-12);
    EXPECT_NEAR(sq.embed(-1, 1), -std::sqrt(29.0), 1e-12);
}

TEST(IsSquareInK, Examples) {
    const auto one = is_square_in_K(elem({1, 0, 0, 0}));
    ASSERT_TRUE(one);
    EXPECT_EQ(*one * *one, elem({1, 0, 0, 0}));
    const auto rq = is_square_in_K(elem({29, 0, 0, 0}));
    ASSERT_TRUE(rq);
    EXPECT_EQ(*rq * *rq, elem({29, 0, 0, 0}));
    EXPECT_EQ(abs(rq->coords()[1]), 1);
    EXPECT_FALSE(is_square_in_K(elem({2, 0, 0, 0})));
    EXPECT_FALSE(is_square_in_K(elem({-1, 0, 0, 0})));
}

TEST(IsSquareInK, SquaresOfSmallElementsAreFound) {
    for (long a = -2; a <= 2; ++a) {
        for (long b = -2; b <= 2; ++b) {
            for (long c = -1; c <= 1; ++c) {
                for (long d = -1; d <= 1; ++d) {
                    const auto x = elem({a, b, c, d}, 2);
                    if (x.is_zero()) continue;
                    const auto sq = x * x;
                    const auto r = is_square_in_K(sq);
                    ASSERT_TRUE(r) << x.to_string();
                    ASSERT_EQ(*r * *r, sq);
                }
            }
        }
    }
}

TEST(IsSquareInK, AbsenceAgreesWithExhaustiveSearch) {
    // Small integral elements; the oracle box stays small for these.
    for (long a = -6; a <= 6; ++a) {
        for (long b = -1; b <= 1; ++b) {
            for (long c = -1; c <= 1; ++c) {
                const auto delta = elem({a, b, c, 0});
                if (delta.is_zero()) continue;
                const auto mine = is_square_in_K(delta);
                const auto theirs = oracle::k_square_root_search(query(delta));
                ASSERT_EQ(mine.has_value(), theirs.has_value()) << delta.to_string();
            }
        }
    }
    for (const auto& d : {elem({2, 0, 0, 0}), elem({3, 0, 0, 0}), elem({4, 0, 0, 0}), elem({1, 1, 0, 0}),
                          elem({15, 1, 0, 0}, 2), elem({29, 0, 0, 0}), elem({30, 2, 0, 0}, 1)}) {
        EXPECT_EQ(is_square_in_K(d).has_value(), oracle::k_square_root_search(query(d)).has_value())
            << d.to_string();
    }
}

TEST(UnitIndex, Invariants) {
    for (const auto& t : enumerate_grid(table1_ranges())) {
        const BiquadraticSpec s{t.q, t.k, t.x};
        const auto ui = unit_index(s);
        EXPECT_TRUE(ui.Q == 1 || ui.Q == 2 || ui.Q == 4 || ui.Q == 8);
        EXPECT_EQ(ui.Q, 1 << ui.rank);
        EXPECT_EQ(static_cast<int>(ui.square_set.size()) + 1, ui.Q);
        const auto data = subfield_data(s);
        EXPECT_EQ((ui.Q * data[0].h * data[1].h * data[2].h) % 4, 0);
        // re-verify every witnessed square exactly
        const auto eps = subfield_units(s, data);
        for (const auto& e : ui.square_set) {
            KElement prod = KElement::from_integer(s, e.sign);
            for (int i = 0; i < 3; ++i) {
                if (e.exponents[static_cast<std::size_t>(i)]) prod = prod * eps[static_cast<std::size_t>(i)];
            }
            const auto r = is_square_in_K(prod);
            ASSERT_TRUE(r);
            EXPECT_EQ(*r * *r, prod);
        }
    }
}

TEST(ClassNumberBiquadratic, Examples) {
    EXPECT_EQ(class_number_biquadratic({29, 37, 41}), 2);
    EXPECT_EQ(class_number_biquadratic({37, 41, 73}), 48);
    EXPECT_EQ(class_number_biquadratic({29, 73, 89}), 12);
    EXPECT_EQ(class_number_biquadratic({29, 37, 53}), 16);
}

TEST(Fixture, ParsesAndLooksUp) {
    std::istringstream in(
        "# comment\n"
        "family,q,k,b,h\n"
        "cyclic,17,41,4,2\n"
        "cyclic, 17, 89, 8, 26   # trailing comment\n"
        "\n"
        "cyclic,41,89,8,10\n");
    const auto fx = ClassNumberFixture::parse(in);
    EXPECT_EQ(fx.size(), 3U);
    EXPECT_EQ(class_number_cyclic(validate_cyclic(17, 41, 4), fx), 2);
    EXPECT_EQ(class_number_cyclic(validate_cyclic(17, 89, 8), fx), 26);
    EXPECT_EQ(class_number_cyclic(validate_cyclic(41, 89, 8), fx), 10);
    EXPECT_THROW(class_number_cyclic(validate_cyclic(17, 97, 4), fx), UnknownClassNumber);
}

TEST(Fixture, RejectsMalformedInput) {
    const auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return ClassNumberFixture::parse(in);
    };
    EXPECT_THROW(parse("cyclic,17,41,4\n"), std::invalid_argument);
    EXPECT_THROW(parse("biquadratic,29,37,41,2\n"), std::invalid_argument);
    EXPECT_THROW(parse("cyclic,17,41,4,x\n"), std::invalid_argument);
    EXPECT_THROW(parse("cyclic,17,41,4,0\n"), std::invalid_argument);
    EXPECT_THROW(parse("cyclic,17,41,4,2\ncyclic,17,41,4,6\n"), std::invalid_argument);
    EXPECT_NO_THROW(parse("cyclic,17,41,4,2\ncyclic,17,41,4,2\n"));
}

TEST(Fixture, ShippedFileCoversCyclicGrid) {
    const auto fx = ClassNumberFixture::load(QUARTIC_FIXTURE_PATH);
    for (const auto& t : enumerate_grid(table2_ranges())) {
        EXPECT_TRUE(fx.lookup(validate_cyclic(t.q, t.k, t.x))) << t.q << "," << t.k << "," << t.x;
    }
    EXPECT_THROW(ClassNumberFixture::load("/nonexistent/fixture.csv"), std::invalid_argument);
}
