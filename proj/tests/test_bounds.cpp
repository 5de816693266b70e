#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include <xintersect/bounds.hpp>

using namespace xintersect;

TEST_CASE("product bounds")
{
    CHECK(theorem1_bound(SizeVector({3, 4})) == 16);
    CHECK(theorem1_bound(SizeVector({2, 2, 2})) == 16);
    CHECK(theorem1_bound(SizeVector({7})) == 1);
    CHECK(theorem1_bound(SizeVector({2, 3})) == 9);
    CHECK(theorem1_bound(SizeVector({4, 5})) == 25);

    CHECK(trivial_product(SizeVector({4, 4, 4}), 2) == 16);
    CHECK(trivial_product(SizeVector({3, 3, 3, 3, 3}), 4) == 9);
    CHECK(trivial_product(SizeVector({3, 5, 2}), 3) == 1);
    CHECK(trivial_product(SizeVector({5, 3, 2}), 1) == 225);
    CHECK(trivial_product(SizeVector({5, 3, 2}), 0) == 900);
}

TEST_CASE("fixing-optimality condition")
{
    auto c = lemma2_applies(SizeVector({5, 5, 5}), 1);
    CHECK(c.holds);
    CHECK_FALSE(c.with_equality);
    CHECK(*c.lhs == Rational(3, 5));

    c = lemma2_applies(SizeVector({3, 3, 3}), 1);
    CHECK(c.holds);
    CHECK(c.with_equality);

    c = lemma2_applies(SizeVector({3, 3, 3}), 2);
    CHECK_FALSE(c.holds);
    CHECK(c.reason == Lemma2Reason::InequalityFails);
    CHECK(*c.lhs == Rational(4, 3));

    CHECK(lemma2_applies(SizeVector({3, 3}), 2).reason == Lemma2Reason::RNotBelowN);
    CHECK(lemma2_applies(SizeVector({2, 5, 5}), 1).reason == Lemma2Reason::MinBelowThree);
    // Ascending order is used regardless of input order.
    CHECK(*lemma2_applies(SizeVector({7, 3, 4}), 1).lhs == Rational(2, 4) + Rational(1, 3));
}

TEST_CASE("entropy size bound")
{
    CHECK(theorem5_bound(SizeVector({3, 4}), {}) == 12);
    CHECK(std::abs(theorem5_bound(SizeVector({3, 3, 3}), {0, 1, 2}).convert_to<double>() - 13.5) < 1e-12);
    const Real b = theorem5_bound(SizeVector({3, 3, 3, 3, 3}), {0, 1, 2, 3, 4});
    CHECK(std::abs(b.convert_to<double>() - 243.0 / std::pow(2.0, 5.0 / 3.0)) < 1e-9);
    CHECK(b > 11);
    CHECK(theorem5_bound(SizeVector({2, 2, 2}), {0, 1, 2}) == 8);
    CHECK_THROWS_AS(theorem5_bound(SizeVector({2, 2}), {2}), InputError);
}

TEST_CASE("product filter on relevant sets")
{
    auto f = theorem6_filter(SizeVector({3, 3, 3}), 1, {0, 1, 2});
    CHECK(f.admissible);
    CHECK(f.exact);
    CHECK(f.lhs == 3);
    CHECK(std::abs(f.rhs.convert_to<double>() - 2.0) < 1e-12);
    CHECK(f.large_coords == 3);
    CHECK(f.count_ok);

    f = theorem6_filter(SizeVector(std::vector<std::uint32_t>(7, 3)), 1, {0, 1, 2, 3, 4, 5, 6});
    CHECK_FALSE(f.admissible);
    CHECK(std::abs(f.rhs.convert_to<double>() - std::pow(2.0, 7.0 / 3.0)) < 1e-9);
    CHECK_FALSE(f.count_ok);

    f = theorem6_filter(SizeVector({2, 2, 2, 2}), 1, {0, 1, 2, 3});
    CHECK(f.admissible);
    CHECK(f.rhs == 1);
    CHECK(f.large_coords == 0);

    // Exact and floating comparisons agree where both are available.
    for (std::uint32_t q = 3; q <= 9; ++q) {
        for (std::size_t t = 1; t <= 6; ++t) {
            const SizeVector p(std::vector<std::uint32_t>(t, q));
            CoordList all(t);
            for (Coord i = 0; i < t; ++i) all[i] = i;
            const auto check = theorem6_filter(p, 1, all);
            CHECK(check.exact);
            CHECK(check.admissible == (Real(q) >= check.rhs));
        }
    }
}

TEST_CASE("regimes")
{
    auto b = theorem7_classify(SizeVector({4, 4, 4}), 2);
    CHECK(b.regime == Regime::P1GtRPlus1);
    CHECK(*b.predicted_product == 16);

    b = theorem7_classify(SizeVector(std::vector<std::uint32_t>(7, 6)), 5);
    CHECK(b.regime == Regime::P1EqRPlus1Gt4);
    CHECK(to_string(b.regime) == "P1_EQ_R_PLUS_1_GT_4");

    const auto nb = n_bound(5, 4);
    REQUIRE(nb);
    const double expected = 4 * std::log(5.0) / (0.6 * std::log(4.0));
    CHECK(std::abs(nb->convert_to<double>() - expected) < 1e-12);
    CHECK(std::abs(nb->convert_to<double>() - 7.74) < 0.005);
    CHECK(*nb < 8);
    CHECK_FALSE(n_bound(2, 1));

    // p1 = r + 1 = 3 or 4 is left open.
    CHECK(theorem7_classify(SizeVector({3, 3, 3, 3}), 2).regime == Regime::Unclassified);
    CHECK(theorem7_classify(SizeVector({4, 4, 4, 4, 4}), 3).regime == Regime::Unclassified);
    CHECK(theorem7_classify(SizeVector({3, 3, 3, 3, 3}), 4).regime == Regime::Unclassified);
    CHECK(theorem7_classify(SizeVector({2, 2, 2}), 2).regime == Regime::Unclassified);

    b = theorem7_classify(SizeVector({5, 3, 4}), 1);
    CHECK(b.permutation == CoordList{1, 2, 0});
    CHECK(b.theorem1 == Rational(3600, 9));
}
