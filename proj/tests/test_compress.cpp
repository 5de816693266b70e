#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <xintersect/compress.hpp>

#include "oracles.hpp"

using namespace xintersect;

namespace {

Family random_family(const SizeVector& p, std::mt19937_64& rng, unsigned one_in)
{
    Family::Bits bits(domain_size_u64(p));
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = rng() % one_in == 0;
    return Family(p, std::move(bits));
}

/// Down-closure of a random collection of subsets.
SupportSystem random_system(std::size_t n, std::mt19937_64& rng)
{
    std::vector<CoordMask> sets;
    for (CoordMask s = 0; s < (CoordMask{1} << n); ++s) {
        if (rng() % 3 == 0) sets.push_back(s);
    }
    std::vector<CoordMask> closed;
    for (CoordMask t = 0; t < (CoordMask{1} << n); ++t) {
        for (auto s : sets) {
            if ((t & ~s) == 0) {
                closed.push_back(t);
                break;
            }
        }
    }
    return SupportSystem(n, closed);
}

CoordList mask_list(CoordMask mask)
{
    CoordList out;
    for (Coord i = 0; i < 32; ++i) {
        if (mask >> i & 1) out.push_back(i);
    }
    return out;
}

}  // namespace

TEST_CASE("supports of points")
{
    CHECK(support_vector(Point{1, 1, 1}) == 0);
    CHECK(support_vector(Point{1, 3, 1}) == 0b010);
    CHECK(support_vector(Point{2, 2}) == 0b11);
}

TEST_CASE("support systems and monotone families")
{
    const SizeVector p({3, 3});
    CHECK_FALSE(is_monotone(Family::from_points(p, {Point{2, 1}})));
    CHECK(is_monotone(Family::full(p)));
    CHECK(support_system(Family::full(p)) == SupportSystem(2, {0, 1, 2, 3}));

    const SizeVector p5({3, 3, 3, 3, 3});
    const SupportSystem ball = SupportSystem::ball(5, 0b11111, 1);
    CHECK(ball.sets().size() == 6);
    CHECK(size_from_support(p5, ball) == 11);
    CHECK(support_system(family_from_support(p5, ball)) == ball);
    CHECK(is_monotone(family_from_support(p5, ball)));

    CHECK(family_from_support(p, SupportSystem(2, {0})).members() == std::vector<Point>{Point{1, 1}});
    const SizeVector p23({2, 3});
    const SupportSystem s(2, {0, 1, 2});
    CHECK(size_from_support(p23, s) == 4);
    CHECK(family_from_support(p23, s).size() == 4);

    CHECK_THROWS_AS(family_from_support(p, SupportSystem(2, {1})), InputError);
    CHECK_THROWS_AS(SupportSystem(2, {4}), InputError);
    CHECK_THROWS_AS(SupportSystem(31, {}), InputError);
}

TEST_CASE("support level matches point level on monotone pairs")
{
    std::mt19937_64 rng(3);
    for (const oracle::Vec& raw : {oracle::Vec{2, 2, 2}, oracle::Vec{3, 2, 3}, oracle::Vec{3, 3, 3, 2}, oracle::Vec{2, 2, 2, 2}}) {
        const SizeVector p(raw);
        const std::size_t n = raw.size();
        for (int trial = 0; trial < 60; ++trial) {
            const SupportSystem sa = random_system(n, rng);
            const SupportSystem sb = random_system(n, rng);
            const Family a = family_from_support(p, sa);
            const Family b = family_from_support(p, sb);
            CHECK(BigInt(a.size()) == size_from_support(p, sa));
            for (int r = 0; r <= static_cast<int>(n); ++r) {
                bool brute = true;
                for (const auto& x : a.members()) {
                    for (const auto& y : b.members()) brute = brute && oracle::agree(x.values(), y.values()) >= r;
                }
                CHECK(supports_cross_intersect(sa, sb, r) == brute);
                CHECK(family_from_support(p, support_dual(sa, r)) == dual(a, r));
            }
            CHECK(mask_list(support_relevant_coordinates(sa)) == relevant_coordinates(a));
        }
    }
}

TEST_CASE("ball shapes are recognised")
{
    auto shape = support_ball_shape(SupportSystem::ball(4, 0b1011, 1));
    REQUIRE(shape);
    CHECK(shape->coords == 0b1011);
    CHECK(shape->radius == 1);
    CHECK(support_ball_shape(SupportSystem(2, {0, 1, 2})).has_value());
    CHECK_FALSE(support_ball_shape(SupportSystem(3, {0, 1, 2, 3, 4})).has_value());
    CHECK_FALSE(support_ball_shape(SupportSystem(3, {})).has_value());
}

TEST_CASE("shift")
{
    const SizeVector sq({2, 2});
    CHECK(shift(Family::from_points(sq, {Point{2, 1}, Point{1, 2}}), 0, 2) ==
          Family::from_points(sq, {Point{1, 1}, Point{1, 2}}));

    const SizeVector p({3, 3, 2});
    const Family mono = family_from_support(p, SupportSystem::ball(3, 0b111, 1));
    for (Coord i = 0; i < 3; ++i) {
        for (std::uint32_t j = 2; j <= p[i]; ++j) CHECK(shift(mono, i, j) == mono);
    }
    CHECK_THROWS_AS(shift(mono, 0, 1), InputError);
    CHECK_THROWS_AS(shift(mono, 2, 3), InputError);
    CHECK_THROWS_AS(shift(mono, 3, 2), InputError);
}

TEST_CASE("shift keeps sizes and cross-intersection")
{
    std::mt19937_64 rng(5);
    const SizeVector p({3, 2, 4});
    for (int trial = 0; trial < 200; ++trial) {
        const Family a = random_family(p, rng, 3);
        const int r = static_cast<int>(rng() % 3);
        Family::Bits bits = dual(a, r).bits();
        for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = bits[i] && rng() % 2;
        const Family b(p, bits);
        const Coord i = rng() % 3;
        const std::uint32_t j = 2 + static_cast<std::uint32_t>(rng() % (p[i] - 1));
        const Family sa = shift(a, i, j);
        const Family sb = shift(b, i, j);
        CHECK(sa.size() == a.size());
        CHECK(are_r_cross_intersecting(sa, sb, r));
        CHECK(potential(sa) <= potential(a));
    }
}

TEST_CASE("compression reaches a monotone pair")
{
    const SizeVector p({3, 3});
    auto fix = [&](std::uint32_t v) { return Family::from_predicate(p, [=](const Point& x) { return x[0] == v; }); };
    auto c = compress_pair(fix(2), fix(2), 1);
    CHECK(c.a == fix(1));
    CHECK(c.b == fix(1));
    CHECK(c.monotone);

    const Family mono = family_from_support(p, SupportSystem(2, {0, 1}));
    c = compress_pair(mono, mono, 1);
    CHECK(c.a == mono);
    CHECK(c.potentials.size() == 1);
    CHECK(c.sweeps == 1);

    CHECK_THROWS_AS(compress_pair(Family::full(p), Family::full(p), 1), InputError);

    std::mt19937_64 rng(9);
    const SizeVector q({3, 2, 3});
    for (int trial = 0; trial < 100; ++trial) {
        const Family a = random_family(q, rng, 4);
        const Family b = dual(a, 1);
        c = compress_pair(a, b, 1);
        CHECK(c.a.size() == a.size());
        CHECK(c.b.size() == b.size());
        CHECK(are_r_cross_intersecting(c.a, c.b, 1));
        for (std::size_t k = 1; k < c.potentials.size(); ++k) CHECK(c.potentials[k] < c.potentials[k - 1]);
    }
}
