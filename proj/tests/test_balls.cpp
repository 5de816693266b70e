#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <xintersect/balls.hpp>

#include "oracles.hpp"

using namespace xintersect;

TEST_CASE("ball sizes")
{
    CHECK(ball_size(SizeVector({2, 3, 4}), {0, 1}, 1) == 16);
    CHECK(ball_size(SizeVector({3, 3, 3, 3, 3}), {0, 1, 2, 3, 4}, 1) == 11);
    CHECK(ball_size(SizeVector({2, 2, 2, 2}), {0, 1, 2, 3}, 1) == 5);
    CHECK(ball_size(SizeVector({3, 5, 7}), {1}, 0) == 21);
    CHECK(ball_size(SizeVector({3, 5, 7}), {0, 1, 2}, 3) == 105);
    CHECK_THROWS_AS(ball_size(SizeVector({3, 5}), {0, 1}, 3), InputError);
    CHECK_THROWS_AS(ball_size(SizeVector({3, 5}), {0, 2}, 1), InputError);
    CHECK_THROWS_AS(ball_size(SizeVector({3, 5}), {1, 1}, 1), InputError);
}

TEST_CASE("ball sizes agree with point counts")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> len(1, 4), entry(2, 5);
        oracle::Vec p(static_cast<std::size_t>(len(rng)));
        for (auto& v : p) v = static_cast<std::uint32_t>(entry(rng));
        CoordList coords;
        std::vector<std::size_t> ocoords;
        for (Coord i = 0; i < p.size(); ++i) {
            if (rng() & 1) {
                coords.push_back(i);
                ocoords.push_back(i);
            }
        }
        std::uniform_int_distribution<std::size_t> rad(0, coords.size());
        const std::size_t radius = rad(rng);
        oracle::Vec center(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) center[i] = 1 + static_cast<std::uint32_t>(rng() % p[i]);

        const SizeVector sp(p);
        CHECK(ball_size(sp, coords, radius) == oracle::ball_count(p, ocoords, center, radius));
        const Family members = ball_members(sp, {Point(center), coords, radius});
        CHECK(BigInt(members.size()) == ball_size(sp, coords, radius));
    }
}

TEST_CASE("ball members")
{
    const SizeVector p({3, 3, 3});
    const Point c{2, 1, 3};
    CHECK(ball_members(p, {c, {0, 1, 2}, 0}).members() == std::vector<Point>{c});
    CHECK(ball_members(p, {c, {0, 2}, 2}).size() == 27);
    CHECK(ball_members(SizeVector({3, 3, 3, 3, 3}), {all_ones(SizeVector({3, 3, 3, 3, 3})), {0, 1, 2, 3, 4}, 1}).size() == 11);
}

TEST_CASE("strict log-concavity")
{
    auto lc = log_concavity(SizeVector({3, 3, 3}), {0, 1, 2}, 1);
    CHECK(lc.below == 1);
    CHECK(lc.at == 7);
    CHECK(lc.above == 19);
    CHECK(lc.strict);
    CHECK(log_concave_check(SizeVector({2, 2, 2, 2}), {0, 1, 2, 3}, 2));
    CHECK(log_concave_check(SizeVector({2, 2}), {0, 1}, 1));
    CHECK_THROWS_AS(log_concavity(SizeVector({2, 2}), {0, 1}, 2), InputError);
    CHECK_THROWS_AS(log_concavity(SizeVector({2, 2}), {0, 1}, 0), InputError);
}

TEST_CASE("best ball pair")
{
    auto best = best_ball_pair(SizeVector({3, 3, 3, 3, 3}), 4);
    CHECK(best.product == 11);
    CHECK(best.best.coords.size() == 5);
    CHECK(std::min(best.best.radius_a, best.best.radius_b) == 0);
    CHECK(std::max(best.best.radius_a, best.best.radius_b) == 1);

    best = best_ball_pair(SizeVector({4, 4, 4}), 2);
    CHECK(best.product == 16);
    CHECK(best.best.coords.size() == 2);
    CHECK(best.best.radius_a == 0);
    CHECK(best.best.radius_b == 0);

    best = best_ball_pair(SizeVector({3, 3, 3, 3}), 2);
    CHECK(best.product == 81);
    bool fixing = false, radius_one = false;
    for (const auto& o : best.optima) {
        fixing |= o.coords.size() == 2 && o.radius_a == 0 && o.radius_b == 0;
        radius_one |= o.coords.size() == 4 && o.radius_a == 1 && o.radius_b == 1;
    }
    CHECK(fixing);
    CHECK(radius_one);

    // T is a prefix of the ascending order, reported in index order.
    best = best_ball_pair(SizeVector({9, 2, 2, 2, 2}), 2);
    CHECK(best.product == 81 * 5 * 5);
    CHECK(best.best.coords == CoordList{1, 2, 3, 4});
}

TEST_CASE("best ball pair is a valid cross-intersecting pair")
{
    for (const oracle::Vec& p : {oracle::Vec{2, 3, 3}, oracle::Vec{3, 3, 3}, oracle::Vec{2, 2, 2, 2}, oracle::Vec{4, 2, 3}}) {
        for (int r = 1; r <= static_cast<int>(p.size()); ++r) {
            const SizeVector sp(p);
            const auto best = best_ball_pair(sp, r);
            const Family a = ball_members(sp, best.best.ball_a());
            const Family b = ball_members(sp, best.best.ball_b());
            CHECK(BigInt(a.size()) * b.size() == best.product);
            for (const auto& x : a.members()) {
                for (const auto& y : b.members()) CHECK(oracle::agree(x.values(), y.values()) >= r);
            }
        }
    }
}
