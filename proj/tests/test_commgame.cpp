#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <xintersect/commgame.hpp>
#include <xintersect/families.hpp>

#include "oracles.hpp"

using namespace xintersect;

TEST_CASE("communication matrix entries")
{
    const SizeVector sq({2, 2});
    CHECK(build_matrix(sq, 0).ones() == 16);
    CHECK(build_matrix(sq, 2).ones() == 4);
    const CommMatrix m = build_matrix(sq, 1);
    CHECK(m.ones() == 12);

    const SizeVector p({3, 2, 3});
    const CommMatrix q = build_matrix(p, 2);
    for (std::size_t x = 0; x < q.dimension(); ++x) {
        const Point px = unrank(p, Rank{x});
        CHECK(q.at(x, x));
        CHECK_FALSE(q.at(x, rank(p, antipodal(p, px)).value));
        for (std::size_t y = 0; y < q.dimension(); ++y) {
            CHECK(q.at(x, y) == q.at(y, x));
            CHECK(q.at(x, y) == (oracle::agree(px.values(), unrank(p, Rank{y}).values()) >= 2));
        }
    }
    Limits small;
    small.max_comm_domain = 10;
    CHECK_THROWS_AS(build_matrix(p, 1, small), ResourceLimitError);
}

TEST_CASE("largest all-ones rectangle")
{
    CHECK(max_all_ones_rectangle(build_matrix(SizeVector({2, 2}), 1)).area == 4);
    CHECK(max_all_ones_rectangle(build_matrix(SizeVector({2, 2}), 0)).area == 16);
    const auto rect = max_all_ones_rectangle(build_matrix(SizeVector({2, 2, 2}), 2));
    CHECK(rect.area == 4);
    CHECK(rect.rows.size() * rect.cols.size() == 4);

    for (const oracle::Vec& p : {oracle::Vec{3, 3}, oracle::Vec{2, 3, 2}, oracle::Vec{2, 2, 2}, oracle::Vec{4, 3}}) {
        for (int r = 1; r <= static_cast<int>(p.size()); ++r) {
            const CommMatrix m = build_matrix(SizeVector(p), r);
            const auto best = max_all_ones_rectangle(m);
            CHECK(best.area == oracle::max_product(p, r));
            for (auto x : best.rows) {
                for (auto y : best.cols) CHECK(m.at(x, y));
            }
        }
    }
}

TEST_CASE("PBM dump")
{
    std::ostringstream out;
    write_pbm(out, build_matrix(SizeVector({2, 2}), 1));
    CHECK(out.str() == "P1\n4 4\n1110\n1101\n1011\n0111\n");
}
