#include <catch2/catch_amalgamated.hpp>

#include <xintersect/verify.hpp>

using namespace xintersect;

namespace {

SuiteConfig config(std::size_t trials)
{
    SuiteConfig c;
    c.trials = trials;
    return c;
}

}  // namespace

TEST_CASE("every suite passes on small instances")
{
    const std::vector<std::pair<std::vector<std::uint32_t>, int>> cases{
        {{2, 3}, 1}, {{3, 3, 2}, 2}, {{2, 2, 2}, 2}, {{3, 4}, 1}, {{3, 3, 3}, 1}};
    for (const auto& suite : suite_names()) {
        for (const auto& [p, r] : cases) {
            const auto out = run_suite(suite, SizeVector(p), r, config(100));
            INFO(suite);
            CHECK(out.failures == 0);
            CHECK(out.checks > 0);
            CHECK_FALSE(out.counterexample.has_value());
        }
    }
}

TEST_CASE("suites are reproducible")
{
    const auto a = run_suite("shift", SizeVector({3, 2, 3}), 1, config(50));
    const auto b = run_suite("shift", SizeVector({3, 2, 3}), 1, config(50));
    CHECK(a.checks == b.checks);
    CHECK_THROWS_AS(run_suite("unknown", SizeVector({2, 2}), 1, config(1)), InputError);
}

TEST_CASE("support-level concentration counts")
{
    const SizeVector p({3, 3, 3, 3, 3});
    const SupportSystem single(5, {0});
    const SupportSystem ball = SupportSystem::ball(5, 0b11111, 1);
    const auto counts = support_value_counts(p, ball, 2);
    CHECK(counts[1] == 9);
    CHECK(counts[2] == 1);
    CHECK(counts[3] == 1);
    CHECK(support_lemma9_witness(p, single, ball, 2) == 1u);
}
