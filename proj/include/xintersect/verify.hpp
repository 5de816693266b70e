// Randomised and search-backed property suites behind `verify`.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "balls.hpp"
#include "bounds.hpp"
#include "compress.hpp"
#include "core.hpp"
#include "family.hpp"
#include "families.hpp"
#include "report.hpp"
#include "search.hpp"

namespace xintersect {

struct SuiteOutcome {
    std::string suite;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    /// First failing case, serialised.
    std::optional<nlohmann::json> counterexample;
    nlohmann::json details = nlohmann::json::object();

    void check(bool ok, const std::string& property, const std::function<nlohmann::json()>& certificate)
    {
        ++checks;
        if (ok) return;
        ++failures;
        if (!counterexample) {
            counterexample = certificate();
            (*counterexample)["property"] = property;
        }
    }
};

struct SuiteConfig {
    std::size_t trials = 1000;
    std::uint64_t seed = 20140101;
    SearchOptions search;
    /// Cap on |S_p| for suites that build explicit families and duals.
    std::uint64_t max_explicit = 4096;
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"logconcavity", "dual", "shift", "lemma9", "theorem5", "conjecture3"};
    return names;
}

namespace detail {

inline Family random_family(const SizeVector& p, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double density = unit(rng);
    const auto size = domain_size_u64(p);
    Family::Bits bits(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        if (unit(rng) < density) bits.set(i);
    }
    return Family(p, std::move(bits));
}

inline Family random_subfamily(const Family& f, std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double keep = unit(rng);
    Family::Bits bits = f.bits();
    for (auto i = bits.find_first(); i != Family::Bits::npos; i = bits.find_next(i)) {
        if (unit(rng) >= keep) bits.reset(i);
    }
    return Family(f.domain(), std::move(bits));
}

inline Family unite(const Family& a, const Family& b) { return Family(a.domain(), a.bits() | b.bits()); }

inline void require_explicit(const SizeVector& p, const SuiteConfig& config)
{
    if (domain_size(p) > config.max_explicit) {
        throw ResourceLimitError("suite needs |S_p| <= " + std::to_string(config.max_explicit));
    }
}

/// Optimal pairs as explicit families: full enumeration where it fits,
/// otherwise monotone optima expanded from their support systems.
inline std::vector<FamilyWitness> certified_optima(const SizeVector& p, int r, const SuiteConfig& config)
{
    std::vector<FamilyWitness> out;
    if (domain_size(p) <= config.search.limits.max_full_domain) {
        return enumerate_optimal_pairs(p, r, SearchMode::Full, config.search).family_witnesses;
    }
    require_explicit(p, config);
    for (const auto& w : enumerate_optimal_pairs(p, r, SearchMode::Monotone, config.search).support_witnesses) {
        out.push_back({family_from_support(p, w.a), family_from_support(p, w.b)});
    }
    return out;
}

inline CoordList mask_coords(CoordMask mask)
{
    CoordList out;
    for (Coord i = 0; i < 32; ++i) {
        if (mask & (CoordMask{1} << i)) out.push_back(i);
    }
    return out;
}

}  // namespace detail

/// Number of members of the monotone family S with x_i = value, per value.
[[nodiscard]] inline std::vector<BigInt> support_value_counts(const SizeVector& p, const SupportSystem& s, Coord i)
{
    std::vector<BigInt> counts(p[i] + 1, 0);
    const CoordMask bit = CoordMask{1} << i;
    for (auto set : s.sets()) {
        BigInt w = 1;
        for (Coord c = 0; c < p.length(); ++c) {
            if (c != i && (set & (CoordMask{1} << c))) w *= p[c] - 1;
        }
        if (set & bit) {
            for (std::uint32_t v = 2; v <= p[i]; ++v) counts[v] += w;
        } else {
            counts[1] += w;
        }
    }
    return counts;
}

/// Support-level counterpart of lemma9_witness for monotone pairs.
[[nodiscard]] inline std::optional<std::uint32_t> support_lemma9_witness(const SizeVector& p, const SupportSystem& a,
                                                                         const SupportSystem& b, Coord i)
{
    const auto ca = support_value_counts(p, a, i);
    const auto cb = support_value_counts(p, b, i);
    const BigInt size_a = size_from_support(p, a);
    const BigInt size_b = size_from_support(p, b);
    for (std::uint32_t l = 1; l <= p[i]; ++l) {
        if ((size_a - ca[l]) * p[i] <= size_a && (size_b - cb[l]) * p[i] <= size_b) return l;
    }
    return std::nullopt;
}

[[nodiscard]] inline SuiteOutcome run_suite(const std::string& suite, const SizeVector& p, int r,
                                            const SuiteConfig& config)
{
    using nlohmann::json;
    namespace rep = report;
    SuiteOutcome out;
    out.suite = suite;
    std::mt19937_64 rng(config.seed);
    const std::size_t n = p.length();

    if (suite == "logconcavity") {
        std::uniform_int_distribution<std::size_t> coin(0, 1);
        for (std::size_t t = 0; t < config.trials && n >= 2; ++t) {
            CoordList coords;
            while (coords.size() < 2) {
                coords.clear();
                for (Coord i = 0; i < n; ++i) {
                    if (coin(rng)) coords.push_back(i);
                }
            }
            std::uniform_int_distribution<std::size_t> pick(1, coords.size() - 1);
            const std::size_t l = pick(rng);
            const auto lc = log_concavity(p, coords, l);
            out.check(lc.strict, "strict log-concavity of ball sizes", [&] {
                return json{{"coords", rep::coords_json(coords)}, {"l", l}, {"sizes", {lc.below.str(), lc.at.str(), lc.above.str()}}};
            });
        }
    } else if (suite == "dual") {
        detail::require_explicit(p, config);
        for (std::size_t t = 0; t < config.trials; ++t) {
            const Family a = detail::random_family(p, rng);
            const Family bigger = detail::unite(a, detail::random_family(p, rng));
            const Family da = dual(a, r);
            const Family db = dual(bigger, r);
            auto cert = [&] { return json{{"a", rep::family_json(a)}, {"a_superset", rep::family_json(bigger)}}; };
            out.check(db.is_subset_of(da), "dual is antitone", cert);
            out.check(dual(dual(da, r), r) == da, "triple dual equals dual", cert);
            out.check(are_r_cross_intersecting(a, da, r), "(A, dual A) is cross-intersecting", cert);
        }
    } else if (suite == "shift") {
        detail::require_explicit(p, config);
        for (std::size_t t = 0; t < config.trials; ++t) {
            const Family a = detail::random_family(p, rng);
            const Family b = detail::random_subfamily(dual(a, r), rng);
            std::uniform_int_distribution<Coord> pick_i(0, n - 1);
            const Coord i = pick_i(rng);
            std::uniform_int_distribution<std::uint32_t> pick_j(2, p[i]);
            const std::uint32_t j = pick_j(rng);
            const Family sa = shift(a, i, j);
            const Family sb = shift(b, i, j);
            auto cert = [&] {
                return json{{"a", rep::family_json(a)}, {"b", rep::family_json(b)}, {"i", i + 1}, {"j", j}};
            };
            out.check(sa.size() == a.size() && sb.size() == b.size(), "shift preserves cardinality", cert);
            out.check(are_r_cross_intersecting(sa, sb, r), "shift preserves cross-intersection", cert);
            const auto c = compress_pair(a, b, r);
            bool descending = true;
            for (std::size_t k = 1; k < c.potentials.size(); ++k) descending &= c.potentials[k] < c.potentials[k - 1];
            out.check(descending, "potential strictly decreases during compression", cert);
            out.check(c.a.size() == a.size() && c.b.size() == b.size() && are_r_cross_intersecting(c.a, c.b, r),
                      "compression preserves sizes and cross-intersection", cert);
        }
        for (const auto& w : detail::certified_optima(p, r, config)) {
            const auto c = compress_pair(w.a, w.b, r);
            out.check(c.monotone, "compressed maximal pair is monotone",
                      [&] { return json{{"a", rep::family_json(w.a)}, {"b", rep::family_json(w.b)}}; });
        }
    } else if (suite == "lemma9") {
        if (domain_size(p) <= config.search.limits.max_full_domain) {
            for (const auto& w : detail::certified_optima(p, r, config)) {
                auto cert = [&] { return rep::family_witness_json(w); };
                out.check(check_mutual_duality(w.a, w.b, r), "maximal pair is mutually dual", cert);
                const auto rel_a = relevant_coordinates(w.a);
                out.check(rel_a == relevant_coordinates(w.b), "A and B share relevant coordinates", cert);
                for (auto i : rel_a) {
                    out.check(lemma9_witness(w.a, w.b, i).has_value(), "concentration witness exists", [&] {
                        auto j = cert();
                        j["coordinate"] = i + 1;
                        return j;
                    });
                }
            }
        } else {
            const auto res = enumerate_optimal_pairs(p, r, SearchMode::Monotone, config.search);
            for (const auto& w : res.support_witnesses) {
                auto cert = [&] { return rep::support_witness_json(p, w, false); };
                out.check(support_dual(w.a, r) == w.b && support_dual(w.b, r) == w.a, "maximal pair is mutually dual",
                          cert);
                const CoordMask rel = support_relevant_coordinates(w.a);
                out.check(rel == support_relevant_coordinates(w.b), "A and B share relevant coordinates", cert);
                for (auto i : detail::mask_coords(rel)) {
                    out.check(support_lemma9_witness(p, w.a, w.b, i).has_value(), "concentration witness exists", [&] {
                        auto j = cert();
                        j["coordinate"] = i + 1;
                        return j;
                    });
                }
            }
        }
    } else if (suite == "theorem5") {
        const auto res = enumerate_optimal_pairs(p, r, SearchMode::Monotone, config.search);
        for (const auto& w : res.support_witnesses) {
            const CoordList rel = detail::mask_coords(support_relevant_coordinates(w.a) | support_relevant_coordinates(w.b));
            const Real bound = theorem5_bound(p, rel);
            const Real slack = bound * Real(1e-9);
            auto cert = [&] {
                auto j = rep::support_witness_json(p, w, false);
                j["bound"] = to_string(bound);
                return j;
            };
            out.check(Real(w.size_a) <= bound + slack && Real(w.size_b) <= bound + slack,
                      "sizes within the entropy bound", cert);
            const auto t6 = theorem6_filter(p, r, rel);
            out.check(t6.admissible, "relevant set passes the product filter", cert);
            out.check(t6.count_ok, "fewer than 5r relevant coordinates with p_i > 2", cert);
        }
    } else if (suite == "conjecture3") {
        const auto verdict = check_conjecture3(p, r, config.search);
        out.details = json{{"consistent", verdict.consistent},
                           {"ball_product", to_string(verdict.ball_product)},
                           {"search_product", to_string(verdict.search_product)},
                           {"optima", verdict.search.support_witnesses.size()}};
        out.details["all_optima_are_balls"] =
            verdict.all_optima_are_balls ? json(*verdict.all_optima_are_balls) : json(nullptr);
        out.check(verdict.consistent, "a ball pair attains the optimum", [&] {
            auto j = rep::support_witness_json(p, *verdict.counterexample, false);
            j["kind"] = verdict.counterexample_kind;
            return j;
        });
        if (verdict.all_optima_are_balls) {
            out.check(*verdict.all_optima_are_balls, "every optimum is a pair of balls", [&] {
                auto j = rep::support_witness_json(p, *verdict.counterexample, false);
                j["kind"] = verdict.counterexample_kind;
                return j;
            });
        }
    } else {
        throw InputError("unknown suite '" + suite + "'");
    }
    return out;
}

}  // namespace xintersect
