// Exact maximisation of |A|·|B| over r-cross-intersecting pairs.
//
// Two independent routes:
//   * monotone_max enumerates every subset-closed support system S_A on [n]
//     (n <= 6) and pairs it with its largest partner
//     S_B = {b : |a ∪ b| <= n - r for all a in S_A}. Shifting turns any
//     maximal pair into a monotone maximal pair, so this optimum is global.
//   * full_max enumerates every nonempty A ⊆ S_p on tiny domains and pairs
//     it with its dual.
#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "balls.hpp"
#include "bounds.hpp"
#include "compress.hpp"
#include "core.hpp"
#include "family.hpp"
#include "families.hpp"
#include "parallel.hpp"

namespace xintersect {

enum class SearchMode { Monotone, Full };

inline std::string to_string(SearchMode mode)
{
    return mode == SearchMode::Monotone ? "monotone" : "full";
}

struct SearchOptions {
    Limits limits;
    std::size_t workers = default_worker_count();
    /// Skip support systems whose relevant set fails the entropy filter.
    bool theorem6_pruning = true;
    /// Upper bound on stored optimal pairs; the maximum itself is always exact.
    std::size_t max_witnesses = 100000;
};

struct SupportWitness {
    SupportSystem a;
    SupportSystem b;
    BigInt size_a;
    BigInt size_b;
};

struct FamilyWitness {
    Family a;
    Family b;
};

struct SearchStats {
    /// Branching nodes of the enumeration tree.
    std::uint64_t nodes = 0;
    /// Complete candidates (support systems or subsets) evaluated.
    std::uint64_t candidates = 0;
    /// Candidates skipped by the entropy filter.
    std::uint64_t pruned = 0;
    double elapsed_ms = 0;
};

struct SearchResult {
    SizeVector p;
    int r = 0;
    SearchMode mode = SearchMode::Monotone;
    BigInt max_product;
    /// Monotone mode: unordered pairs, A's system lexicographically <= B's.
    std::vector<SupportWitness> support_witnesses;
    /// Full mode: ordered pairs (A, dual(A)) sorted by A's rank list.
    std::vector<FamilyWitness> family_witnesses;
    bool witnesses_truncated = false;
    SearchStats stats;
};

namespace detail {

using u128 = unsigned __int128;

inline BigInt to_bigint(u128 v)
{
    BigInt out = static_cast<std::uint64_t>(v >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(v);
    return out;
}

/// Subset-indicator over [n]: bit s is set when subset s belongs to the system.
using SystemMask = std::uint64_t;

inline SupportSystem to_support_system(std::size_t n, SystemMask mask)
{
    std::vector<CoordMask> sets;
    for (SystemMask m = mask; m != 0; m &= m - 1) {
        sets.push_back(static_cast<CoordMask>(std::countr_zero(m)));
    }
    return SupportSystem(n, std::move(sets));
}

struct BestList {
    u128 best = 0;
    bool any = false;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    bool truncated = false;
    std::uint64_t nodes = 0;
    std::uint64_t candidates = 0;
    std::uint64_t pruned = 0;

    void offer(u128 product, std::uint64_t a, std::uint64_t b, std::size_t cap)
    {
        if (!any || product > best) {
            best = product;
            any = true;
            pairs.clear();
            truncated = false;
        } else if (product < best) {
            return;
        }
        if (pairs.size() < cap) {
            pairs.emplace_back(a, b);
        } else {
            truncated = true;
        }
    }
};

/// Merges worker results: global maximum and the union of optimal pairs.
inline BestList merge(std::vector<BestList>& parts)
{
    BestList out;
    for (auto& part : parts) {
        out.nodes += part.nodes;
        out.candidates += part.candidates;
        out.pruned += part.pruned;
        if (!part.any) continue;
        if (!out.any || part.best > out.best) {
            out.best = part.best;
            out.any = true;
            out.pairs.clear();
            out.truncated = false;
        }
        if (part.best == out.best) {
            out.pairs.insert(out.pairs.end(), part.pairs.begin(), part.pairs.end());
            out.truncated = out.truncated || part.truncated;
        }
    }
    return out;
}

class MonotoneEnumerator {
public:
    MonotoneEnumerator(const SizeVector& p, int r, const SearchOptions& options)
        : n_(p.length()), subsets_(std::size_t{1} << p.length()), options_(options)
    {
        weight_.assign(subsets_, 1);
        for (std::size_t s = 0; s < subsets_; ++s) {
            for (Coord i = 0; i < n_; ++i) {
                if (s & (std::size_t{1} << i)) weight_[s] *= p[i] - 1;
            }
        }
        const int limit = static_cast<int>(n_) - r;
        bad_.assign(subsets_, 0);
        supersets_.assign(subsets_, 0);
        for (std::size_t b = 0; b < subsets_; ++b) {
            for (std::size_t a = 0; a < subsets_; ++a) {
                if (std::popcount(static_cast<unsigned>(a | b)) > limit) bad_[b] |= SystemMask{1} << a;
                if ((a & b) == b) supersets_[b] |= SystemMask{1} << a;
            }
        }
        without_.assign(n_, 0);
        for (Coord i = 0; i < n_; ++i) {
            for (std::size_t s = 0; s < subsets_; ++s) {
                if (!(s & (std::size_t{1} << i))) without_[i] |= SystemMask{1} << s;
            }
        }
        admissible_.assign(subsets_, true);
        if (options.theorem6_pruning) {
            for (std::size_t t = 0; t < subsets_; ++t) {
                CoordList coords;
                for (Coord i = 0; i < n_; ++i) {
                    if (t & (std::size_t{1} << i)) coords.push_back(i);
                }
                admissible_[t] = theorem6_filter(p, r, coords).admissible;
            }
        }
    }

    struct Partial {
        std::size_t next = 0;
        SystemMask included = 0;
        SystemMask forbidden = 0;
        std::uint64_t size = 0;
    };

    /// Partial assignments of the first `depth` subsets that can extend to
    /// a down-set, in DFS order.
    std::vector<Partial> prefixes(std::size_t depth, std::uint64_t& nodes) const
    {
        std::vector<Partial> out;
        walk(Partial{}, depth, nodes, [&](const Partial& st) { out.push_back(st); });
        return out;
    }

    void finish(const Partial& start, BestList& best) const
    {
        walk(start, subsets_, best.nodes, [&](const Partial& st) { evaluate(st, best); });
    }

    [[nodiscard]] CoordMask relevant(SystemMask system) const
    {
        CoordMask rel = 0;
        for (Coord i = 0; i < n_; ++i) {
            const SystemMask moved = (system & without_[i]) << (std::size_t{1} << i);
            if (moved & ~system) rel |= CoordMask{1} << i;
        }
        return rel;
    }

private:
    template <typename Leaf>
    void walk(Partial st, std::size_t limit, std::uint64_t& nodes, Leaf&& leaf) const
    {
        while (st.next < limit && (st.forbidden >> st.next) & 1U) ++st.next;
        if (st.next == limit) {
            leaf(st);
            return;
        }
        ++nodes;
        const std::size_t s = st.next;
        Partial with = st;
        with.included |= SystemMask{1} << s;
        with.size += weight_[s];
        with.next = s + 1;
        walk(with, limit, nodes, leaf);
        Partial without = st;
        without.forbidden |= supersets_[s];
        without.next = s + 1;
        walk(without, limit, nodes, leaf);
    }

    void evaluate(const Partial& st, BestList& best) const
    {
        if (st.included == 0) return;
        ++best.candidates;
        if (options_.theorem6_pruning && !admissible_[relevant(st.included)]) {
            ++best.pruned;
            return;
        }
        SystemMask partner = 0;
        std::uint64_t partner_size = 0;
        for (std::size_t b = 0; b < subsets_; ++b) {
            if ((st.included & bad_[b]) == 0) {
                partner |= SystemMask{1} << b;
                partner_size += weight_[b];
            }
        }
        best.offer(static_cast<u128>(st.size) * partner_size, st.included, partner,
                   options_.max_witnesses);
    }

    std::size_t n_;
    std::size_t subsets_;
    SearchOptions options_;
    std::vector<std::uint64_t> weight_;
    std::vector<SystemMask> bad_;
    std::vector<SystemMask> supersets_;
    std::vector<SystemMask> without_;
    std::vector<bool> admissible_;
};

inline std::vector<std::uint64_t> mask_ranks(std::uint64_t mask)
{
    std::vector<std::uint64_t> out;
    for (; mask != 0; mask &= mask - 1) out.push_back(static_cast<std::uint64_t>(std::countr_zero(mask)));
    return out;
}

}  // namespace detail

[[nodiscard]] inline SearchResult monotone_max(const SizeVector& p, int r, const SearchOptions& options = {})
{
    const auto start = std::chrono::steady_clock::now();
    require_r(p.length(), r);
    const std::size_t n = p.length();
    if (n > options.limits.max_monotone_n || n > 6) {
        throw ResourceLimitError("monotone search supports n <= " +
                                 std::to_string(std::min<std::size_t>(options.limits.max_monotone_n, 6)) +
                                 ", got n = " + std::to_string(n));
    }
    (void)domain_size_u64(p);

    detail::MonotoneEnumerator enumerator(p, r, options);
    const std::size_t subsets = std::size_t{1} << n;
    std::uint64_t prefix_nodes = 0;
    const auto prefixes = enumerator.prefixes(std::min<std::size_t>(subsets, 12), prefix_nodes);

    auto parts = run_jobs<detail::BestList>(prefixes.size(), options.workers,
                                            [&](std::size_t job, detail::BestList& best) {
                                                enumerator.finish(prefixes[job], best);
                                            });
    detail::BestList merged = detail::merge(parts);

    SearchResult result;
    result.p = p;
    result.r = r;
    result.mode = SearchMode::Monotone;
    result.max_product = detail::to_bigint(merged.best);
    result.witnesses_truncated = merged.truncated;
    result.stats.nodes = merged.nodes + prefix_nodes;
    result.stats.candidates = merged.candidates;
    result.stats.pruned = merged.pruned;

    std::vector<std::pair<SupportSystem, SupportSystem>> pairs;
    pairs.reserve(merged.pairs.size());
    for (auto [a, b] : merged.pairs) {
        auto sa = detail::to_support_system(n, a);
        auto sb = detail::to_support_system(n, b);
        if (sb.sets() < sa.sets()) std::swap(sa, sb);
        pairs.emplace_back(std::move(sa), std::move(sb));
    }
    std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
        if (x.first.sets() != y.first.sets()) return x.first.sets() < y.first.sets();
        return x.second.sets() < y.second.sets();
    });
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (auto& [sa, sb] : pairs) {
        BigInt size_a = size_from_support(p, sa);
        BigInt size_b = size_from_support(p, sb);
        result.support_witnesses.push_back({std::move(sa), std::move(sb), std::move(size_a), std::move(size_b)});
    }
    result.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

[[nodiscard]] inline SearchResult full_max(const SizeVector& p, int r, const SearchOptions& options = {})
{
    const auto start = std::chrono::steady_clock::now();
    require_r(p.length(), r);
    const BigInt big_size = domain_size(p);
    if (big_size > options.limits.max_full_domain || big_size > 64) {
        throw ResourceLimitError("full search supports |S_p| <= " +
                                 std::to_string(std::min<std::uint64_t>(options.limits.max_full_domain, 64)) +
                                 ", got " + big_size.str());
    }
    const auto size = static_cast<std::size_t>(big_size);
    const auto need = static_cast<std::size_t>(r);

    std::vector<Point> points;
    for_each_point(p, [&](Rank, const Point& x) { points.push_back(x); });
    std::vector<std::uint64_t> neighbours(size, 0);
    for (std::size_t x = 0; x < size; ++x) {
        for (std::size_t y = 0; y < size; ++y) {
            if (detail::agreements(points[x], points[y]) >= need) neighbours[x] |= std::uint64_t{1} << y;
        }
    }
    const std::uint64_t all = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;

    const std::size_t split = std::min<std::size_t>(size, 10);
    const std::size_t jobs = std::size_t{1} << split;

    struct Frame {
        std::uint64_t chosen;
        std::uint64_t partner;
    };
    auto parts = run_jobs<detail::BestList>(jobs, options.workers, [&](std::size_t job, detail::BestList& best) {
        Frame root{0, all};
        for (std::size_t x = 0; x < split; ++x) {
            if (job & (std::size_t{1} << x)) {
                root.chosen |= std::uint64_t{1} << x;
                root.partner &= neighbours[x];
            }
        }
        auto descend = [&](auto&& self, Frame f, std::size_t x) -> void {
            if (x == size) {
                ++best.candidates;
                if (f.chosen == 0) return;
                const auto product = static_cast<detail::u128>(std::popcount(f.chosen)) *
                                     static_cast<detail::u128>(std::popcount(f.partner));
                best.offer(product, f.chosen, f.partner, options.max_witnesses);
                return;
            }
            ++best.nodes;
            self(self, Frame{f.chosen | (std::uint64_t{1} << x), f.partner & neighbours[x]}, x + 1);
            self(self, f, x + 1);
        };
        descend(descend, root, split);
    });
    detail::BestList merged = detail::merge(parts);

    SearchResult result;
    result.p = p;
    result.r = r;
    result.mode = SearchMode::Full;
    result.max_product = detail::to_bigint(merged.best);
    result.witnesses_truncated = merged.truncated;
    result.stats.nodes = merged.nodes + (jobs - 1);
    result.stats.candidates = merged.candidates;

    std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> pairs;
    for (auto [a, b] : merged.pairs) {
        // Optimal pairs are closed: A is the dual of its dual.
        std::uint64_t closure = all;
        for (auto y : detail::mask_ranks(b)) closure &= neighbours[y];
        if (closure != a) throw std::logic_error("optimal pair is not mutually dual");
        pairs.emplace_back(detail::mask_ranks(a), detail::mask_ranks(b));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (const auto& [a, b] : pairs) {
        result.family_witnesses.push_back({Family::from_ranks(p, a), Family::from_ranks(p, b)});
    }
    result.stats.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

[[nodiscard]] inline SearchResult search(const SizeVector& p, int r, SearchMode mode, const SearchOptions& options = {})
{
    return mode == SearchMode::Monotone ? monotone_max(p, r, options) : full_max(p, r, options);
}

/// All optimal pairs under the chosen mode's canonical order.
[[nodiscard]] inline SearchResult enumerate_optimal_pairs(const SizeVector& p, int r, SearchMode mode,
                                                          const SearchOptions& options = {})
{
    SearchOptions unbounded = options;
    unbounded.max_witnesses = std::max<std::size_t>(options.max_witnesses, 1'000'000);
    return search(p, r, mode, unbounded);
}

struct ConjectureVerdict {
    bool consistent = false;
    BigInt ball_product;
    BigInt search_product;
    BestBallPair best_balls;
    /// Evaluated only when min p_i >= 3.
    std::optional<bool> all_optima_are_balls;
    /// Present when either half of the conjecture fails on this instance.
    std::optional<SupportWitness> counterexample;
    std::string counterexample_kind;
    SearchResult search;
};

/// Compares the best ball pair against the exact monotone optimum. For
/// min p_i >= 3, also checks that every monotone optimum is a pair of
/// balls; a non-ball optimum would have a monotone non-ball counterpart, so
/// monotone optima suffice for that half.
[[nodiscard]] inline ConjectureVerdict check_conjecture3(const SizeVector& p, int r, const SearchOptions& options = {})
{
    ConjectureVerdict verdict;
    verdict.search = enumerate_optimal_pairs(p, r, SearchMode::Monotone, options);
    verdict.best_balls = best_ball_pair(p, r);
    verdict.ball_product = verdict.best_balls.product;
    verdict.search_product = verdict.search.max_product;
    verdict.consistent = verdict.ball_product == verdict.search_product;
    if (!verdict.consistent && !verdict.search.support_witnesses.empty()) {
        verdict.counterexample = verdict.search.support_witnesses.front();
        verdict.counterexample_kind = "ball_product_below_optimum";
    }
    if (p.min_entry() >= 3) {
        bool all_balls = true;
        for (const auto& w : verdict.search.support_witnesses) {
            if (!support_ball_shape(w.a) || !support_ball_shape(w.b)) {
                all_balls = false;
                if (!verdict.counterexample) {
                    verdict.counterexample = w;
                    verdict.counterexample_kind = "non_ball_optimum";
                }
                break;
            }
        }
        verdict.all_optima_are_balls = all_balls;
    }
    return verdict;
}

}  // namespace xintersect
