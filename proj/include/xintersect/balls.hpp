// Hamming balls: membership, exact sizes, log-concavity, best ball pairs.
#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "family.hpp"

namespace xintersect {

/// Points within `radius` mismatches of `center` on the coordinates `coords`.
struct BallSpec {
    Point center;
    CoordList coords;
    std::size_t radius = 0;
};

/// Balls of radii l and m around a shared center in T with |T| = l + m + r.
struct BallPairSpec {
    Point center;
    CoordList coords;
    std::size_t radius_a = 0;
    std::size_t radius_b = 0;
    int r = 0;

    [[nodiscard]] BallSpec ball_a() const { return {center, coords, radius_a}; }
    [[nodiscard]] BallSpec ball_b() const { return {center, coords, radius_b}; }

    friend bool operator==(const BallPairSpec&, const BallPairSpec&) = default;
};

namespace detail {

inline void require_coords(const SizeVector& p, const CoordList& coords)
{
    std::vector<bool> seen(p.length(), false);
    for (auto c : coords) {
        if (c >= p.length()) {
            throw InputError("coordinate " + std::to_string(c + 1) + " outside [1," +
                             std::to_string(p.length()) + "]");
        }
        if (seen[c]) throw InputError("duplicate coordinate " + std::to_string(c + 1));
        seen[c] = true;
    }
}

}  // namespace detail

/// Coefficients of prod_{i in T} (1 + (p_i - 1) z): entry d counts the
/// patterns on T with exactly d mismatches against a fixed center.
[[nodiscard]] inline std::vector<BigInt> mismatch_profile(const SizeVector& p, const CoordList& coords)
{
    detail::require_coords(p, coords);
    std::vector<BigInt> counts{1};
    for (auto c : coords) {
        const BigInt other = p[c] - 1;
        counts.emplace_back(0);
        for (std::size_t d = counts.size() - 1; d > 0; --d) counts[d] += counts[d - 1] * other;
    }
    return counts;
}

[[nodiscard]] inline BigInt ball_size(const SizeVector& p, const CoordList& coords, std::size_t radius)
{
    if (radius > coords.size()) {
        throw InputError("radius " + std::to_string(radius) + " exceeds |T| = " +
                         std::to_string(coords.size()));
    }
    const auto profile = mismatch_profile(p, coords);
    BigInt inside = 0;
    for (std::size_t d = 0; d <= radius; ++d) inside += profile[d];

    std::vector<bool> in_t(p.length(), false);
    for (auto c : coords) in_t[c] = true;
    BigInt outside = 1;
    for (Coord i = 0; i < p.length(); ++i) {
        if (!in_t[i]) outside *= p[i];
    }
    return inside * outside;
}

[[nodiscard]] inline Family ball_members(const SizeVector& p, const BallSpec& spec)
{
    require_point(p, spec.center);
    detail::require_coords(p, spec.coords);
    if (spec.radius > spec.coords.size()) throw InputError("radius exceeds |T|");
    return Family::from_predicate(p, [&](const Point& x) {
        std::size_t mismatches = 0;
        for (auto c : spec.coords) {
            if (x[c] != spec.center[c]) ++mismatches;
        }
        return mismatches <= spec.radius;
    });
}

struct LogConcavity {
    bool strict = false;
    BigInt below;
    BigInt at;
    BigInt above;
};

/// |B_l|^2 > |B_{l-1}| * |B_{l+1}|, for 1 <= l < |T|.
[[nodiscard]] inline LogConcavity log_concavity(const SizeVector& p, const CoordList& coords, std::size_t l)
{
    if (l < 1 || l >= coords.size()) {
        throw InputError("log-concavity index l = " + std::to_string(l) + " outside [1," +
                         std::to_string(coords.size()) + ")");
    }
    LogConcavity out;
    out.below = ball_size(p, coords, l - 1);
    out.at = ball_size(p, coords, l);
    out.above = ball_size(p, coords, l + 1);
    out.strict = out.at * out.at > out.below * out.above;
    return out;
}

[[nodiscard]] inline bool log_concave_check(const SizeVector& p, const CoordList& coords, std::size_t l)
{
    return log_concavity(p, coords, l).strict;
}

struct BestBallPair {
    BallPairSpec best;
    BigInt product;
    /// Every (|T|, l) split reaching the optimum, in tie-break order.
    std::vector<BallPairSpec> optima;
};

/// Searches T = the |T| coordinates with the smallest p_i and every radius
/// split l + m = |T| - r. The balanced-radii property is not imposed here.
[[nodiscard]] inline BestBallPair best_ball_pair(const SizeVector& p, int r)
{
    require_r(p.length(), r);
    const CoordList order = p.ascending_order();
    const Point center = all_ones(p);

    BestBallPair result;
    result.product = -1;
    for (std::size_t t = static_cast<std::size_t>(r); t <= p.length(); ++t) {
        CoordList coords(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(t));
        std::sort(coords.begin(), coords.end());
        const auto profile = mismatch_profile(p, coords);
        BigInt outside = 1;
        for (auto it = order.begin() + static_cast<std::ptrdiff_t>(t); it != order.end(); ++it) {
            outside *= p[*it];
        }
        std::vector<BigInt> cumulative(profile.size());
        BigInt running = 0;
        for (std::size_t d = 0; d < profile.size(); ++d) {
            running += profile[d];
            cumulative[d] = running * outside;
        }
        const std::size_t budget = t - static_cast<std::size_t>(r);
        for (std::size_t l = 0; l <= budget; ++l) {
            const BigInt product = cumulative[l] * cumulative[budget - l];
            BallPairSpec spec{center, coords, l, budget - l, r};
            if (product > result.product) {
                result.product = product;
                result.best = spec;
                result.optima.assign(1, spec);
            } else if (product == result.product) {
                result.optima.push_back(spec);
            }
        }
    }
    return result;
}

}  // namespace xintersect
