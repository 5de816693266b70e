// Supports, monotone families and the shift operations that compress an
// r-cross-intersecting pair to a monotone fixpoint.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "family.hpp"
#include "families.hpp"

namespace xintersect {

/// A subset of [n] as a bitmask; bit i is 0-based coordinate i.
using CoordMask = std::uint32_t;

inline constexpr std::size_t kMaxSupportCoords = 30;

[[nodiscard]] inline CoordMask support_vector(const Point& x)
{
    if (x.length() > kMaxSupportCoords) throw InputError("supports are limited to n <= 30");
    CoordMask s = 0;
    for (Coord i = 0; i < x.length(); ++i) {
        if (x[i] > 1) s |= CoordMask{1} << i;
    }
    return s;
}

/// A collection of subsets of [n], kept sorted and duplicate-free.
class SupportSystem {
public:
    SupportSystem() = default;

    SupportSystem(std::size_t n, std::vector<CoordMask> sets) : n_(n), sets_(std::move(sets))
    {
        if (n_ > kMaxSupportCoords) throw InputError("support systems are limited to n <= 30");
        const CoordMask universe = (CoordMask{1} << n_) - 1;
        for (auto s : sets_) {
            if ((s & ~universe) != 0) throw InputError("support set mentions a coordinate > n");
        }
        std::sort(sets_.begin(), sets_.end());
        sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
    }

    /// {s ⊆ [n] : |s ∩ coords| <= radius}.
    [[nodiscard]] static SupportSystem ball(std::size_t n, CoordMask coords, std::size_t radius)
    {
        std::vector<CoordMask> sets;
        for (CoordMask s = 0; s < (CoordMask{1} << n); ++s) {
            if (static_cast<std::size_t>(std::popcount(s & coords)) <= radius) sets.push_back(s);
        }
        return SupportSystem(n, std::move(sets));
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<CoordMask>& sets() const noexcept { return sets_; }
    [[nodiscard]] bool empty() const noexcept { return sets_.empty(); }

    [[nodiscard]] bool contains(CoordMask s) const
    {
        return std::binary_search(sets_.begin(), sets_.end(), s);
    }

    [[nodiscard]] bool is_subset_closed() const
    {
        for (auto s : sets_) {
            for (CoordMask rest = s; rest != 0; rest &= rest - 1) {
                if (!contains(s & ~(rest & (~rest + 1)))) return false;
            }
        }
        return true;
    }

    friend bool operator==(const SupportSystem&, const SupportSystem&) = default;
    friend auto operator<=>(const SupportSystem&, const SupportSystem&) = default;

private:
    std::size_t n_ = 0;
    std::vector<CoordMask> sets_;
};

[[nodiscard]] inline SupportSystem support_system(const Family& a)
{
    std::vector<CoordMask> sets;
    for (const auto& x : a.members()) sets.push_back(support_vector(x));
    return SupportSystem(a.domain().length(), std::move(sets));
}

[[nodiscard]] inline Family family_from_support(const SizeVector& p, const SupportSystem& s)
{
    if (s.n() != p.length()) throw InputError("support system and size vector disagree on n");
    if (!s.is_subset_closed()) throw InputError("support system is not subset-closed");
    return Family::from_predicate(p, [&](const Point& x) { return s.contains(support_vector(x)); });
}

/// sum_{s in S} prod_{i in s} (p_i - 1).
[[nodiscard]] inline BigInt size_from_support(const SizeVector& p, const SupportSystem& s)
{
    if (s.n() != p.length()) throw InputError("support system and size vector disagree on n");
    if (!s.is_subset_closed()) throw InputError("support system is not subset-closed");
    BigInt total = 0;
    for (auto set : s.sets()) {
        BigInt w = 1;
        for (Coord i = 0; i < p.length(); ++i) {
            if (set & (CoordMask{1} << i)) w *= p[i] - 1;
        }
        total += w;
    }
    return total;
}

[[nodiscard]] inline bool is_monotone(const Family& a)
{
    const SupportSystem s = support_system(a);
    if (!s.is_subset_closed()) return false;
    return family_from_support(a.domain(), s) == a;
}

/// Relevant coordinates of the monotone family with support system S.
[[nodiscard]] inline CoordMask support_relevant_coordinates(const SupportSystem& s)
{
    CoordMask relevant = 0;
    for (Coord i = 0; i < s.n(); ++i) {
        const CoordMask bit = CoordMask{1} << i;
        for (auto set : s.sets()) {
            if (!(set & bit) && !s.contains(set | bit)) {
                relevant |= bit;
                break;
            }
        }
    }
    return relevant;
}

/// Pair-level criterion for monotone families: every a in S_A, b in S_B
/// satisfies |a ∪ b| <= n - r.
[[nodiscard]] inline bool supports_cross_intersect(const SupportSystem& sa, const SupportSystem& sb, int r)
{
    if (sa.n() != sb.n()) throw InputError("support systems disagree on n");
    require_r(sa.n(), r);
    const auto limit = static_cast<int>(sa.n()) - r;
    for (auto a : sa.sets()) {
        for (auto b : sb.sets()) {
            if (std::popcount(a | b) > limit) return false;
        }
    }
    return true;
}

/// Largest partner at the support level: {b : |a ∪ b| <= n - r for all a in S}.
[[nodiscard]] inline SupportSystem support_dual(const SupportSystem& s, int r)
{
    require_r(s.n(), r);
    const auto limit = static_cast<int>(s.n()) - r;
    std::vector<CoordMask> out;
    for (CoordMask b = 0; b < (CoordMask{1} << s.n()); ++b) {
        const bool ok = std::all_of(s.sets().begin(), s.sets().end(),
                                    [&](CoordMask a) { return std::popcount(a | b) <= limit; });
        if (ok) out.push_back(b);
    }
    return SupportSystem(s.n(), std::move(out));
}

struct BallShape {
    CoordMask coords = 0;
    std::size_t radius = 0;
};

/// When S is the support system of a ball around the all-ones point,
/// returns its coordinate set (the relevant coordinates) and radius.
[[nodiscard]] inline std::optional<BallShape> support_ball_shape(const SupportSystem& s)
{
    if (s.empty()) return std::nullopt;
    const CoordMask coords = support_relevant_coordinates(s);
    std::size_t radius = 0;
    for (auto set : s.sets()) {
        radius = std::max(radius, static_cast<std::size_t>(std::popcount(set & coords)));
    }
    if (SupportSystem::ball(s.n(), coords, radius) == s) return BallShape{coords, radius};
    return std::nullopt;
}

/// Sum of all coordinates of all members.
[[nodiscard]] inline std::uint64_t potential(const Family& a)
{
    std::uint64_t total = 0;
    for (const auto& x : a.members()) {
        for (auto v : x.values()) total += v;
    }
    return total;
}

/// phi_{i,j}: each member with x_i = j moves to x with x_i = 1 unless that
/// point is already in A. Coordinate i is 0-based, j in [2, p_i].
[[nodiscard]] inline Family shift(const Family& a, Coord i, std::uint32_t j)
{
    const SizeVector& p = a.domain();
    if (i >= p.length()) throw InputError("shift coordinate outside [1,n]");
    if (j < 2 || j > p[i]) {
        throw InputError("shift value " + std::to_string(j) + " outside [2," + std::to_string(p[i]) + "]");
    }
    const auto stride = detail::strides(p)[i];
    const auto& src = a.bits();
    Family::Bits out = src;
    for (auto idx = src.find_first(); idx != Family::Bits::npos; idx = src.find_next(idx)) {
        const auto value = static_cast<std::uint32_t>((idx / stride) % p[i]) + 1;
        if (value != j) continue;
        const std::uint64_t projected = idx - (j - 1) * stride;
        if (!src.test(projected)) {
            out.reset(idx);
            out.set(projected);
        }
    }
    return Family(p, std::move(out));
}

struct Compression {
    Family a;
    Family b;
    std::size_t sweeps = 0;
    /// Potential(A) + Potential(B) after every shift that changed the pair,
    /// starting with the input value.
    std::vector<std::uint64_t> potentials;
    bool monotone = false;
};

/// Applies phi_{i,j} jointly to both families, sweeping (i, j) in
/// lexicographic order until a full sweep changes nothing.
[[nodiscard]] inline Compression compress_pair(const Family& a, const Family& b, int r)
{
    a.require_same_domain(b);
    if (!are_r_cross_intersecting(a, b, r)) {
        throw InputError("compress_pair requires an r-cross-intersecting pair");
    }
    const SizeVector& p = a.domain();
    Compression out{a, b, 0, {potential(a) + potential(b)}, false};
    bool changed = true;
    while (changed) {
        changed = false;
        ++out.sweeps;
        for (Coord i = 0; i < p.length(); ++i) {
            for (std::uint32_t j = 2; j <= p[i]; ++j) {
                Family na = shift(out.a, i, j);
                Family nb = shift(out.b, i, j);
                if (na == out.a && nb == out.b) continue;
                out.a = std::move(na);
                out.b = std::move(nb);
                out.potentials.push_back(potential(out.a) + potential(out.b));
                changed = true;
            }
        }
    }
    out.monotone = is_monotone(out.a) && is_monotone(out.b);
    return out;
}

}  // namespace xintersect
