// Family-level predicates: cross-intersection, duality, relevant
// coordinates, Lemma-9 style concentration witnesses, and the k = 2
// constructions A_W, B_W.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "family.hpp"

namespace xintersect {

namespace detail {

/// stride[i] = prod_{j > i} p_j, so rank(x) = sum_i (x_i - 1) * stride[i].
inline std::vector<std::uint64_t> strides(const SizeVector& p)
{
    std::vector<std::uint64_t> out(p.length());
    std::uint64_t s = 1;
    for (Coord i = p.length(); i-- > 0;) {
        out[i] = s;
        s *= p[i];
    }
    return out;
}

inline std::size_t agreements(const Point& x, const Point& y)
{
    std::size_t a = 0;
    for (Coord i = 0; i < x.length(); ++i) {
        if (x[i] == y[i]) ++a;
    }
    return a;
}

}  // namespace detail

[[nodiscard]] inline bool are_r_cross_intersecting(const Family& a, const Family& b, int r)
{
    a.require_same_domain(b);
    require_r(a.domain().length(), r);
    const auto need = static_cast<std::size_t>(r);
    const auto ys = b.members();
    for (const auto& x : a.members()) {
        for (const auto& y : ys) {
            if (detail::agreements(x, y) < need) return false;
        }
    }
    return true;
}

/// {y in S_p : y r-intersects every x in A}. dual(empty) = S_p.
[[nodiscard]] inline Family dual(const Family& a, int r)
{
    const SizeVector& p = a.domain();
    require_r(p.length(), r);
    const auto xs = a.members();
    const auto need = static_cast<std::size_t>(r);
    return Family::from_predicate(p, [&](const Point& y) {
        return std::all_of(xs.begin(), xs.end(),
                           [&](const Point& x) { return detail::agreements(x, y) >= need; });
    });
}

[[nodiscard]] inline bool check_mutual_duality(const Family& a, const Family& b, int r)
{
    a.require_same_domain(b);
    return dual(a, r) == b && dual(b, r) == a;
}

/// Coordinates i for which some line {x : x_j fixed for j != i} is split by A.
[[nodiscard]] inline CoordList relevant_coordinates(const Family& a)
{
    const SizeVector& p = a.domain();
    const auto stride = detail::strides(p);
    const auto& bits = a.bits();
    CoordList out;
    for (Coord i = 0; i < p.length(); ++i) {
        bool relevant = false;
        for_each_point(p, [&](Rank idx, const Point& x) {
            if (relevant || x[i] == 1) return;
            const std::uint64_t base = idx.value - (x[i] - 1) * stride[i];
            if (bits.test(idx.value) != bits.test(base)) relevant = true;
        });
        if (relevant) out.push_back(i);
    }
    return out;
}

/// Smallest l in [p_i] with |{x in A : x_i != l}| <= |A|/p_i and
/// |{y in B : y_i != l}| <= |B|/p_i, if any.
[[nodiscard]] inline std::optional<std::uint32_t> lemma9_witness(const Family& a, const Family& b, Coord i)
{
    a.require_same_domain(b);
    const SizeVector& p = a.domain();
    if (i >= p.length()) throw InputError("coordinate outside [1,n]");

    auto value_counts = [&](const Family& f) {
        std::vector<std::uint64_t> counts(p[i] + 1, 0);
        for (const auto& x : f.members()) ++counts[x[i]];
        return counts;
    };
    const auto ca = value_counts(a);
    const auto cb = value_counts(b);
    for (std::uint32_t l = 1; l <= p[i]; ++l) {
        const std::uint64_t off_a = a.size() - ca[l];
        const std::uint64_t off_b = b.size() - cb[l];
        if (off_a * p[i] <= a.size() && off_b * p[i] <= b.size()) return l;
    }
    return std::nullopt;
}

/// x'_i = (x_i mod p_i) + 1; x and x' share no coordinate.
[[nodiscard]] inline Point antipodal(const SizeVector& p, const Point& x)
{
    require_point(p, x);
    std::vector<std::uint32_t> values(x.length());
    for (Coord i = 0; i < x.length(); ++i) values[i] = x[i] % p[i] + 1;
    return Point(std::move(values));
}

/// A set W of functions I -> [2], with I = {i : p_i = 2}.
struct FunctionSet {
    CoordList binary_coords;
    /// Each function lists its values on binary_coords, in that order.
    std::vector<std::vector<std::uint32_t>> functions;
};

inline CoordList binary_coordinates(const SizeVector& p)
{
    CoordList out;
    for (Coord i = 0; i < p.length(); ++i) {
        if (p[i] == 2) out.push_back(i);
    }
    return out;
}

/// A_W = points matching some f in W on I; B_W = points that no f in W
/// misses on every coordinate of I.
[[nodiscard]] inline std::pair<Family, Family> aw_bw(const SizeVector& p, const FunctionSet& w)
{
    if (w.binary_coords != binary_coordinates(p)) {
        throw InputError("function set must be defined on exactly the coordinates with p_i = 2");
    }
    if (w.functions.empty()) throw InputError("function set W must be nonempty");
    std::set<std::vector<std::uint32_t>> distinct;
    for (const auto& f : w.functions) {
        if (f.size() != w.binary_coords.size()) throw InputError("function has wrong arity");
        for (auto v : f) {
            if (v != 1 && v != 2) throw InputError("function values must lie in [2]");
        }
        if (!distinct.insert(f).second) throw InputError("functions in W must be distinct");
    }
    const auto& coords = w.binary_coords;
    auto matches = [&](const Point& x, const std::vector<std::uint32_t>& f) {
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (x[coords[k]] != f[k]) return false;
        }
        return true;
    };
    auto misses_everywhere = [&](const Point& y, const std::vector<std::uint32_t>& f) {
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (y[coords[k]] == f[k]) return false;
        }
        return true;
    };
    Family a = Family::from_predicate(p, [&](const Point& x) {
        return std::any_of(w.functions.begin(), w.functions.end(),
                           [&](const auto& f) { return matches(x, f); });
    });
    Family b = Family::from_predicate(p, [&](const Point& y) {
        return std::none_of(w.functions.begin(), w.functions.end(),
                            [&](const auto& f) { return misses_everywhere(y, f); });
    });
    return {std::move(a), std::move(b)};
}

}  // namespace xintersect
