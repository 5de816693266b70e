// Closed-form upper bounds and regime classification for maximal
// r-cross-intersecting pairs.
//
// Exact quantities use cpp_int / cpp_rational. Real powers are evaluated in
// 50-digit binary floating point, which keeps relative error far below 1e-12
// for every desk-scale input; comparisons of rational powers are decided
// exactly by raising both sides to a common integer exponent whenever the
// resulting integers stay small enough.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "core.hpp"

namespace xintersect {

using Real = boost::multiprecision::cpp_bin_float_50;

[[nodiscard]] inline std::vector<std::uint32_t> sorted_entries(const SizeVector& p)
{
    auto v = p.entries();
    std::sort(v.begin(), v.end());
    return v;
}

/// |S_p|^2 / k^2 with k = min_i p_i.
[[nodiscard]] inline Rational theorem1_bound(const SizeVector& p)
{
    const BigInt size = domain_size(p);
    const BigInt k = p.min_entry();
    return Rational(size * size, k * k);
}

/// prod_{i > r} p_i^2 over the ascending order: |C|^2 for C the family that
/// fixes the r coordinates with the smallest p_i.
[[nodiscard]] inline BigInt trivial_product(const SizeVector& p, int r)
{
    require_r(p.length(), r);
    const auto sorted = sorted_entries(p);
    BigInt out = 1;
    for (std::size_t i = static_cast<std::size_t>(r); i < sorted.size(); ++i) {
        out *= BigInt(sorted[i]) * sorted[i];
    }
    return out;
}

enum class Lemma2Reason { Applies, RNotBelowN, MinBelowThree, InequalityFails };

struct Lemma2Check {
    bool holds = false;
    bool with_equality = false;
    Lemma2Reason reason = Lemma2Reason::InequalityFails;
    /// 2/p_{r+1} + sum_{i <= r} 1/p_i, when defined.
    std::optional<Rational> lhs;
};

inline std::string to_string(Lemma2Reason reason)
{
    switch (reason) {
    case Lemma2Reason::Applies: return "applies";
    case Lemma2Reason::RNotBelowN: return "r_not_below_n";
    case Lemma2Reason::MinBelowThree: return "min_p_below_3";
    case Lemma2Reason::InequalityFails: return "inequality_fails";
    }
    return "unknown";
}

/// 2/p_{r+1} + sum_{i=1}^r 1/p_i <= 1 over the ascending order, with 1 <= r < n
/// and p_1 >= 3.
[[nodiscard]] inline Lemma2Check lemma2_applies(const SizeVector& p, int r)
{
    require_r(p.length(), r);
    Lemma2Check out;
    const auto sorted = sorted_entries(p);
    if (r < 1 || static_cast<std::size_t>(r) >= sorted.size()) {
        out.reason = Lemma2Reason::RNotBelowN;
        return out;
    }
    Rational lhs(2, sorted[static_cast<std::size_t>(r)]);
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) lhs += Rational(1, sorted[i]);
    out.lhs = lhs;
    if (sorted.front() < 3) {
        out.reason = Lemma2Reason::MinBelowThree;
        return out;
    }
    out.holds = lhs <= 1;
    out.with_equality = lhs == 1;
    out.reason = out.holds ? Lemma2Reason::Applies : Lemma2Reason::InequalityFails;
    return out;
}

/// (p_i - 1)^(1 - 2/p_i).
[[nodiscard]] inline Real entropy_factor(std::uint32_t pi)
{
    if (pi <= 2) return Real(1);
    return boost::multiprecision::pow(Real(pi - 1), Real(pi - 2) / Real(pi));
}

/// |S_p| / prod_{i in T} (p_i - 1)^(1 - 2/p_i).
[[nodiscard]] inline Real theorem5_bound(const SizeVector& p, const CoordList& coords)
{
    Real denom = 1;
    for (auto c : coords) {
        if (c >= p.length()) throw InputError("coordinate outside [1,n]");
        denom *= entropy_factor(p[c]);
    }
    return Real(domain_size(p)) / denom;
}

struct Theorem6Check {
    bool admissible = false;
    /// prod_{i=1}^r p_i over the ascending order.
    BigInt lhs;
    Real rhs;
    /// |{i in T : p_i > 2}| and whether it is < 5r.
    std::size_t large_coords = 0;
    bool count_ok = false;
    /// True when the comparison was decided in exact integer arithmetic.
    bool exact = false;
};

/// prod_{i=1}^r p_i >= prod_{i in T} (p_i - 1)^(1 - 2/p_i).
[[nodiscard]] inline Theorem6Check theorem6_filter(const SizeVector& p, int r, const CoordList& coords)
{
    require_r(p.length(), r);
    Theorem6Check out;
    const auto sorted = sorted_entries(p);
    out.lhs = 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) out.lhs *= sorted[i];

    std::uint64_t common = 1;
    out.rhs = 1;
    for (auto c : coords) {
        if (c >= p.length()) throw InputError("coordinate outside [1,n]");
        out.rhs *= entropy_factor(p[c]);
        if (p[c] > 2) {
            ++out.large_coords;
            if (common <= 4096) common = std::lcm(common, std::uint64_t{p[c]});
        }
    }
    out.count_ok = out.large_coords < 5 * static_cast<std::size_t>(std::max(r, 0));

    // lhs^L >= prod (p_i - 1)^((p_i - 2) L / p_i), all integers. Keep the
    // exponent modest so the powers stay cheap.
    if (common <= 4096) {
        using boost::multiprecision::pow;
        const BigInt left = pow(out.lhs, static_cast<unsigned>(common));
        BigInt right = 1;
        for (auto c : coords) {
            if (p[c] <= 2) continue;
            right *= pow(BigInt(p[c] - 1), static_cast<unsigned>((p[c] - 2) * (common / p[c])));
        }
        out.admissible = left >= right;
        out.exact = true;
    } else {
        out.admissible = Real(out.lhs) >= out.rhs;
    }
    return out;
}

enum class Regime { P1GtRPlus1, P1EqRPlus1Gt4, SmallP1BallsApply, Unclassified };

inline std::string to_string(Regime regime)
{
    switch (regime) {
    case Regime::P1GtRPlus1: return "P1_GT_R_PLUS_1";
    case Regime::P1EqRPlus1Gt4: return "P1_EQ_R_PLUS_1_GT_4";
    case Regime::SmallP1BallsApply: return "SMALL_P1_BALLS_APPLY";
    case Regime::Unclassified: return "UNCLASSIFIED";
    }
    return "UNKNOWN";
}

struct BoundReport {
    Rational theorem1;
    BigInt trivial;
    Lemma2Check lemma2;
    Regime regime = Regime::Unclassified;
    /// r log p_1 / ((1 - 2/p_1) log(p_1 - 1)); defined for p_1 >= 3.
    std::optional<Real> n_bound;
    /// n_bound < r + 4, i.e. at most r + 3 relevant coordinates.
    bool n_bound_below_r_plus_4 = false;
    /// Ascending order of coordinates (original 0-based indices).
    CoordList permutation;
    /// Predicted maximum product where the regime determines it.
    std::optional<BigInt> predicted_product;
    std::string predicted_structure;
};

[[nodiscard]] inline std::optional<Real> n_bound(std::uint32_t p1, int r)
{
    if (p1 < 3) return std::nullopt;
    using boost::multiprecision::log;
    const Real p(p1);
    return Real(r) * log(p) / ((1 - Real(2) / p) * log(p - 1));
}

[[nodiscard]] inline BoundReport theorem7_classify(const SizeVector& p, int r)
{
    require_r(p.length(), r);
    BoundReport out;
    out.theorem1 = theorem1_bound(p);
    out.trivial = trivial_product(p, r);
    out.lemma2 = lemma2_applies(p, r);
    out.permutation = p.ascending_order();

    const std::uint32_t p1 = p.min_entry();
    const auto rr = static_cast<std::uint32_t>(std::max(r, 0));
    out.n_bound = n_bound(p1, r);
    out.n_bound_below_r_plus_4 = out.n_bound && *out.n_bound < Real(r + 4);

    if (r >= 1 && p1 > rr + 1) {
        out.regime = Regime::P1GtRPlus1;
        out.predicted_product = out.trivial;
        out.predicted_structure = "A = B obtained by fixing r coordinates";
    } else if (r >= 1 && p1 == rr + 1 && p1 > 4) {
        out.regime = Regime::P1EqRPlus1Gt4;
        out.predicted_product = out.trivial;
        out.predicted_structure =
            "A = B obtained by fixing r coordinates, or a radius-1 ball in r+2 coordinates with p_i = r+1";
    } else if (r >= 1 && out.n_bound_below_r_plus_4) {
        out.regime = Regime::SmallP1BallsApply;
        out.predicted_structure = "A and B are balls in at most r+3 coordinates";
    }
    return out;
}

[[nodiscard]] inline std::string to_string(const Real& v, int digits = 17)
{
    return v.str(digits);
}

}  // namespace xintersect
