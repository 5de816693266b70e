// JSON serialisation for reports. Integers that can exceed 64 bits are
// written as decimal strings; coordinates and values are 1-based.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "balls.hpp"
#include "bounds.hpp"
#include "compress.hpp"
#include "core.hpp"
#include "family.hpp"
#include "search.hpp"

namespace xintersect::report {

using nlohmann::json;

inline json coords_json(const CoordList& coords)
{
    json out = json::array();
    for (auto c : coords) out.push_back(c + 1);
    return out;
}

inline json coords_json(CoordMask mask)
{
    json out = json::array();
    for (Coord i = 0; i < 32; ++i) {
        if (mask & (CoordMask{1} << i)) out.push_back(i + 1);
    }
    return out;
}

inline json point_json(const Point& x) { return json(x.values()); }

/// Sorted list of member points in rank order.
inline json family_json(const Family& f)
{
    json out = json::array();
    for (const auto& x : f.members()) out.push_back(point_json(x));
    return out;
}

inline json support_json(const SupportSystem& s) { return json(s.sets()); }

inline json ball_pair_json(const SizeVector& p, const BallPairSpec& spec)
{
    return json{{"center", point_json(spec.center)},
                {"coords", coords_json(spec.coords)},
                {"radius_a", spec.radius_a},
                {"radius_b", spec.radius_b},
                {"size_a", to_string(ball_size(p, spec.coords, spec.radius_a))},
                {"size_b", to_string(ball_size(p, spec.coords, spec.radius_b))}};
}

inline json lemma2_json(const Lemma2Check& check)
{
    json out{{"holds", check.holds}, {"with_equality", check.with_equality}, {"reason", to_string(check.reason)}};
    out["lhs"] = check.lhs ? json(to_string(*check.lhs)) : json(nullptr);
    return out;
}

inline json theorem6_json(const Theorem6Check& check)
{
    return json{{"admissible", check.admissible}, {"lhs", to_string(check.lhs)},
                {"rhs", to_string(check.rhs)},    {"large_coords", check.large_coords},
                {"count_ok", check.count_ok},     {"exact", check.exact}};
}

inline json bound_report_json(const BoundReport& b)
{
    json out{{"theorem1", to_string(b.theorem1)},
             {"trivial_product", to_string(b.trivial)},
             {"lemma2", lemma2_json(b.lemma2)},
             {"regime", to_string(b.regime)},
             {"n_bound_below_r_plus_4", b.n_bound_below_r_plus_4},
             {"permutation", coords_json(b.permutation)},
             {"predicted_structure", b.predicted_structure}};
    out["n_bound"] = b.n_bound ? json(to_string(*b.n_bound)) : json(nullptr);
    out["predicted_product"] = b.predicted_product ? json(to_string(*b.predicted_product)) : json(nullptr);
    return out;
}

/// Monotone witnesses carry support systems (bitmask integers, bit i-1 for
/// coordinate i); member points are added when the domain is small.
inline json support_witness_json(const SizeVector& p, const SupportWitness& w, bool with_points)
{
    auto side = [&](const SupportSystem& s, const BigInt& size) {
        json out{{"supports", support_json(s)},
                 {"size", to_string(size)},
                 {"relevant", coords_json(support_relevant_coordinates(s))}};
        if (auto shape = support_ball_shape(s)) {
            out["ball"] = json{{"coords", coords_json(shape->coords)}, {"radius", shape->radius}};
        } else {
            out["ball"] = nullptr;
        }
        if (with_points) out["points"] = family_json(family_from_support(p, s));
        return out;
    };
    return json{{"a", side(w.a, w.size_a)}, {"b", side(w.b, w.size_b)}};
}

inline json family_witness_json(const FamilyWitness& w)
{
    return json{{"a", json{{"points", family_json(w.a)}, {"size", std::to_string(w.a.size())}}},
                {"b", json{{"points", family_json(w.b)}, {"size", std::to_string(w.b.size())}}}};
}

}  // namespace xintersect::report
