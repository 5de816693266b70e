// Mixed-radix domains S_p = [p_1] x ... x [p_n], points, ranks and the
// r-intersecting predicate.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace xintersect {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed input: out-of-range coordinate, mismatched domains, bad r.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An instance exceeds one of the configured enumeration caps.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Coordinate indices are 0-based internally; coordinate values are 1-based.
using Coord = std::size_t;
using CoordList = std::vector<Coord>;

/// The size vector p. Every entry is >= 2 (normalized form).
class SizeVector {
public:
    SizeVector() = default;

    explicit SizeVector(std::vector<std::uint32_t> entries) : entries_(std::move(entries))
    {
        if (entries_.empty()) {
            throw InputError("size vector must have at least one coordinate");
        }
        for (auto v : entries_) {
            if (v < 2) {
                throw InputError("size vector entries must be >= 2 (normalize first)");
            }
        }
    }

    [[nodiscard]] std::size_t length() const noexcept { return entries_.size(); }
    [[nodiscard]] std::uint32_t operator[](Coord i) const { return entries_[i]; }
    [[nodiscard]] const std::vector<std::uint32_t>& entries() const noexcept { return entries_; }

    /// k = min_i p_i.
    [[nodiscard]] std::uint32_t min_entry() const
    {
        return *std::min_element(entries_.begin(), entries_.end());
    }

    /// Coordinate indices sorted by ascending p_i, ties by index.
    [[nodiscard]] CoordList ascending_order() const
    {
        CoordList order(entries_.size());
        for (Coord i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [this](Coord a, Coord b) { return entries_[a] < entries_[b]; });
        return order;
    }

    friend bool operator==(const SizeVector&, const SizeVector&) = default;

private:
    std::vector<std::uint32_t> entries_;
};

/// A vector x in S_p. Values are 1-based.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<std::uint32_t> values) : values_(std::move(values)) {}
    Point(std::initializer_list<std::uint32_t> values) : values_(values) {}

    [[nodiscard]] std::size_t length() const noexcept { return values_.size(); }
    [[nodiscard]] std::uint32_t operator[](Coord i) const { return values_[i]; }
    [[nodiscard]] const std::vector<std::uint32_t>& values() const noexcept { return values_; }

    [[nodiscard]] Point with(Coord i, std::uint32_t value) const
    {
        Point copy = *this;
        copy.values_[i] = value;
        return copy;
    }

    void set(Coord i, std::uint32_t value) { values_[i] = value; }

    [[nodiscard]] bool valid_for(const SizeVector& p) const
    {
        if (values_.size() != p.length()) return false;
        for (Coord i = 0; i < values_.size(); ++i) {
            if (values_[i] < 1 || values_[i] > p[i]) return false;
        }
        return true;
    }

    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;

private:
    std::vector<std::uint32_t> values_;
};

/// Index of a point in the canonical mixed-radix enumeration of S_p.
struct Rank {
    std::uint64_t value = 0;
    friend bool operator==(Rank, Rank) = default;
    friend auto operator<=>(Rank, Rank) = default;
};

[[nodiscard]] inline BigInt domain_size(const SizeVector& p)
{
    BigInt size = 1;
    for (auto v : p.entries()) size *= v;
    return size;
}

/// Domain size as a machine word; throws when S_p has more than 2^63 points.
[[nodiscard]] inline std::uint64_t domain_size_u64(const SizeVector& p)
{
    const BigInt size = domain_size(p);
    if (size > BigInt(std::numeric_limits<std::int64_t>::max())) {
        throw ResourceLimitError("domain too large for explicit ranks");
    }
    return static_cast<std::uint64_t>(size);
}

inline void require_point(const SizeVector& p, const Point& x)
{
    if (x.length() != p.length()) {
        throw InputError("point length " + std::to_string(x.length()) +
                         " does not match size vector length " + std::to_string(p.length()));
    }
    for (Coord i = 0; i < x.length(); ++i) {
        if (x[i] < 1 || x[i] > p[i]) {
            throw InputError("coordinate " + std::to_string(i + 1) + " value " +
                             std::to_string(x[i]) + " outside [1," + std::to_string(p[i]) + "]");
        }
    }
}

// rank(x) = sum_i (x_i - 1) * prod_{j>i} p_j
[[nodiscard]] inline Rank rank(const SizeVector& p, const Point& x)
{
    require_point(p, x);
    (void)domain_size_u64(p);
    std::uint64_t value = 0;
    for (Coord i = 0; i < x.length(); ++i) {
        value = value * p[i] + (x[i] - 1);
    }
    return Rank{value};
}

[[nodiscard]] inline Point unrank(const SizeVector& p, Rank index)
{
    if (index.value >= domain_size_u64(p)) {
        throw InputError("rank " + std::to_string(index.value) + " outside domain");
    }
    std::vector<std::uint32_t> values(p.length());
    std::uint64_t rest = index.value;
    for (Coord i = p.length(); i-- > 0;) {
        values[i] = static_cast<std::uint32_t>(rest % p[i]) + 1;
        rest /= p[i];
    }
    return Point(std::move(values));
}

[[nodiscard]] inline std::size_t hamming_distance(const Point& x, const Point& y)
{
    if (x.length() != y.length()) {
        throw InputError("hamming distance of points with different lengths");
    }
    std::size_t d = 0;
    for (Coord i = 0; i < x.length(); ++i) {
        if (x[i] != y[i]) ++d;
    }
    return d;
}

inline void require_r(std::size_t n, long long r)
{
    if (r < 0 || r > static_cast<long long>(n)) {
        throw InputError("r = " + std::to_string(r) + " outside [0," + std::to_string(n) + "]");
    }
}

/// d(x, y) <= n - r.
[[nodiscard]] inline bool r_intersecting(const Point& x, const Point& y, long long r)
{
    const std::size_t d = hamming_distance(x, y);
    require_r(x.length(), r);
    return static_cast<long long>(d) <= static_cast<long long>(x.length()) - r;
}

struct Normalized {
    SizeVector p;
    int r = 0;
    /// Original (0-based) index of each surviving coordinate.
    CoordList kept;
};

/// Drops every coordinate with p_i = 1. Each such coordinate is a forced
/// agreement, so r drops by one per removed coordinate (clamped at 0).
[[nodiscard]] inline Normalized normalize(const std::vector<std::uint32_t>& raw, int r)
{
    if (r < 1) throw InputError("r must be >= 1");
    if (r > static_cast<int>(raw.size())) {
        throw InputError("r = " + std::to_string(r) + " exceeds n = " + std::to_string(raw.size()));
    }
    std::vector<std::uint32_t> entries;
    CoordList kept;
    int removed = 0;
    for (Coord i = 0; i < raw.size(); ++i) {
        if (raw[i] < 1) throw InputError("size vector entries must be positive");
        if (raw[i] == 1) {
            ++removed;
        } else {
            entries.push_back(raw[i]);
            kept.push_back(i);
        }
    }
    if (entries.empty()) throw InputError("size vector is empty after removing unit coordinates");
    return Normalized{SizeVector(std::move(entries)), std::max(0, r - removed), std::move(kept)};
}

/// Visits every point of S_p in rank order.
template <typename Fn>
void for_each_point(const SizeVector& p, Fn&& fn)
{
    const std::uint64_t size = domain_size_u64(p);
    Point x(std::vector<std::uint32_t>(p.length(), 1));
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        fn(Rank{idx}, static_cast<const Point&>(x));
        // odometer increment, last coordinate fastest
        for (Coord i = p.length(); i-- > 0;) {
            if (x[i] < p[i]) {
                x.set(i, x[i] + 1);
                break;
            }
            x.set(i, 1);
        }
    }
}

[[nodiscard]] inline Point all_ones(const SizeVector& p)
{
    return Point(std::vector<std::uint32_t>(p.length(), 1));
}

[[nodiscard]] inline std::string to_string(const BigInt& v) { return v.str(); }

[[nodiscard]] inline std::string to_string(const Rational& v)
{
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace xintersect
