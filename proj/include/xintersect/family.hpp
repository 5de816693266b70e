// Explicit families A ⊆ S_p stored as dense bit vectors over ranks.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "core.hpp"

namespace xintersect {

/// Enumeration caps. Defaults are desk-scale; the CLI can raise them.
struct Limits {
    std::uint64_t max_explicit_domain = std::uint64_t{1} << 20;
    std::uint64_t max_full_domain = 16;
    std::size_t max_monotone_n = 6;
    std::uint64_t max_comm_domain = 512;
};

inline std::uint64_t explicit_domain_size(const SizeVector& p, const Limits& limits = {})
{
    const BigInt size = domain_size(p);
    if (size > limits.max_explicit_domain) {
        throw ResourceLimitError("domain of size " + size.str() +
                                 " exceeds the explicit family cap " +
                                 std::to_string(limits.max_explicit_domain));
    }
    return static_cast<std::uint64_t>(size);
}

class Family {
public:
    using Bits = boost::dynamic_bitset<std::uint64_t>;

    Family() = default;

    Family(SizeVector domain, Bits bits) : domain_(std::move(domain)), bits_(std::move(bits))
    {
        if (bits_.size() != domain_size_u64(domain_)) {
            throw InputError("bit vector length does not match domain size");
        }
        cardinality_ = bits_.count();
    }

    [[nodiscard]] static Family empty(const SizeVector& p)
    {
        return Family(p, Bits(explicit_domain_size(p)));
    }

    [[nodiscard]] static Family full(const SizeVector& p)
    {
        Bits bits(explicit_domain_size(p));
        bits.set();
        return Family(p, std::move(bits));
    }

    [[nodiscard]] static Family from_points(const SizeVector& p, const std::vector<Point>& points)
    {
        Bits bits(explicit_domain_size(p));
        for (const auto& x : points) bits.set(rank(p, x).value);
        return Family(p, std::move(bits));
    }

    [[nodiscard]] static Family from_ranks(const SizeVector& p, const std::vector<std::uint64_t>& ranks)
    {
        Bits bits(explicit_domain_size(p));
        for (auto r : ranks) {
            if (r >= bits.size()) throw InputError("rank outside domain");
            bits.set(r);
        }
        return Family(p, std::move(bits));
    }

    /// Members are the points satisfying pred(const Point&).
    template <typename Pred>
    [[nodiscard]] static Family from_predicate(const SizeVector& p, Pred&& pred)
    {
        Bits bits(explicit_domain_size(p));
        for_each_point(p, [&](Rank idx, const Point& x) {
            if (pred(x)) bits.set(idx.value);
        });
        return Family(p, std::move(bits));
    }

    [[nodiscard]] const SizeVector& domain() const noexcept { return domain_; }
    [[nodiscard]] const Bits& bits() const noexcept { return bits_; }
    [[nodiscard]] std::size_t size() const noexcept { return cardinality_; }
    [[nodiscard]] bool is_empty() const noexcept { return cardinality_ == 0; }

    [[nodiscard]] bool contains(Rank idx) const { return bits_.test(idx.value); }
    [[nodiscard]] bool contains(const Point& x) const { return bits_.test(rank(domain_, x).value); }

    [[nodiscard]] std::vector<std::uint64_t> ranks() const
    {
        std::vector<std::uint64_t> out;
        out.reserve(cardinality_);
        for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) out.push_back(i);
        return out;
    }

    /// Members in rank order.
    [[nodiscard]] std::vector<Point> members() const
    {
        std::vector<Point> out;
        out.reserve(cardinality_);
        for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
            out.push_back(unrank(domain_, Rank{i}));
        }
        return out;
    }

    [[nodiscard]] bool is_subset_of(const Family& other) const
    {
        require_same_domain(other);
        return bits_.is_subset_of(other.bits_);
    }

    void require_same_domain(const Family& other) const
    {
        if (!(domain_ == other.domain_)) throw InputError("families live in different domains");
    }

    friend bool operator==(const Family& a, const Family& b)
    {
        return a.domain_ == b.domain_ && a.bits_ == b.bits_;
    }

private:
    SizeVector domain_;
    Bits bits_;
    std::size_t cardinality_ = 0;
};

}  // namespace xintersect
