// Communication-matrix view: rows are Alice's inputs, columns Bob's, and an
// entry is 1 when the two vectors are r-intersecting. All-1 rectangles are
// exactly r-cross-intersecting pairs. Everything here works on matrix bits
// only.
#pragma once

#include <cstdint>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "core.hpp"
#include "family.hpp"

namespace xintersect {

struct CommMatrix {
    using Row = boost::dynamic_bitset<std::uint64_t>;

    SizeVector p;
    int r = 0;
    std::vector<Row> rows;

    [[nodiscard]] std::size_t dimension() const noexcept { return rows.size(); }
    [[nodiscard]] bool at(std::size_t x, std::size_t y) const { return rows[x].test(y); }

    [[nodiscard]] std::size_t ones() const
    {
        std::size_t total = 0;
        for (const auto& row : rows) total += row.count();
        return total;
    }
};

[[nodiscard]] inline CommMatrix build_matrix(const SizeVector& p, int r, const Limits& limits = {})
{
    require_r(p.length(), r);
    const BigInt size = domain_size(p);
    if (size > limits.max_comm_domain) {
        throw ResourceLimitError("communication matrix supports |S_p| <= " +
                                 std::to_string(limits.max_comm_domain) + ", got " + size.str());
    }
    std::vector<Point> points;
    for_each_point(p, [&](Rank, const Point& x) { points.push_back(x); });
    const std::size_t dim = points.size();
    CommMatrix m{p, r, std::vector<CommMatrix::Row>(dim, CommMatrix::Row(dim))};
    for (std::size_t x = 0; x < dim; ++x) {
        for (std::size_t y = 0; y < dim; ++y) {
            std::size_t agree = 0;
            for (Coord i = 0; i < p.length(); ++i) {
                if (points[x][i] == points[y][i]) ++agree;
            }
            if (agree >= static_cast<std::size_t>(r)) m.rows[x].set(y);
        }
    }
    return m;
}

struct Rectangle {
    std::vector<std::uint64_t> rows;
    std::vector<std::uint64_t> cols;
    std::uint64_t area = 0;
    std::size_t closed_sets = 0;
};

/// Maximum-area all-1 submatrix. Candidate column sets are the
/// intersections of row supports (plus the full column set); for each the
/// covering rows are recomputed from the matrix.
[[nodiscard]] inline Rectangle max_all_ones_rectangle(const CommMatrix& m, std::size_t max_closed_sets = 5'000'000)
{
    using Row = CommMatrix::Row;
    const std::size_t dim = m.dimension();
    Row everything(dim);
    everything.set();
    std::set<Row> closed{everything};
    for (const auto& row : m.rows) {
        std::vector<Row> fresh;
        for (const auto& c : closed) {
            Row meet = c & row;
            if (!closed.count(meet)) fresh.push_back(std::move(meet));
        }
        closed.insert(fresh.begin(), fresh.end());
        if (closed.size() > max_closed_sets) {
            throw ResourceLimitError("closed column sets exceed " + std::to_string(max_closed_sets));
        }
    }

    Rectangle best;
    best.closed_sets = closed.size();
    for (const auto& cols : closed) {
        std::vector<std::uint64_t> covering;
        for (std::size_t x = 0; x < dim; ++x) {
            if (cols.is_subset_of(m.rows[x])) covering.push_back(x);
        }
        const std::uint64_t area = covering.size() * cols.count();
        if (area > best.area) {
            best.area = area;
            best.rows = std::move(covering);
            best.cols.clear();
            for (auto c = cols.find_first(); c != Row::npos; c = cols.find_next(c)) best.cols.push_back(c);
        }
    }
    return best;
}

/// Plain PBM ("P1"): header, then one line of 0/1 characters per row in
/// rank order.
inline void write_pbm(std::ostream& out, const CommMatrix& m)
{
    const std::size_t dim = m.dimension();
    out << "P1\n" << dim << ' ' << dim << '\n';
    for (const auto& row : m.rows) {
        std::string line(dim, '0');
        for (std::size_t y = 0; y < dim; ++y) {
            if (row.test(y)) line[y] = '1';
        }
        out << line << '\n';
    }
}

}  // namespace xintersect
