#pragma once

// Test-only ground truth: scans all 2^n subsets with plain adjacency checks.
// Shares nothing with the library's pruned subset search.

#include "domcover/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace brute {

using domcover::Graph;
using domcover::Vertex;
using domcover::VertexSet;

enum class Kind { plain, total, efficient };

inline bool accepts(const Graph& g, std::uint32_t mask, Kind kind)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        bool inside = mask >> v & 1;
        int hits = 0;
        for (Vertex w : g.neighbors(v))
            hits += mask >> w & 1;
        switch (kind) {
        case Kind::plain:
            if (!inside && hits == 0)
                return false;
            break;
        case Kind::total:
            if (hits == 0)
                return false;
            break;
        case Kind::efficient:
            if (inside ? hits != 0 : hits != 1)
                return false;
            break;
        }
    }
    return true;
}

struct Result {
    std::size_t size = 0;
    std::vector<VertexSet> sets; // lexicographic
    std::uint64_t cover_min = 0;
    std::uint64_t cover_max = 0;
};

/// Minimum-cardinality accepted sets. For Kind::efficient every accepted set
/// is reported (they all have equal size on any graph).
inline Result solve(const Graph& g, Kind kind)
{
    if (g.order() > 20)
        throw std::invalid_argument("brute force limited to 20 vertices");
    const std::uint32_t total = std::uint32_t{1} << g.order();
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<std::uint32_t> hits;
    for (std::uint32_t m = 0; m < total; ++m) {
        if (!accepts(g, m, kind))
            continue;
        auto k = static_cast<std::size_t>(std::popcount(m));
        if (k < best) {
            best = k;
            hits.clear();
        }
        if (k == best)
            hits.push_back(m);
    }
    Result r;
    if (hits.empty())
        return r;
    r.size = best;
    for (auto m : hits)
        r.sets.push_back(VertexSet::from_mask(m));
    std::sort(r.sets.begin(), r.sets.end());
    r.cover_min = std::numeric_limits<std::uint64_t>::max();
    for (auto& s : r.sets) {
        std::uint64_t c = 0;
        for (Vertex v : s)
            c += g.degree(v);
        r.cover_min = std::min(r.cover_min, c);
        r.cover_max = std::max(r.cover_max, c);
    }
    return r;
}

} // namespace brute
