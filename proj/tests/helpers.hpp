#pragma once

#include "domcover/families.hpp"
#include "domcover/graph.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace testing {

using namespace domcover;

inline Graph path(std::int64_t n) { return generate({Family::path, {{"n", n}}, 0}); }
inline Graph cycle(std::int64_t n) { return generate({Family::cycle, {{"n", n}}, 0}); }
inline Graph complete(std::int64_t n) { return generate({Family::complete, {{"n", n}}, 0}); }
inline Graph star(std::int64_t leaves) { return generate({Family::star, {{"n", leaves}}, 0}); }
inline Graph corona(std::int64_t p) { return generate({Family::corona, {{"p", p}}, 0}); }
inline Graph barbell(std::int64_t n) { return generate({Family::barbell, {{"n", n}}, 0}); }
inline Graph book(std::int64_t m) { return generate({Family::book, {{"m", m}}, 0}); }
inline Graph edgeless(std::size_t n) { return Graph(n, {}); }

/// Two cliques K_a and K_b sharing vertex a-1.
inline Graph glued_cliques(std::size_t a, std::size_t b)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = u + 1; v < a; ++v)
            edges.emplace_back(u, v);
    std::vector<Vertex> second{static_cast<Vertex>(a - 1)};
    for (std::size_t i = 0; i + 1 < b; ++i)
        second.push_back(static_cast<Vertex>(a + i));
    for (std::size_t i = 0; i < second.size(); ++i)
        for (std::size_t j = i + 1; j < second.size(); ++j)
            edges.emplace_back(second[i], second[j]);
    return Graph(a + b - 1, edges);
}

} // namespace testing
