#pragma once

#include "domcover/graph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace domcover {

enum class Family { path, cycle, star, complete, corona, barbell, book, random_tree, random_block_graph, random_gnp };

std::string_view to_string(Family f) noexcept;
/// Throws DomainError for unknown names.
Family parse_family(std::string_view name);

/// Parameters per family (all integers):
///   path n>=1 | cycle n>=3 | star n>=1 (leaves, K_{1,n}) | complete n>=1
///   corona p>=2 (K_p plus one pendant per clique vertex, 2p vertices)
///   barbell n>=3 (two K_n joined by one bridge)
///   book m>=1 (hubs 0,1 adjacent; page i adds a_i, b_i with 0-a_i-b_i-1)
///   random_tree n>=1 | random_block_graph n>=1, max_clique>=2 (default 4)
///   random_gnp n>=1, p_num, p_den (edge probability p_num / p_den)
struct FamilySpec {
    Family family = Family::path;
    std::map<std::string, std::int64_t> params;
    std::uint64_t seed = 0;
};

Graph generate(const FamilySpec& spec);

/// Uniform integer in [0, bound) from a 64-bit Mersenne Twister by rejection,
/// identical on every platform for a given seed.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

Graph random_tree(std::size_t n, std::uint64_t seed);
Graph random_block_graph(std::size_t n, std::size_t max_clique, std::uint64_t seed);
Graph random_gnp(std::size_t n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed);

/// Connected graph with no isolated vertices: reseeds gnp(seed), gnp(seed+1), ...
Graph random_connected_gnp(std::size_t n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed);

/// Every connected graph on n vertices up to isomorphism, possibly with
/// repeats: labelled graphs whose degrees are non-increasing in vertex id.
std::vector<Graph> connected_graphs(std::size_t n);

/// Every rooted tree on n vertices (level-sequence enumeration); covers every
/// free tree at least once.
std::vector<Graph> rooted_trees(std::size_t n);

/// Every spider on n vertices: centre 0 with legs given by a partition of n-1.
std::vector<Graph> spiders(std::size_t n);

struct BoundCheck {
    std::string name;
    bool applicable = false;
    /// lhs <= rhs is the claim: (bound, observed minimum) for lower bounds,
    /// (observed maximum, bound) for upper bounds.
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
    bool tight = false;
    /// gamma-sets on which the inequality fails.
    std::size_t violations = 0;
};

struct BoundAudit {
    std::size_t order = 0;
    std::size_t gamma = 0;
    CoverValue cover_min = 0;
    CoverValue cover_max = 0;
    std::size_t gamma_set_count = 0;
    bool unique_gamma_set = false;
    bool p4_free = false;
    bool path = false;
    std::vector<BoundCheck> checks;

    const BoundCheck& check(std::string_view name) const;
};

/// Evaluates every bound on every gamma-set (exhaustive). Requires g connected
/// and within the oracle capacity; with an isolated vertex no bound applies.
BoundAudit audit_bounds(const Graph& g);

} // namespace domcover
