#pragma once

#include "domcover/graph.hpp"

#include <optional>
#include <vector>

namespace domcover {

/// Largest order accepted by the exhaustive solvers.
inline constexpr std::size_t oracle_capacity = 26;

enum class DominationMode { plain, total };

/// serial runs the subset search on the calling thread; parallel splits it into
/// prefix tasks across OpenMP threads. Both return identical results.
enum class Execution { serial, parallel };

struct DominationReport {
    DominationMode mode = DominationMode::plain;
    std::size_t size = 0;
    CoverValue cover_min = 0;
    CoverValue cover_max = 0;
    VertexSet witness_min;
    VertexSet witness_max;

    friend bool operator==(const DominationReport&, const DominationReport&) = default;
};

std::size_t gamma(const Graph& g, Execution exec = Execution::parallel);

/// All dominating sets of size gamma(g), sorted lexicographically.
std::vector<VertexSet> enumerate_gamma_sets(const Graph& g, Execution exec = Execution::parallel);

/// Extremes of the cover number over all gamma-sets. Witnesses are the
/// lexicographically smallest sets attaining each extreme.
DominationReport cover_extrema(const Graph& g, Execution exec = Execution::parallel);

/// Throws DomainError when g has an isolated vertex.
std::size_t gamma_total(const Graph& g, Execution exec = Execution::parallel);
std::vector<VertexSet> enumerate_gamma_total_sets(const Graph& g, Execution exec = Execution::parallel);
DominationReport total_cover_extrema(const Graph& g, Execution exec = Execution::parallel);

/// Lexicographically smallest efficient dominating set, if any.
std::optional<VertexSet> has_efficient_dominating_set(const Graph& g);

} // namespace domcover
