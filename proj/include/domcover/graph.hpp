#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domcover {

using Vertex = std::uint32_t;
/// Sum of vertex degrees. Bounded by n(n-1) for a simple graph.
using CoverValue = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Precondition violation (out-of-range vertex, wrong graph class, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Instance too large for exhaustive search.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids);
    explicit VertexSet(std::vector<Vertex> ids);

    static VertexSet from_mask(std::uint64_t mask);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const noexcept;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    Vertex operator[](std::size_t i) const noexcept { return members_[i]; }
    const std::vector<Vertex>& members() const noexcept { return members_; }

    VertexSet unite(const VertexSet& other) const;
    VertexSet without(Vertex v) const;

    /// Requires every member < 64.
    std::uint64_t to_mask() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet& a, const VertexSet& b) { return a.members_ <=> b.members_; }

private:
    std::vector<Vertex> members_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

/// Simple undirected graph on vertices 0..n-1, stored as sorted CSR adjacency.
class Graph {
public:
    Graph() = default;
    /// Throws DomainError on self-loops, duplicate edges or ids >= n.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges);

    std::size_t order() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t size() const noexcept { return adjacency_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Vertex u, Vertex v) const noexcept;

    std::size_t min_degree() const noexcept;
    std::size_t max_degree() const noexcept;
    bool has_isolated_vertex() const noexcept;
    bool is_connected() const;

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
};

Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

/// Sum of degrees over `a`.
CoverValue cover_number(const Graph& g, const VertexSet& a);

bool is_dominating(const Graph& g, const VertexSet& d);
bool is_total_dominating(const Graph& g, const VertexSet& d);
bool is_efficient_dominating(const Graph& g, const VertexSet& d);
bool is_independent(const Graph& g, const VertexSet& d);

/// N[v] \ N[D - {v}]. Requires v in D.
VertexSet private_neighbors(const Graph& g, Vertex v, const VertexSet& d);

struct BlockDecomposition {
    std::vector<VertexSet> blocks; // sorted lexicographically
    VertexSet cut_vertices;
    std::vector<std::size_t> block_edge_counts; // parallel to blocks
};

/// Biconnected components by iterative low-link DFS. Requires g connected.
BlockDecomposition blocks_and_cut_vertices(const Graph& g);

bool is_block_graph(const Graph& g);
bool is_p4_free(const Graph& g);
bool is_tree(const Graph& g);
bool is_path(const Graph& g);

} // namespace domcover
