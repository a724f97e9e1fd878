#pragma once

#include "domcover/graph.hpp"
#include "domcover/oracle.hpp"
#include "domcover/solution.hpp"

#include <vector>

namespace domcover {

struct CutTreeNode {
    enum class Kind { block, cut };

    Kind kind = Kind::block;
    /// Block: all vertices of the block. Cut: the single cut vertex.
    VertexSet members;
    /// Block only: members that are not cut vertices.
    VertexSet noncut;
};

/// Bipartite tree of blocks and cut vertices of a connected block graph,
/// rooted at a block. Block nodes come first (in lexicographic order of their
/// vertex sets), then cut nodes in ascending vertex id.
class CutTree {
public:
    std::size_t node_count() const noexcept { return nodes_.size(); }
    std::size_t block_count() const noexcept { return block_count_; }
    const CutTreeNode& node(std::size_t i) const noexcept { return nodes_[i]; }
    const std::vector<std::size_t>& neighbors(std::size_t i) const noexcept { return adjacency_[i]; }
    std::size_t root() const noexcept { return 0; }
    /// The root's parent is itself.
    std::size_t parent(std::size_t i) const noexcept { return parent_[i]; }
    const std::vector<std::size_t>& children(std::size_t i) const noexcept { return children_[i]; }
    const std::vector<std::size_t>& post_order() const noexcept { return post_order_; }

private:
    friend CutTree build_cut_tree(const Graph& g);

    std::size_t block_count_ = 0;
    std::vector<CutTreeNode> nodes_;
    std::vector<std::vector<std::size_t>> adjacency_;
    std::vector<std::size_t> parent_;
    std::vector<std::vector<std::size_t>> children_;
    std::vector<std::size_t> post_order_;
};

/// Throws DomainError when g is disconnected or some block is not a clique.
CutTree build_cut_tree(const Graph& g);

/// Minimum dominating set of a block graph with extreme cover number, by a
/// dynamic program over the cut-tree. Linear in n + m.
Solution solve_block_graph(const Graph& g, Objective objective);

DominationReport solve_block_graph_report(const Graph& g);

} // namespace domcover
