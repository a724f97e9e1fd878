#pragma once

#include "domcover/graph.hpp"
#include "domcover/oracle.hpp"
#include "domcover/solution.hpp"

#include <optional>
#include <vector>

namespace domcover {

class RootedTree {
public:
    const Graph& graph() const noexcept { return graph_; }
    Vertex root() const noexcept { return root_; }
    std::optional<Vertex> parent(Vertex v) const noexcept
    {
        return v == root_ ? std::nullopt : std::optional<Vertex>(parent_[v]);
    }
    /// Children precede their parent.
    const std::vector<Vertex>& post_order() const noexcept { return post_order_; }
    std::vector<Vertex> children(Vertex v) const;

private:
    friend RootedTree root_tree(Graph g, Vertex root);

    Graph graph_;
    Vertex root_ = 0;
    std::vector<Vertex> parent_;
    std::vector<Vertex> post_order_;
};

/// Throws DomainError unless g is a tree and root < n.
RootedTree root_tree(Graph g, Vertex root = 0);

/// One state of the tree recurrence: the minimum size of a partial solution in
/// that state and, among those of minimum size, the extreme cover numbers.
/// Covers count degrees in the whole tree.
struct DPEntry {
    static constexpr std::size_t infeasible = static_cast<std::size_t>(-1);

    std::size_t size = infeasible;
    CoverValue cover_min = 0;
    CoverValue cover_max = 0;

    bool feasible() const noexcept { return size != infeasible; }
    friend bool operator==(const DPEntry&, const DPEntry&) = default;
};

/// Per-vertex states over the subtree T_v:
///   in            v is selected;
///   out_dominated v is not selected and has a selected child;
///   out_free      v is not selected, no child is selected, and every other
///                 vertex of T_v is dominated, so the parent must be selected.
struct TreeDPState {
    DPEntry in;
    DPEntry out_dominated;
    DPEntry out_free;
};

std::vector<TreeDPState> tree_dp_table(const RootedTree& tree);

/// Minimum dominating set of the tree with extreme cover number. O(n).
Solution solve_tree(const RootedTree& tree, Objective objective);

/// Both objectives folded into one report (mode plain).
DominationReport solve_tree_report(const RootedTree& tree);

} // namespace domcover
