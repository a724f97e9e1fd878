#include "domcover/block_dp.hpp"

#include "dp_key.hpp"

#include <array>
#include <optional>
#include <sstream>

namespace domcover {

using detail::better;
using detail::best_of;
using detail::Key;

CutTree build_cut_tree(const Graph& g)
{
    auto bd = blocks_and_cut_vertices(g);
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        std::size_t k = bd.blocks[i].size();
        if (bd.block_edge_counts[i] != k * (k - 1) / 2) {
            std::ostringstream os;
            os << "not a block graph: block " << bd.blocks[i] << " is not complete";
            throw DomainError(os.str());
        }
    }

    CutTree t;
    const std::size_t nb = bd.blocks.size();
    t.block_count_ = nb;
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> cut_node(g.order(), none);
    t.nodes_.reserve(nb + bd.cut_vertices.size());
    for (auto& block : bd.blocks) {
        std::vector<Vertex> noncut;
        for (Vertex v : block)
            if (!bd.cut_vertices.contains(v))
                noncut.push_back(v);
        t.nodes_.push_back({CutTreeNode::Kind::block, block, VertexSet(std::move(noncut))});
    }
    for (Vertex c : bd.cut_vertices) {
        cut_node[c] = t.nodes_.size();
        t.nodes_.push_back({CutTreeNode::Kind::cut, VertexSet{c}, {}});
    }

    t.adjacency_.assign(t.nodes_.size(), {});
    for (std::size_t b = 0; b < nb; ++b)
        for (Vertex v : t.nodes_[b].members)
            if (cut_node[v] != none) {
                t.adjacency_[b].push_back(cut_node[v]);
                t.adjacency_[cut_node[v]].push_back(b);
            }

    t.parent_.assign(t.nodes_.size(), 0);
    t.children_.assign(t.nodes_.size(), {});
    std::vector<std::size_t> order{0};
    for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t x = order[i];
        for (std::size_t y : t.adjacency_[x])
            if (x == 0 || y != t.parent_[x]) {
                t.parent_[y] = x;
                t.children_[x].push_back(y);
                order.push_back(y);
            }
    }
    t.post_order_.assign(order.rbegin(), order.rend());
    return t;
}

namespace {

// Cut node states: the cut vertex is selected; unselected but dominated by a
// selected vertex in a child block; unselected and undominated below.
enum CutState : std::size_t { selected = 0, dominated = 1, free_cut = 2 };

// Block node states, relative to the parent cut vertex p (absent at the root):
//   hit       some vertex of the block other than p is selected, so the whole
//             block (and p) is dominated;
//   saturated nothing in the block other than p is selected, yet the subtree is
//             dominated without p (needs no non-cut members);
//   pending   nothing in the block other than p is selected; correct only when
//             p is selected.
enum BlockState : std::size_t { hit = 0, saturated = 1, pending = 2 };

using Row = std::array<Key, 3>;

std::size_t best3(const Row& r, Objective o)
{
    const Key keys[] = {r[0], r[1], r[2]};
    return best_of(keys, o);
}

std::size_t best_first_two(const Row& r, Objective o)
{
    const Key keys[] = {r[0], r[1]};
    return best_of(keys, o);
}

std::size_t best_last_two(const Row& r, Objective o)
{
    const Key keys[] = {r[1], r[2]};
    return 1 + best_of(keys, o);
}

struct Solver {
    const Graph& g;
    const CutTree& t;
    Objective o;
    std::vector<Row> rows;

    bool is_block(std::size_t x) const { return x < t.block_count(); }

    // Children take their preferred state (pick(row)); if none lands on state 0,
    // the child with the cheapest switch to state 0 (smaller index on ties) is
    // forced. Returns the sum and, optionally, the forced child.
    template <class Pick>
    std::pair<Key, std::optional<std::size_t>> at_least_one_first(std::size_t x, Pick pick) const
    {
        const auto& kids = t.children(x);
        if (kids.empty())
            return {Key::none(), std::nullopt};
        Key sum = Key::zero();
        bool any_first = false;
        std::optional<std::size_t> forced;
        Key forced_delta;
        for (std::size_t c : kids) {
            const Row& r = rows[c];
            std::size_t s = pick(r);
            sum = sum + r[s];
            if (s == 0) {
                any_first = true;
            } else if (r[0].feasible()) {
                Key delta = r[0] - r[s];
                if (!forced || better(delta, forced_delta, o)) {
                    forced = c;
                    forced_delta = delta;
                }
            }
        }
        if (any_first)
            return {sum, std::nullopt};
        if (!forced)
            return {Key::none(), std::nullopt};
        return {sum + forced_delta, forced};
    }

    Key noncut_option(std::size_t b) const
    {
        const auto& node = t.node(b);
        if (node.noncut.empty())
            return Key::none();
        Key sum{1, static_cast<std::int64_t>(g.degree(node.noncut[0]))};
        for (std::size_t c : t.children(b))
            sum = sum + rows[c][best3(rows[c], o)];
        return sum;
    }

    Key cut_option(std::size_t b) const
    {
        return at_least_one_first(b, [&](const Row& r) { return best3(r, o); }).first;
    }

    void forward()
    {
        rows.assign(t.node_count(), Row{});
        for (std::size_t x : t.post_order()) {
            const auto& kids = t.children(x);
            if (is_block(x)) {
                Key a = noncut_option(x);
                Key b = cut_option(x);
                Key sat = Key::none();
                if (t.node(x).noncut.empty()) {
                    sat = Key::zero();
                    for (std::size_t c : kids)
                        sat = sat + rows[c][dominated];
                }
                Key pend = Key::zero();
                for (std::size_t c : kids)
                    pend = pend + rows[c][best_last_two(rows[c], o)];
                rows[x] = {better(b, a, o) ? b : a, sat, pend};
            } else {
                Vertex v = t.node(x).members[0];
                Key sel{1, static_cast<std::int64_t>(g.degree(v))};
                Key fr = Key::zero();
                for (std::size_t c : kids) {
                    sel = sel + rows[c][best3(rows[c], o)];
                    fr = fr + rows[c][saturated];
                }
                Key dom = at_least_one_first(x, [&](const Row& r) { return best_first_two(r, o); }).first;
                rows[x] = {sel, dom, fr};
            }
        }
    }

    Solution trace() const
    {
        std::vector<std::size_t> state(t.node_count(), 0);
        std::vector<Vertex> chosen;
        state[t.root()] = best_first_two(rows[t.root()], o);

        const auto& post = t.post_order();
        for (auto it = post.rbegin(); it != post.rend(); ++it) {
            std::size_t x = *it;
            const auto& kids = t.children(x);
            if (is_block(x)) {
                switch (state[x]) {
                case hit: {
                    Key a = noncut_option(x);
                    Key b = cut_option(x);
                    if (!better(b, a, o)) {
                        chosen.push_back(t.node(x).noncut[0]);
                        for (std::size_t c : kids)
                            state[c] = best3(rows[c], o);
                    } else {
                        for (std::size_t c : kids)
                            state[c] = best3(rows[c], o);
                        if (auto f = at_least_one_first(x, [&](const Row& r) { return best3(r, o); }).second)
                            state[*f] = selected;
                    }
                    break;
                }
                case saturated:
                    for (std::size_t c : kids)
                        state[c] = dominated;
                    break;
                case pending:
                    for (std::size_t c : kids)
                        state[c] = best_last_two(rows[c], o);
                    break;
                }
            } else {
                switch (state[x]) {
                case selected:
                    chosen.push_back(t.node(x).members[0]);
                    for (std::size_t c : kids)
                        state[c] = best3(rows[c], o);
                    break;
                case dominated:
                    for (std::size_t c : kids)
                        state[c] = best_first_two(rows[c], o);
                    if (auto f = at_least_one_first(x, [&](const Row& r) { return best_first_two(r, o); }).second)
                        state[*f] = hit;
                    break;
                case free_cut:
                    for (std::size_t c : kids)
                        state[c] = saturated;
                    break;
                }
            }
        }

        Key answer = rows[t.root()][state[t.root()]];
        Solution s;
        s.objective = o;
        s.size = static_cast<std::size_t>(answer.size);
        s.cover = static_cast<CoverValue>(answer.cover);
        s.witness = VertexSet(std::move(chosen));
        return s;
    }
};

} // namespace

Solution solve_block_graph(const Graph& g, Objective objective)
{
    if (g.order() == 0)
        return Solution{objective, 0, 0, {}};
    CutTree t = build_cut_tree(g);
    Solver s{g, t, objective, {}};
    s.forward();
    return s.trace();
}

DominationReport solve_block_graph_report(const Graph& g)
{
    auto lo = solve_block_graph(g, Objective::min);
    auto hi = solve_block_graph(g, Objective::max);
    DominationReport r;
    r.size = lo.size;
    r.cover_min = lo.cover;
    r.cover_max = hi.cover;
    r.witness_min = std::move(lo.witness);
    r.witness_max = std::move(hi.witness);
    return r;
}

} // namespace domcover
