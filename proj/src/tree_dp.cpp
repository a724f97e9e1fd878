#include "domcover/tree_dp.hpp"

#include "dp_key.hpp"

#include <algorithm>
#include <array>

namespace domcover {

using detail::better;
using detail::best_of;
using detail::Key;

std::string_view to_string(Objective o) noexcept { return o == Objective::min ? "min" : "max"; }

RootedTree root_tree(Graph g, Vertex root)
{
    const std::size_t n = g.order();
    if (root >= n)
        throw DomainError("root " + std::to_string(root) + " out of range for graph of order " + std::to_string(n));
    if (!g.is_connected())
        throw DomainError("not a tree: graph is disconnected");
    if (g.size() + 1 != n)
        throw DomainError("not a tree: " + std::to_string(g.size()) + " edges on " + std::to_string(n) +
                          " vertices contain a cycle");

    RootedTree t;
    t.root_ = root;
    t.parent_.assign(n, root);
    std::vector<Vertex> order;
    order.reserve(n);
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        for (Vertex w : g.neighbors(v))
            if (w != t.parent_[v] || v == root) {
                t.parent_[w] = v;
                order.push_back(w);
            }
    }
    t.post_order_.assign(order.rbegin(), order.rend());
    t.graph_ = std::move(g);
    return t;
}

std::vector<Vertex> RootedTree::children(Vertex v) const
{
    std::vector<Vertex> out;
    for (Vertex w : graph_.neighbors(v))
        if (v == root_ || w != parent_[v])
            out.push_back(w);
    return out;
}

namespace {

enum State : std::size_t { in = 0, out_dominated = 1, out_free = 2 };
using Row = std::array<Key, 3>;

template <class F>
void for_children(const RootedTree& t, Vertex v, F&& f)
{
    const Vertex skip = t.parent(v).value_or(static_cast<Vertex>(-1));
    for (Vertex w : t.graph().neighbors(v))
        if (w != skip)
            f(w);
}

State best_any(const Row& r, Objective o)
{
    const Key keys[] = {r[in], r[out_dominated], r[out_free]};
    return static_cast<State>(best_of(keys, o));
}

State best_hit(const Row& r, Objective o)
{
    const Key keys[] = {r[in], r[out_dominated]};
    return static_cast<State>(best_of(keys, o));
}

// For out_dominated: the child forced into `in` when no child prefers it, or
// nullopt when some child already does. Cheapest swap, smaller id on ties.
std::optional<Vertex> forced_child(const RootedTree& t, Vertex v, const std::vector<Row>& rows, Objective o)
{
    std::optional<Vertex> pick;
    Key pick_delta;
    bool any_in = false;
    for_children(t, v, [&](Vertex c) {
        if (any_in)
            return;
        if (best_hit(rows[c], o) == in) {
            any_in = true;
            return;
        }
        Key delta = rows[c][in] - rows[c][out_dominated];
        if (!pick || better(delta, pick_delta, o)) {
            pick = c;
            pick_delta = delta;
        }
    });
    return any_in ? std::nullopt : pick;
}

std::vector<Row> forward(const RootedTree& t, Objective o)
{
    const Graph& g = t.graph();
    std::vector<Row> rows(g.order());
    for (Vertex v : t.post_order()) {
        Key take{1, static_cast<std::int64_t>(g.degree(v))};
        Key hit = Key::zero();
        Key free = Key::zero();
        bool any_child = false, any_in = false;
        Key swap;
        bool have_swap = false;
        for_children(t, v, [&](Vertex c) {
            const Row& r = rows[c];
            any_child = true;
            take = take + r[best_any(r, o)];
            free = free + r[out_dominated];
            State h = best_hit(r, o);
            hit = hit + r[h];
            if (h == in) {
                any_in = true;
            } else {
                Key delta = r[in] - r[out_dominated];
                if (!have_swap || better(delta, swap, o)) {
                    swap = delta;
                    have_swap = true;
                }
            }
        });
        if (!any_child)
            hit = Key::none();
        else if (!any_in)
            hit = hit + swap;
        rows[v] = {take, hit, free};
    }
    return rows;
}

Solution trace(const RootedTree& t, const std::vector<Row>& rows, Objective o)
{
    const Graph& g = t.graph();
    std::vector<State> state(g.order(), out_free);
    const Row& top = rows[t.root()];
    state[t.root()] = best_hit(top, o);

    std::vector<Vertex> chosen;
    const auto& post = t.post_order();
    for (auto it = post.rbegin(); it != post.rend(); ++it) {
        Vertex v = *it;
        switch (state[v]) {
        case in:
            chosen.push_back(v);
            for_children(t, v, [&](Vertex c) { state[c] = best_any(rows[c], o); });
            break;
        case out_dominated: {
            for_children(t, v, [&](Vertex c) { state[c] = best_hit(rows[c], o); });
            if (auto c = forced_child(t, v, rows, o))
                state[*c] = in;
            break;
        }
        case out_free:
            for_children(t, v, [&](Vertex c) { state[c] = out_dominated; });
            break;
        }
    }

    Key answer = top[state[t.root()]];
    Solution s;
    s.objective = o;
    s.size = static_cast<std::size_t>(answer.size);
    s.cover = static_cast<CoverValue>(answer.cover);
    s.witness = VertexSet(std::move(chosen));
    return s;
}

DPEntry merge(Key lo, Key hi)
{
    DPEntry e;
    if (!lo.feasible())
        return e;
    e.size = static_cast<std::size_t>(lo.size);
    e.cover_min = static_cast<CoverValue>(lo.cover);
    e.cover_max = static_cast<CoverValue>(hi.cover);
    return e;
}

} // namespace

std::vector<TreeDPState> tree_dp_table(const RootedTree& tree)
{
    auto lo = forward(tree, Objective::min);
    auto hi = forward(tree, Objective::max);
    std::vector<TreeDPState> out(lo.size());
    for (std::size_t v = 0; v < lo.size(); ++v)
        out[v] = {merge(lo[v][in], hi[v][in]), merge(lo[v][out_dominated], hi[v][out_dominated]),
                  merge(lo[v][out_free], hi[v][out_free])};
    return out;
}

Solution solve_tree(const RootedTree& tree, Objective objective)
{
    return trace(tree, forward(tree, objective), objective);
}

DominationReport solve_tree_report(const RootedTree& tree)
{
    auto lo = solve_tree(tree, Objective::min);
    auto hi = solve_tree(tree, Objective::max);
    DominationReport r;
    r.size = lo.size;
    r.cover_min = lo.cover;
    r.cover_max = hi.cover;
    r.witness_min = std::move(lo.witness);
    r.witness_max = std::move(hi.witness);
    return r;
}

} // namespace domcover
