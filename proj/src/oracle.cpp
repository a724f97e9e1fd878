#include "domcover/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>

#include <omp.h>

namespace domcover {

namespace {

using Mask = std::uint32_t;
static_assert(oracle_capacity <= 31);

// Enumerates k-subsets S of V in lexicographic order such that the union of
// nb[v] over S covers V. nb[v] is N[v] for plain domination and N(v) for total
// domination. Branches are restricted to vertices that can still cover the
// lowest uncovered vertex, and cut when the remaining suffix cannot cover what
// is left.
class SubsetSearch {
public:
    struct Frame {
        Mask chosen = 0;
        Mask covered = 0;
        std::uint32_t count = 0;
        std::uint32_t next = 0;
        CoverValue cover = 0;
    };

    SubsetSearch(const Graph& g, DominationMode mode) : n_(static_cast<std::uint32_t>(g.order()))
    {
        if (g.order() > oracle_capacity)
            throw CapacityError("exhaustive search supports at most " + std::to_string(oracle_capacity) +
                                " vertices, graph has " + std::to_string(g.order()));
        full_ = n_ == 0 ? 0 : (Mask{1} << n_) - 1;
        nb_.assign(n_, 0);
        deg_.assign(n_, 0);
        last_.assign(n_, 0);
        suffix_.assign(n_ + 1, 0);
        for (Vertex v = 0; v < n_; ++v) {
            Mask m = mode == DominationMode::plain ? Mask{1} << v : 0;
            for (Vertex w : g.neighbors(v))
                m |= Mask{1} << w;
            nb_[v] = m;
            deg_[v] = g.degree(v);
        }
        // Vertices able to cover u are exactly those whose nb contains u.
        for (Vertex u = 0; u < n_; ++u) {
            std::uint32_t hi = 0;
            for (Vertex v = 0; v < n_; ++v)
                if (nb_[v] >> u & 1)
                    hi = v;
            last_[u] = hi;
        }
        for (std::uint32_t i = n_; i-- > 0;)
            suffix_[i] = suffix_[i + 1] | nb_[i];
    }

    std::uint32_t order() const noexcept { return n_; }

    // Smallest k worth trying: every vertex covers at most max |nb| vertices.
    std::uint32_t lower_bound() const noexcept
    {
        std::uint32_t widest = 1;
        for (Mask m : nb_)
            widest = std::max<std::uint32_t>(widest, static_cast<std::uint32_t>(std::popcount(m)));
        return (n_ + widest - 1) / widest;
    }

    /// Depth-first search below `f`. `visit(mask, cover)` returns false to stop;
    /// run then returns false as well.
    template <class Visit>
    bool run(const Frame& f, std::uint32_t k, Visit& visit) const
    {
        if (f.count == k)
            return f.covered != full_ || visit(f.chosen, f.cover);
        const std::uint32_t remaining = k - f.count;
        std::uint32_t upper = n_ - remaining;
        if (Mask need = full_ & ~f.covered) {
            if (need & ~suffix_[f.next])
                return true;
            upper = std::min(upper, last_[std::countr_zero(need)]);
        }
        for (std::uint32_t i = f.next; i <= upper; ++i) {
            Frame child{f.chosen | Mask{1} << i, f.covered | nb_[i], f.count + 1, i + 1, f.cover + deg_[i]};
            if (!run(child, k, visit))
                return false;
        }
        return true;
    }

    /// Frames at depth min(depth, k) in search order; running each and
    /// concatenating reproduces run(Frame{}, k).
    std::vector<Frame> split(std::uint32_t k, std::uint32_t depth) const
    {
        depth = std::min(depth, k);
        std::vector<Frame> out;
        auto expand = [&](auto&& self, const Frame& f) -> void {
            if (f.count == depth) {
                out.push_back(f);
                return;
            }
            const std::uint32_t remaining = k - f.count;
            std::uint32_t upper = n_ - remaining;
            if (Mask need = full_ & ~f.covered) {
                if (need & ~suffix_[f.next])
                    return;
                upper = std::min(upper, last_[std::countr_zero(need)]);
            }
            for (std::uint32_t i = f.next; i <= upper; ++i)
                self(self, Frame{f.chosen | Mask{1} << i, f.covered | nb_[i], f.count + 1, i + 1, f.cover + deg_[i]});
        };
        if (k <= n_)
            expand(expand, Frame{});
        return out;
    }

private:
    std::uint32_t n_;
    Mask full_ = 0;
    std::vector<Mask> nb_;
    std::vector<CoverValue> deg_;
    std::vector<std::uint32_t> last_;
    std::vector<Mask> suffix_;
};

constexpr std::uint32_t split_depth = 2;

bool exists(const SubsetSearch& s, std::uint32_t k, Execution exec)
{
    if (k > s.order())
        return false;
    if (exec == Execution::serial) {
        auto stop = [](Mask, CoverValue) { return false; };
        return !s.run(SubsetSearch::Frame{}, k, stop);
    }
    auto tasks = s.split(k, split_depth);
    std::atomic<bool> found{false};
    const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < count; ++t) {
        if (found.load(std::memory_order_relaxed))
            continue;
        auto stop = [&](Mask, CoverValue) {
            found.store(true, std::memory_order_relaxed);
            return false;
        };
        s.run(tasks[static_cast<std::size_t>(t)], k, stop);
    }
    return found.load();
}

std::uint32_t minimum_size(const SubsetSearch& s, Execution exec)
{
    for (std::uint32_t k = s.lower_bound(); k <= s.order(); ++k)
        if (exists(s, k, exec))
            return k;
    // Unreachable for valid inputs: V itself covers V once isolated vertices are excluded.
    throw DomainError("no covering set exists");
}

std::vector<Mask> collect(const SubsetSearch& s, std::uint32_t k, Execution exec)
{
    if (exec == Execution::serial) {
        std::vector<Mask> out;
        auto keep = [&](Mask m, CoverValue) {
            out.push_back(m);
            return true;
        };
        s.run(SubsetSearch::Frame{}, k, keep);
        return out;
    }
    auto tasks = s.split(k, split_depth);
    std::vector<std::vector<Mask>> parts(tasks.size());
    const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < count; ++t) {
        auto& part = parts[static_cast<std::size_t>(t)];
        auto keep = [&](Mask m, CoverValue) {
            part.push_back(m);
            return true;
        };
        s.run(tasks[static_cast<std::size_t>(t)], k, keep);
    }
    std::vector<Mask> out;
    for (auto& part : parts)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

struct Extremes {
    bool found = false;
    CoverValue min = 0, max = 0;
    Mask at_min = 0, at_max = 0;

    // Strict improvement only, so the first set in search order wins ties.
    bool operator()(Mask m, CoverValue c)
    {
        if (!found) {
            found = true;
            min = max = c;
            at_min = at_max = m;
        } else {
            if (c < min) {
                min = c;
                at_min = m;
            }
            if (c > max) {
                max = c;
                at_max = m;
            }
        }
        return true;
    }

    void absorb(const Extremes& later)
    {
        if (!later.found)
            return;
        if (!found) {
            *this = later;
            return;
        }
        if (later.min < min) {
            min = later.min;
            at_min = later.at_min;
        }
        if (later.max > max) {
            max = later.max;
            at_max = later.at_max;
        }
    }
};

Extremes extremes(const SubsetSearch& s, std::uint32_t k, Execution exec)
{
    Extremes total;
    if (exec == Execution::serial) {
        s.run(SubsetSearch::Frame{}, k, total);
        return total;
    }
    auto tasks = s.split(k, split_depth);
    std::vector<Extremes> parts(tasks.size());
    const auto count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t t = 0; t < count; ++t)
        s.run(tasks[static_cast<std::size_t>(t)], k, parts[static_cast<std::size_t>(t)]);
    for (const auto& part : parts)
        total.absorb(part);
    return total;
}

std::vector<VertexSet> to_sets(const std::vector<Mask>& masks)
{
    std::vector<VertexSet> out;
    out.reserve(masks.size());
    for (Mask m : masks)
        out.push_back(VertexSet::from_mask(m));
    return out;
}

DominationReport make_report(DominationMode mode, std::uint32_t k, const Extremes& e)
{
    DominationReport r;
    r.mode = mode;
    r.size = k;
    r.cover_min = e.min;
    r.cover_max = e.max;
    r.witness_min = VertexSet::from_mask(e.at_min);
    r.witness_max = VertexSet::from_mask(e.at_max);
    return r;
}

void require_no_isolated(const Graph& g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw DomainError("vertex " + std::to_string(v) + " is isolated; no total dominating set exists");
}

SubsetSearch total_search(const Graph& g)
{
    SubsetSearch s(g, DominationMode::total);
    require_no_isolated(g);
    return s;
}

} // namespace

std::size_t gamma(const Graph& g, Execution exec)
{
    SubsetSearch s(g, DominationMode::plain);
    return minimum_size(s, exec);
}

std::vector<VertexSet> enumerate_gamma_sets(const Graph& g, Execution exec)
{
    SubsetSearch s(g, DominationMode::plain);
    return to_sets(collect(s, minimum_size(s, exec), exec));
}

DominationReport cover_extrema(const Graph& g, Execution exec)
{
    SubsetSearch s(g, DominationMode::plain);
    auto k = minimum_size(s, exec);
    return make_report(DominationMode::plain, k, extremes(s, k, exec));
}

std::size_t gamma_total(const Graph& g, Execution exec)
{
    auto s = total_search(g);
    return minimum_size(s, exec);
}

std::vector<VertexSet> enumerate_gamma_total_sets(const Graph& g, Execution exec)
{
    auto s = total_search(g);
    return to_sets(collect(s, minimum_size(s, exec), exec));
}

DominationReport total_cover_extrema(const Graph& g, Execution exec)
{
    auto s = total_search(g);
    auto k = minimum_size(s, exec);
    return make_report(DominationMode::total, k, extremes(s, k, exec));
}

std::optional<VertexSet> has_efficient_dominating_set(const Graph& g)
{
    if (g.order() > oracle_capacity)
        throw CapacityError("exhaustive search supports at most " + std::to_string(oracle_capacity) +
                            " vertices, graph has " + std::to_string(g.order()));
    const auto n = static_cast<std::uint32_t>(g.order());
    const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
    std::vector<Mask> closed(n);
    for (Vertex v = 0; v < n; ++v) {
        closed[v] = Mask{1} << v;
        for (Vertex w : g.neighbors(v))
            closed[v] |= Mask{1} << w;
    }

    // Closed neighbourhoods of an efficient dominating set partition V: pick,
    // in increasing id order, vertices whose N[v] avoids everything covered.
    std::optional<VertexSet> answer;
    auto search = [&](auto&& self, Mask chosen, Mask covered, std::uint32_t next) -> bool {
        if (covered == all) {
            answer = VertexSet::from_mask(chosen);
            return true;
        }
        // Some later pick must lie in N[u] for the lowest uncovered u.
        auto u = static_cast<std::uint32_t>(std::countr_zero(all & ~covered));
        auto last = static_cast<std::uint32_t>(31 - std::countl_zero(closed[u]));
        for (std::uint32_t v = next; v <= last; ++v) {
            if (closed[v] & covered)
                continue;
            if (self(self, chosen | Mask{1} << v, covered | closed[v], v + 1))
                return true;
        }
        return false;
    };
    search(search, 0, 0, 0);
    return answer;
}

} // namespace domcover
