#include "helpers.hpp"

#include "domcover/oracle.hpp"
#include "domcover/tree_dp.hpp"

#include <doctest.h>

#include <chrono>
#include <random>

using namespace domcover;
using namespace testing;

namespace {

void check_against_oracle(const Graph& g)
{
    auto oracle = cover_extrema(g, Execution::serial);
    auto tree = root_tree(g);
    auto report = solve_tree_report(tree);
    CHECK(report.size == oracle.size);
    CHECK(report.cover_min == oracle.cover_min);
    CHECK(report.cover_max == oracle.cover_max);
    for (Objective o : {Objective::min, Objective::max}) {
        Solution s = solve_tree(tree, o);
        CHECK(is_dominating(g, s.witness));
        CHECK(s.witness.size() == s.size);
        CHECK(cover_number(g, s.witness) == s.cover);
    }
}

} // namespace

TEST_CASE("root_tree")
{
    auto p3 = root_tree(path(3), 0);
    CHECK(p3.parent(0) == std::nullopt);
    CHECK(p3.parent(1) == 0u);
    CHECK(p3.parent(2) == 1u);
    CHECK(p3.post_order() == std::vector<Vertex>{2, 1, 0});

    auto k14 = root_tree(star(4), 0);
    CHECK(k14.children(0) == std::vector<Vertex>{1, 2, 3, 4});

    CHECK(root_tree(path(3), 1).children(1) == std::vector<Vertex>{0, 2});

    CHECK_THROWS_AS(root_tree(cycle(4)), DomainError);
    CHECK_THROWS_AS(root_tree(Graph(4, {{0, 1}, {2, 3}})), DomainError);
    CHECK_THROWS_AS(root_tree(Graph(3, {{0, 1}, {1, 2}}), 3), DomainError);
}

TEST_CASE("solve_tree examples")
{
    for (Objective o : {Objective::min, Objective::max}) {
        Solution s = solve_tree(root_tree(path(6)), o);
        CHECK(s.size == 2);
        CHECK(s.cover == 4);
    }
    Solution p7max = solve_tree(root_tree(path(7)), Objective::max);
    CHECK(p7max.size == 3);
    CHECK(p7max.cover == 6);
    Solution p7min = solve_tree(root_tree(path(7)), Objective::min);
    CHECK(p7min.size == 3);
    CHECK(p7min.cover == 4);

    Solution k15 = solve_tree(root_tree(star(5)), Objective::min);
    CHECK(k15.size == 1);
    CHECK(k15.cover == 5);
    CHECK(k15.witness == VertexSet{0});

    // An endpoint root needs the state where the parent does the dominating.
    Solution p3 = solve_tree(root_tree(path(3), 0), Objective::min);
    CHECK(p3.size == 1);
    CHECK(p3.witness == VertexSet{1});

    Solution k1 = solve_tree(root_tree(Graph(1, {})), Objective::max);
    CHECK(k1.size == 1);
    CHECK(k1.cover == 0);
}

TEST_CASE("leaf rows")
{
    auto table = tree_dp_table(root_tree(path(5), 2));
    for (Vertex leaf : {0u, 4u}) {
        const auto& row = table[leaf];
        CHECK(row.in.size == 1);
        CHECK(row.in.cover_min == 1);
        CHECK(row.in.cover_max == 1);
        CHECK_FALSE(row.out_dominated.feasible());
        CHECK(row.out_free == DPEntry{0, 0, 0});
    }
    for (const auto& row : table)
        for (const DPEntry* e : {&row.in, &row.out_dominated, &row.out_free})
            if (e->feasible())
                CHECK(e->cover_min <= e->cover_max);
}

TEST_CASE("root independence")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_tree(1 + seed % 14, seed);
        auto first = solve_tree_report(root_tree(g, 0));
        for (Vertex r = 1; r < g.order(); ++r) {
            auto other = solve_tree_report(root_tree(g, r));
            CHECK(other.size == first.size);
            CHECK(other.cover_min == first.cover_min);
            CHECK(other.cover_max == first.cover_max);
        }
    }
}

TEST_CASE("tree DP matches the oracle")
{
    for (std::size_t n = 1; n <= 15; ++n) {
        check_against_oracle(path(static_cast<std::int64_t>(n)));
        if (n >= 2)
            check_against_oracle(star(static_cast<std::int64_t>(n - 1)));
    }
    for (std::size_t n = 1; n <= 12; ++n)
        for (const Graph& s : spiders(n))
            check_against_oracle(s);
    for (std::uint64_t seed = 0; seed < 200; ++seed)
        check_against_oracle(random_tree(1 + seed % 15, 1000 + seed));
}

TEST_CASE("long path")
{
    const std::size_t n = 1'000'000;
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    const auto start = std::chrono::steady_clock::now();
    auto tree = root_tree(Graph(n, edges));
    Solution s = solve_tree(tree, Objective::min);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(s.size == (n + 2) / 3);
    CHECK(is_dominating(tree.graph(), s.witness));
    CHECK(seconds < 5.0);
}
