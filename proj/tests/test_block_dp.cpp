#include "helpers.hpp"

#include "domcover/block_dp.hpp"
#include "domcover/oracle.hpp"
#include "domcover/tree_dp.hpp"

#include <doctest.h>

#include <chrono>

using namespace domcover;
using namespace testing;

namespace {

void check_against_oracle(const Graph& g)
{
    auto oracle = cover_extrema(g, Execution::serial);
    auto report = solve_block_graph_report(g);
    CHECK(report.size == oracle.size);
    CHECK(report.cover_min == oracle.cover_min);
    CHECK(report.cover_max == oracle.cover_max);
    for (Objective o : {Objective::min, Objective::max}) {
        Solution s = solve_block_graph(g, o);
        CHECK(is_dominating(g, s.witness));
        CHECK(s.witness.size() == s.size);
        CHECK(cover_number(g, s.witness) == s.cover);
    }
}

} // namespace

TEST_CASE("cut-tree construction")
{
    auto p3 = build_cut_tree(path(3));
    REQUIRE(p3.node_count() == 3);
    CHECK(p3.block_count() == 2);
    CHECK(p3.node(0).members == VertexSet{0, 1});
    CHECK(p3.node(1).members == VertexSet{1, 2});
    CHECK(p3.node(2).kind == CutTreeNode::Kind::cut);
    CHECK(p3.node(2).members == VertexSet{1});
    CHECK(p3.neighbors(2).size() == 2);

    auto bowtie = build_cut_tree(glued_cliques(3, 3));
    REQUIRE(bowtie.node_count() == 3);
    CHECK(bowtie.node(0).members == VertexSet{0, 1, 2});
    CHECK(bowtie.node(0).noncut == VertexSet{0, 1});
    CHECK(bowtie.node(1).members == VertexSet{2, 3, 4});
    CHECK(bowtie.node(2).members == VertexSet{2});
    CHECK(bowtie.neighbors(2) == std::vector<std::size_t>{0, 1});

    auto k5 = build_cut_tree(complete(5));
    CHECK(k5.node_count() == 1);
    CHECK(k5.node(0).noncut.size() == 5);

    CHECK_THROWS_AS(build_cut_tree(cycle(4)), DomainError);
    CHECK_THROWS_AS(build_cut_tree(Graph(4, {{0, 1}, {2, 3}})), DomainError);
    try {
        build_cut_tree(cycle(4));
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("{0,1,2,3}") != std::string::npos);
    }
}

TEST_CASE("cut-tree invariants")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = random_block_graph(1 + seed % 30, 2 + seed % 4, seed);
        CutTree t = build_cut_tree(g);
        std::size_t edges = 0;
        std::vector<int> noncut_seen(g.order(), 0);
        for (std::size_t i = 0; i < t.node_count(); ++i) {
            edges += t.neighbors(i).size();
            for (std::size_t j : t.neighbors(i)) {
                CHECK((t.node(i).kind == CutTreeNode::Kind::block) != (t.node(j).kind == CutTreeNode::Kind::block));
                const auto& blk = t.node(i).kind == CutTreeNode::Kind::block ? t.node(i) : t.node(j);
                const auto& cut = t.node(i).kind == CutTreeNode::Kind::cut ? t.node(i) : t.node(j);
                CHECK(blk.members.contains(cut.members[0]));
            }
            if (t.node(i).kind == CutTreeNode::Kind::block)
                for (Vertex v : t.node(i).noncut)
                    ++noncut_seen[v];
        }
        CHECK(edges / 2 + 1 == t.node_count()); // a tree
        CHECK(t.post_order().size() == t.node_count());
        CHECK(t.post_order().back() == t.root());
        auto cuts = blocks_and_cut_vertices(g).cut_vertices;
        for (Vertex v = 0; v < g.order(); ++v)
            CHECK(noncut_seen[v] == (cuts.contains(v) ? 0 : 1));
    }
}

TEST_CASE("solve_block_graph examples")
{
    Solution k6 = solve_block_graph(complete(6), Objective::max);
    CHECK(k6.size == 1);
    CHECK(k6.cover == 5);

    auto c3 = solve_block_graph_report(corona(3));
    CHECK(c3.size == 3);
    CHECK(c3.cover_min == 3);
    CHECK(c3.cover_max == 9);
    CHECK(c3.witness_max == VertexSet{0, 1, 2});

    for (Objective o : {Objective::min, Objective::max}) {
        Solution two_k4 = solve_block_graph(glued_cliques(4, 4), o);
        CHECK(two_k4.size == 1);
        CHECK(two_k4.cover == 6);
        CHECK(two_k4.witness == VertexSet{3});
    }

    Solution k1 = solve_block_graph(Graph(1, {}), Objective::min);
    CHECK(k1.size == 1);
    CHECK(k1.cover == 0);

    CHECK_THROWS_AS(solve_block_graph(cycle(5), Objective::min), DomainError);
}

TEST_CASE("block DP matches the oracle")
{
    for (std::uint64_t seed = 0; seed < 300; ++seed)
        check_against_oracle(random_block_graph(1 + seed % 14, 2 + seed % 4, 77 + seed));
    for (std::size_t n = 1; n <= 9; ++n)
        for (const Graph& t : rooted_trees(n))
            check_against_oracle(t);
    for (std::int64_t p = 2; p <= 6; ++p)
        check_against_oracle(corona(p));
    for (std::int64_t k = 1; k <= 8; ++k)
        check_against_oracle(complete(k));
    for (std::size_t a = 2; a <= 6; ++a)
        for (std::size_t b = 2; b <= 6; ++b)
            check_against_oracle(glued_cliques(a, b));
    for (std::int64_t n = 3; n <= 6; ++n)
        check_against_oracle(barbell(n));
}

TEST_CASE("block DP agrees with the tree DP on trees")
{
    for (const Graph& t : rooted_trees(10)) {
        auto tree = solve_tree_report(root_tree(t));
        auto block = solve_block_graph_report(t);
        CHECK(tree.size == block.size);
        CHECK(tree.cover_min == block.cover_min);
        CHECK(tree.cover_max == block.cover_max);
    }
}

TEST_CASE("large random block graph")
{
    Graph g = random_block_graph(100'000, 5, 11);
    const auto start = std::chrono::steady_clock::now();
    Solution s = solve_block_graph(g, Objective::max);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(is_dominating(g, s.witness));
    CHECK(cover_number(g, s.witness) == s.cover);
    CHECK(seconds < 10.0);
}
