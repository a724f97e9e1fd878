#pragma once

#include "domcover/graph.hpp"
#include "domcover/oracle.hpp"
#include "domcover/solution.hpp"

#include <string_view>

namespace domcover {

/// Product vertex (g, h) has id g * |V(H)| + h; layer H^g is the id range
/// [g * |V(H)|, (g + 1) * |V(H)|).
struct ProductVertexMap {
    std::size_t h_order = 0;

    Vertex to_id(Vertex g, Vertex h) const noexcept { return static_cast<Vertex>(g * h_order + h); }
    std::pair<Vertex, Vertex> from_id(Vertex id) const noexcept
    {
        return {static_cast<Vertex>(id / h_order), static_cast<Vertex>(id % h_order)};
    }
};

/// Lexicographic product G o H: (a,x) ~ (b,y) iff ab in E(G), or a = b and xy in E(H).
Graph lex_product(const Graph& g, const Graph& h);

/// gamma(G o H) without building the product: gamma(G) when gamma(H) = 1,
/// gamma_t(G) otherwise. G must be connected without isolated vertices.
std::size_t gamma_lex_product(const Graph& g, const Graph& h);

enum class ProductCase { gamma_h_one, total_case, mixed_case };
std::string_view to_string(ProductCase c) noexcept;

struct ProductIngredients {
    std::size_t gamma_g = 0;
    std::size_t gamma_t_g = 0;
    std::size_t gamma_h = 0;
    DominationReport cover_g;       // over gamma-sets of G
    DominationReport total_cover_g; // over gamma_t-sets of G
    DominationReport cover_h;       // over gamma-sets of H
    std::size_t min_degree_h = 0;
    std::size_t max_degree_h = 0;
    std::size_t order_h = 0;
};

struct ProductCoverResult {
    Objective mode = Objective::min;
    CoverValue value = 0;
    ProductCase case_used = ProductCase::gamma_h_one;
    ProductIngredients ingredients;
    CoverValue alpha = 0; // the gamma_t-set candidate (mixed and total cases)
    CoverValue beta = 0;  // the gamma(G) x gamma(H) candidate (mixed case only)
};

/// Closed-form extreme cover number of G o H from oracle ingredients of G and H.
/// Case split on gamma(H): 1; >2, or 2 with gamma_t(G) < 2 gamma(G); otherwise mixed.
ProductCoverResult product_cover_extrema(const Graph& g, const Graph& h, Objective mode);

struct ProductValidation {
    std::size_t gamma_formula = 0;
    std::size_t gamma_oracle = 0;
    ProductCoverResult min_formula;
    ProductCoverResult max_formula;
    DominationReport oracle; // on the constructed product
    bool gamma_agrees() const noexcept { return gamma_formula == gamma_oracle; }
    bool min_agrees() const noexcept { return min_formula.value == oracle.cover_min; }
    bool max_agrees() const noexcept { return max_formula.value == oracle.cover_max; }
};

/// Formula path vs exhaustive search on the product. Reports, never asserts.
ProductValidation validate_product_theorem(const Graph& g, const Graph& h,
                                           Execution exec = Execution::parallel);

} // namespace domcover
