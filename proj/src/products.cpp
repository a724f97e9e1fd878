#include "domcover/products.hpp"

#include <algorithm>

namespace domcover {

std::string_view to_string(ProductCase c) noexcept
{
    switch (c) {
    case ProductCase::gamma_h_one:
        return "gammaH_1";
    case ProductCase::total_case:
        return "total_case";
    case ProductCase::mixed_case:
        return "mixed_case";
    }
    return "?";
}

Graph lex_product(const Graph& g, const Graph& h)
{
    if (g.order() == 0 || h.order() == 0)
        throw DomainError("lexicographic product needs two non-empty factors");
    const ProductVertexMap map{h.order()};
    const auto nh = static_cast<Vertex>(h.order());
    std::vector<Edge> edges;
    edges.reserve(g.size() * h.order() * h.order() + g.order() * h.size());
    for (auto [a, b] : g.edges())
        for (Vertex x = 0; x < nh; ++x)
            for (Vertex y = 0; y < nh; ++y)
                edges.emplace_back(map.to_id(a, x), map.to_id(b, y));
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto [x, y] : h.edges())
            edges.emplace_back(map.to_id(a, x), map.to_id(a, y));
    return Graph(g.order() * h.order(), edges);
}

namespace {

void require_factors(const Graph& g, const Graph& h)
{
    if (h.order() == 0)
        throw DomainError("second factor is empty; gamma(H) is undefined");
    if (g.order() < 2 || !g.is_connected())
        throw DomainError("first factor must be connected with at least two vertices");
}

} // namespace

std::size_t gamma_lex_product(const Graph& g, const Graph& h)
{
    require_factors(g, h);
    return gamma(h) == 1 ? gamma(g) : gamma_total(g);
}

ProductCoverResult product_cover_extrema(const Graph& g, const Graph& h, Objective mode)
{
    require_factors(g, h);
    ProductCoverResult r;
    r.mode = mode;
    auto& in = r.ingredients;
    in.cover_g = cover_extrema(g);
    in.total_cover_g = total_cover_extrema(g);
    in.cover_h = cover_extrema(h);
    in.gamma_g = in.cover_g.size;
    in.gamma_t_g = in.total_cover_g.size;
    in.gamma_h = in.cover_h.size;
    in.min_degree_h = h.min_degree();
    in.max_degree_h = h.max_degree();
    in.order_h = h.order();

    const bool lo = mode == Objective::min;
    const CoverValue nh = in.order_h;
    const CoverValue c_g = lo ? in.cover_g.cover_min : in.cover_g.cover_max;
    const CoverValue c_tg = lo ? in.total_cover_g.cover_min : in.total_cover_g.cover_max;
    const CoverValue c_h = lo ? in.cover_h.cover_min : in.cover_h.cover_max;
    const CoverValue deg_h = lo ? in.min_degree_h : in.max_degree_h;

    if (in.gamma_h == 1) {
        r.case_used = ProductCase::gamma_h_one;
        r.value = c_g * nh + in.gamma_g * (nh - 1);
        return r;
    }
    r.alpha = c_tg * nh + in.gamma_t_g * deg_h;
    if (in.gamma_h > 2 || in.gamma_t_g < 2 * in.gamma_g) {
        r.case_used = ProductCase::total_case;
        r.value = r.alpha;
        return r;
    }
    r.case_used = ProductCase::mixed_case;
    r.beta = 2 * c_g * nh + c_h;
    r.value = lo ? std::min(r.alpha, r.beta) : std::max(r.alpha, r.beta);
    return r;
}

ProductValidation validate_product_theorem(const Graph& g, const Graph& h, Execution exec)
{
    if (g.order() * h.order() > oracle_capacity)
        throw CapacityError("product has " + std::to_string(g.order() * h.order()) +
                            " vertices, above the exhaustive search limit of " + std::to_string(oracle_capacity));
    ProductValidation v;
    v.gamma_formula = gamma_lex_product(g, h);
    v.min_formula = product_cover_extrema(g, h, Objective::min);
    v.max_formula = product_cover_extrema(g, h, Objective::max);
    v.oracle = cover_extrema(lex_product(g, h), exec);
    v.gamma_oracle = v.oracle.size;
    return v;
}

} // namespace domcover
