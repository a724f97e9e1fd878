#include "domcover/families.hpp"

#include "domcover/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace domcover {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> family_names{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::star, "star"},
    {Family::complete, "complete"},
    {Family::corona, "corona"},
    {Family::barbell, "barbell"},
    {Family::book, "book"},
    {Family::random_tree, "random_tree"},
    {Family::random_block_graph, "random_block_graph"},
    {Family::random_gnp, "random_gnp"},
}};

class Params {
public:
    Params(const FamilySpec& spec) : spec_(spec) {}

    std::int64_t get(const std::string& key, std::int64_t min_value)
    {
        auto it = spec_.params.find(key);
        if (it == spec_.params.end())
            throw DomainError(std::string(to_string(spec_.family)) + " requires parameter '" + key + "'");
        return check(key, it->second, min_value);
    }

    std::int64_t get_or(const std::string& key, std::int64_t fallback, std::int64_t min_value)
    {
        auto it = spec_.params.find(key);
        return it == spec_.params.end() ? fallback : check(key, it->second, min_value);
    }

    // Rejects parameters the family does not know about.
    void done() const
    {
        for (auto& [key, value] : spec_.params)
            if (std::find(used_.begin(), used_.end(), key) == used_.end())
                throw DomainError(std::string(to_string(spec_.family)) + " has no parameter '" + key + "'");
    }

private:
    std::int64_t check(const std::string& key, std::int64_t value, std::int64_t min_value)
    {
        used_.push_back(key);
        if (value < min_value)
            throw DomainError(std::string(to_string(spec_.family)) + ": " + key + " must be >= " +
                              std::to_string(min_value) + ", got " + std::to_string(value));
        if (value > std::int64_t{1} << 24)
            throw DomainError(std::string(to_string(spec_.family)) + ": " + key + " is too large");
        return value;
    }

    const FamilySpec& spec_;
    std::vector<std::string> used_;
};

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& vs)
{
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            edges.emplace_back(vs[i], vs[j]);
}

std::vector<Vertex> range(Vertex first, std::size_t count)
{
    std::vector<Vertex> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = first + static_cast<Vertex>(i);
    return out;
}

} // namespace

std::string_view to_string(Family f) noexcept
{
    for (auto& [fam, name] : family_names)
        if (fam == f)
            return name;
    return "?";
}

Family parse_family(std::string_view name)
{
    for (auto& [fam, n] : family_names)
        if (n == name)
            return fam;
    throw DomainError("unknown family '" + std::string(name) + "'");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    if (bound == 0)
        throw DomainError("uniform_below needs a positive bound");
    // Largest multiple of bound representable; reject draws above it.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    while (true) {
        std::uint64_t r = rng();
        if (r < limit)
            return r % bound;
    }
}

Graph random_tree(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v)
        edges.emplace_back(static_cast<Vertex>(uniform_below(rng, v)), static_cast<Vertex>(v));
    return Graph(n, edges);
}

Graph random_block_graph(std::size_t n, std::size_t max_clique, std::uint64_t seed)
{
    if (max_clique < 2)
        throw DomainError("random_block_graph: max_clique must be >= 2");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    std::size_t count = n == 0 ? 0 : 1;
    while (count < n) {
        auto anchor = static_cast<Vertex>(uniform_below(rng, count));
        std::size_t size = 2 + uniform_below(rng, max_clique - 1);
        size = std::min(size, n - count + 1);
        std::vector<Vertex> clique = range(static_cast<Vertex>(count), size - 1);
        clique.insert(clique.begin(), anchor);
        add_clique(edges, clique);
        count += size - 1;
    }
    return Graph(n, edges);
}

Graph random_gnp(std::size_t n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed)
{
    if (p_den == 0 || p_num > p_den)
        throw DomainError("random_gnp: need 0 <= p_num <= p_den and p_den > 0");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (uniform_below(rng, p_den) < p_num)
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return Graph(n, edges);
}

Graph random_connected_gnp(std::size_t n, std::uint64_t p_num, std::uint64_t p_den, std::uint64_t seed)
{
    if (n < 2 || p_num == 0)
        throw DomainError("random_connected_gnp: need n >= 2 and a positive edge probability");
    for (std::uint64_t s = seed;; ++s) {
        Graph g = random_gnp(n, p_num, p_den, s);
        if (g.is_connected())
            return g;
    }
}

Graph generate(const FamilySpec& spec)
{
    Params p(spec);
    std::vector<Edge> edges;
    Graph out;
    switch (spec.family) {
    case Family::path: {
        auto n = static_cast<std::size_t>(p.get("n", 1));
        for (std::size_t v = 1; v < n; ++v)
            edges.emplace_back(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
        out = Graph(n, edges);
        break;
    }
    case Family::cycle: {
        auto n = static_cast<std::size_t>(p.get("n", 3));
        for (std::size_t v = 0; v < n; ++v)
            edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
        out = Graph(n, edges);
        break;
    }
    case Family::star: {
        auto leaves = static_cast<std::size_t>(p.get("n", 1));
        for (std::size_t v = 1; v <= leaves; ++v)
            edges.emplace_back(0, static_cast<Vertex>(v));
        out = Graph(leaves + 1, edges);
        break;
    }
    case Family::complete: {
        auto n = static_cast<std::size_t>(p.get("n", 1));
        add_clique(edges, range(0, n));
        out = Graph(n, edges);
        break;
    }
    case Family::corona: {
        // Clique on 0..p-1, pendant p+i on clique vertex i.
        auto k = static_cast<std::size_t>(p.get("p", 2));
        add_clique(edges, range(0, k));
        for (std::size_t i = 0; i < k; ++i)
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(k + i));
        out = Graph(2 * k, edges);
        break;
    }
    case Family::barbell: {
        // Cliques 0..n-1 and n..2n-1, bridge {n-1, n}.
        auto n = static_cast<std::size_t>(p.get("n", 3));
        add_clique(edges, range(0, n));
        add_clique(edges, range(static_cast<Vertex>(n), n));
        edges.emplace_back(static_cast<Vertex>(n - 1), static_cast<Vertex>(n));
        out = Graph(2 * n, edges);
        break;
    }
    case Family::book: {
        // Hubs 0 and 1; page i is the square 0 - (2+2i) - (3+2i) - 1.
        auto m = static_cast<std::size_t>(p.get("m", 1));
        edges.emplace_back(0, 1);
        for (std::size_t i = 0; i < m; ++i) {
            auto a = static_cast<Vertex>(2 + 2 * i), b = static_cast<Vertex>(3 + 2 * i);
            edges.emplace_back(0, a);
            edges.emplace_back(a, b);
            edges.emplace_back(b, 1);
        }
        out = Graph(2 * m + 2, edges);
        break;
    }
    case Family::random_tree:
        out = random_tree(static_cast<std::size_t>(p.get("n", 1)), spec.seed);
        break;
    case Family::random_block_graph: {
        auto n = static_cast<std::size_t>(p.get("n", 1));
        auto k = static_cast<std::size_t>(p.get_or("max_clique", 4, 2));
        out = random_block_graph(n, k, spec.seed);
        break;
    }
    case Family::random_gnp: {
        auto n = static_cast<std::size_t>(p.get("n", 1));
        auto num = static_cast<std::uint64_t>(p.get("p_num", 0));
        auto den = static_cast<std::uint64_t>(p.get("p_den", 1));
        out = random_gnp(n, num, den, spec.seed);
        break;
    }
    }
    p.done();
    return out;
}

std::vector<Graph> connected_graphs(std::size_t n)
{
    if (n > 8)
        throw CapacityError("connected_graphs enumerates labelled graphs and supports n <= 8");
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<std::size_t> deg(n);
    std::vector<Edge> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        edges.clear();
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) {
                ++deg[pairs[i].first];
                ++deg[pairs[i].second];
                edges.push_back(pairs[i]);
            }
        if (!std::is_sorted(deg.rbegin(), deg.rend()))
            continue;
        Graph g(n, edges);
        if (g.is_connected())
            out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> rooted_trees(std::size_t n)
{
    std::vector<Graph> out;
    if (n == 0)
        return out;
    // Level sequences in reverse lexicographic order, starting from the path.
    std::vector<std::size_t> level(n);
    for (std::size_t i = 0; i < n; ++i)
        level[i] = i;
    while (true) {
        std::vector<Edge> edges;
        std::vector<Vertex> last_at(n, 0);
        for (std::size_t i = 1; i < n; ++i) {
            edges.emplace_back(last_at[level[i] - 1], static_cast<Vertex>(i));
            last_at[level[i]] = static_cast<Vertex>(i);
        }
        out.emplace_back(n, edges);

        std::size_t p = n;
        for (std::size_t i = n; i-- > 1;)
            if (level[i] > 1) {
                p = i;
                break;
            }
        if (p == n)
            break;
        std::size_t q = p;
        while (level[q] != level[p] - 1)
            --q;
        for (std::size_t i = p; i < n; ++i)
            level[i] = level[i - (p - q)];
    }
    return out;
}

std::vector<Graph> spiders(std::size_t n)
{
    std::vector<Graph> out;
    if (n == 0)
        return out;
    // Partitions of n-1 as non-increasing leg lengths.
    std::vector<std::size_t> legs;
    auto emit = [&] {
        std::vector<Edge> edges;
        Vertex next = 1;
        for (std::size_t len : legs) {
            Vertex prev = 0;
            for (std::size_t i = 0; i < len; ++i) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
        }
        out.emplace_back(n, edges);
    };
    auto rec = [&](auto&& self, std::size_t left, std::size_t cap) -> void {
        if (left == 0) {
            emit();
            return;
        }
        for (std::size_t len = std::min(left, cap); len >= 1; --len) {
            legs.push_back(len);
            self(self, left - len, len);
            legs.pop_back();
        }
    };
    rec(rec, n - 1, n - 1);
    return out;
}

const BoundCheck& BoundAudit::check(std::string_view name) const
{
    for (const auto& c : checks)
        if (c.name == name)
            return c;
    throw DomainError("no bound named '" + std::string(name) + "'");
}

BoundAudit audit_bounds(const Graph& g)
{
    if (g.order() > oracle_capacity)
        throw CapacityError("audit needs exhaustive search; graph has " + std::to_string(g.order()) +
                            " vertices, limit is " + std::to_string(oracle_capacity));
    if (!g.is_connected())
        throw DomainError("audit requires a connected graph");

    BoundAudit a;
    const auto n = static_cast<std::int64_t>(g.order());
    a.order = g.order();
    const auto sets = enumerate_gamma_sets(g);
    std::vector<std::int64_t> covers;
    covers.reserve(sets.size());
    for (const auto& d : sets)
        covers.push_back(static_cast<std::int64_t>(cover_number(g, d)));
    a.gamma = sets.front().size();
    a.gamma_set_count = sets.size();
    a.unique_gamma_set = sets.size() == 1;
    a.cover_min = static_cast<CoverValue>(*std::min_element(covers.begin(), covers.end()));
    a.cover_max = static_cast<CoverValue>(*std::max_element(covers.begin(), covers.end()));
    a.p4_free = is_p4_free(g);
    a.path = is_path(g);

    const bool usable = !g.has_isolated_vertex();
    const auto gam = static_cast<std::int64_t>(a.gamma);
    const auto lo = static_cast<std::int64_t>(a.cover_min);
    const auto hi = static_cast<std::int64_t>(a.cover_max);

    auto lower = [&](std::string name, bool applicable, std::int64_t bound) {
        BoundCheck c{std::move(name), applicable && usable, bound, lo};
        if (c.applicable) {
            c.violations = static_cast<std::size_t>(
                std::count_if(covers.begin(), covers.end(), [&](auto x) { return x < bound; }));
            c.holds = c.violations == 0;
            c.tight = c.holds && lo == bound;
        }
        a.checks.push_back(std::move(c));
    };
    auto upper = [&](std::string name, bool applicable, std::int64_t bound) {
        BoundCheck c{std::move(name), applicable && usable, hi, bound};
        if (c.applicable) {
            c.violations = static_cast<std::size_t>(
                std::count_if(covers.begin(), covers.end(), [&](auto x) { return x > bound; }));
            c.holds = c.violations == 0;
            c.tight = c.holds && hi == bound;
        }
        a.checks.push_back(std::move(c));
    };

    const std::int64_t half = (n + 1) / 2;
    lower("n_minus_gamma_lower", true, n - gam);
    lower("half_order_lower", true, half);
    upper("half_order_upper", true, half * half);
    lower("cograph_lower", a.p4_free, n - gam);
    upper("cograph_upper", a.p4_free, 2 * n - gam);

    const std::int64_t k = n / 3;
    std::int64_t path_lo = 2 * k, path_hi = 2 * k;
    if (n % 3 == 1)
        path_hi = 2 * k + 2;
    else if (n % 3 == 2) {
        path_lo = 2 * k + 1;
        path_hi = 2 * k + 2;
    }
    lower("path_lower", a.path, path_lo);
    upper("path_upper", a.path, path_hi);
    return a;
}

} // namespace domcover
