#include "domcover/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace domcover {

ParseError::ParseError(std::size_t line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::from_mask(std::uint64_t mask)
{
    VertexSet s;
    while (mask) {
        s.members_.push_back(static_cast<Vertex>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return s;
}

bool VertexSet::contains(Vertex v) const noexcept
{
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::unite(const VertexSet& other) const
{
    VertexSet s;
    std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                   std::back_inserter(s.members_));
    return s;
}

VertexSet VertexSet::without(Vertex v) const
{
    VertexSet s = *this;
    auto it = std::lower_bound(s.members_.begin(), s.members_.end(), v);
    if (it != s.members_.end() && *it == v)
        s.members_.erase(it);
    return s;
}

std::uint64_t VertexSet::to_mask() const
{
    std::uint64_t mask = 0;
    for (Vertex v : members_) {
        if (v >= 64)
            throw CapacityError("vertex id " + std::to_string(v) + " does not fit a 64-bit mask");
        mask |= std::uint64_t{1} << v;
    }
    return mask;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s)
{
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    return os << '}';
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

Graph::Graph(std::size_t n, std::span<const Edge> edges)
{
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw DomainError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} has an endpoint >= n = " +
                              std::to_string(n));
        if (u == v)
            throw DomainError("self-loop at vertex " + std::to_string(u));
        ++deg[u];
        ++deg[v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v)
        offsets_[v + 1] = offsets_[v] + deg[v];
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges) {
        adjacency_[fill[u]++] = v;
        adjacency_[fill[v]++] = u;
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto first = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
        auto last = adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
        std::sort(first, last);
        if (auto dup = std::adjacent_find(first, last); dup != last)
            throw DomainError("duplicate edge {" + std::to_string(std::min<std::size_t>(v, *dup)) + "," +
                              std::to_string(std::max<std::size_t>(v, *dup)) + "}");
    }
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept
{
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::min_degree() const noexcept
{
    std::size_t best = order() ? degree(0) : 0;
    for (Vertex v = 1; v < order(); ++v)
        best = std::min(best, degree(v));
    return best;
}

std::size_t Graph::max_degree() const noexcept
{
    std::size_t best = 0;
    for (Vertex v = 0; v < order(); ++v)
        best = std::max(best, degree(v));
    return best;
}

bool Graph::has_isolated_vertex() const noexcept
{
    for (Vertex v = 0; v < order(); ++v)
        if (degree(v) == 0)
            return true;
    return false;
}

namespace {

// First vertex not reachable from 0, or order() when connected.
std::size_t first_unreached(const Graph& g)
{
    const std::size_t n = g.order();
    if (n == 0)
        return 0;
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return static_cast<std::size_t>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
}

void require_connected(const Graph& g)
{
    if (auto v = first_unreached(g); v != g.order())
        throw DomainError("graph is disconnected: vertex " + std::to_string(v) + " is not reachable from vertex 0");
}

void require_members(const Graph& g, const VertexSet& s)
{
    if (!s.empty() && s.members().back() >= g.order())
        throw DomainError("vertex " + std::to_string(s.members().back()) + " out of range for graph of order " +
                          std::to_string(g.order()));
}

} // namespace

bool Graph::is_connected() const { return first_unreached(*this) == order(); }

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(size());
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

// ---------------------------------------------------------------------------
// Edge-list I/O

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
            ++j;
        if (j > i)
            tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line)
{
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
    return value;
}

} // namespace

Graph parse_graph(std::string_view text)
{
    bool have_header = false;
    std::uint64_t n = 0, m = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> seen;
    std::size_t line_no = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().starts_with('#'))
            continue;
        if (tokens.size() != 2)
            throw ParseError(line_no, "expected two integers, found " + std::to_string(tokens.size()) + " fields");
        std::uint64_t a = parse_id(tokens[0], line_no);
        std::uint64_t b = parse_id(tokens[1], line_no);

        if (!have_header) {
            if (a > std::uint64_t{1} << 31)
                throw ParseError(line_no, "vertex count too large");
            n = a;
            m = b;
            if (n < 2 ? m != 0 : m > n * (n - 1) / 2)
                throw ParseError(line_no, "edge count " + std::to_string(m) + " impossible for a simple graph on " +
                                              std::to_string(n) + " vertices");
            have_header = true;
            seen.resize(n);
            edges.reserve(m);
            continue;
        }
        if (edges.size() == m)
            throw ParseError(line_no, "more edge lines than the declared " + std::to_string(m));
        if (a >= n || b >= n)
            throw ParseError(line_no, "vertex id " + std::to_string(std::max(a, b)) + " >= n = " + std::to_string(n));
        if (a == b)
            throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
        auto u = static_cast<Vertex>(std::min(a, b));
        auto v = static_cast<Vertex>(std::max(a, b));
        if (std::find(seen[u].begin(), seen[u].end(), v) != seen[u].end())
            throw ParseError(line_no, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        seen[u].push_back(v);
        edges.emplace_back(u, v);
    }
    if (!have_header)
        throw ParseError(line_no, "missing 'n m' header");
    if (edges.size() != m)
        throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(n, edges);
}

Graph read_graph(std::istream& in)
{
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_graph(text);
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

std::string format_graph(const Graph& g)
{
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

// ---------------------------------------------------------------------------
// Predicates

CoverValue cover_number(const Graph& g, const VertexSet& a)
{
    require_members(g, a);
    CoverValue total = 0;
    for (Vertex v : a)
        total += g.degree(v);
    return total;
}

namespace {

// Number of members of D adjacent to each vertex (open neighbourhood count).
std::vector<std::uint32_t> hits_from(const Graph& g, const VertexSet& d)
{
    require_members(g, d);
    std::vector<std::uint32_t> hits(g.order(), 0);
    for (Vertex v : d)
        for (Vertex w : g.neighbors(v))
            ++hits[w];
    return hits;
}

} // namespace

bool is_dominating(const Graph& g, const VertexSet& d)
{
    auto hits = hits_from(g, d);
    for (Vertex v = 0; v < g.order(); ++v)
        if (hits[v] == 0 && !d.contains(v))
            return false;
    return true;
}

bool is_total_dominating(const Graph& g, const VertexSet& d)
{
    auto hits = hits_from(g, d);
    return std::all_of(hits.begin(), hits.end(), [](auto h) { return h > 0; });
}

bool is_efficient_dominating(const Graph& g, const VertexSet& d)
{
    auto hits = hits_from(g, d);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (d.contains(v) ? hits[v] != 0 : hits[v] != 1)
            return false;
    }
    return true;
}

bool is_independent(const Graph& g, const VertexSet& d)
{
    auto hits = hits_from(g, d);
    return std::none_of(d.begin(), d.end(), [&](Vertex v) { return hits[v] != 0; });
}

VertexSet private_neighbors(const Graph& g, Vertex v, const VertexSet& d)
{
    require_members(g, d);
    if (!d.contains(v))
        throw DomainError("vertex " + std::to_string(v) + " is not a member of the set");
    std::vector<char> covered(g.order(), 0);
    for (Vertex u : d) {
        if (u == v)
            continue;
        covered[u] = 1;
        for (Vertex w : g.neighbors(u))
            covered[w] = 1;
    }
    std::vector<Vertex> out;
    if (!covered[v])
        out.push_back(v);
    for (Vertex w : g.neighbors(v))
        if (!covered[w])
            out.push_back(w);
    return VertexSet(std::move(out));
}

BlockDecomposition blocks_and_cut_vertices(const Graph& g)
{
    require_connected(g);
    const std::size_t n = g.order();
    BlockDecomposition out;
    if (n == 0)
        return out;
    if (n == 1) {
        out.blocks.push_back(VertexSet{0});
        out.block_edge_counts.push_back(0);
        return out;
    }

    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unvisited), low(n, 0), next_nb(n, 0);
    std::vector<Vertex> parent(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<Vertex> stack;
    std::size_t timer = 0, root_children = 0;

    std::vector<std::pair<VertexSet, std::size_t>> found;

    disc[0] = low[0] = timer++;
    stack.push_back(0);
    while (!stack.empty()) {
        Vertex v = stack.back();
        auto nb = g.neighbors(v);
        if (next_nb[v] < nb.size()) {
            Vertex w = nb[next_nb[v]++];
            if (disc[w] == unvisited) {
                parent[w] = v;
                disc[w] = low[w] = timer++;
                edge_stack.emplace_back(v, w);
                if (v == 0)
                    ++root_children;
                stack.push_back(w);
            } else if (w != parent[v] && disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
            continue;
        }
        stack.pop_back();
        if (stack.empty())
            break;
        Vertex p = parent[v];
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= disc[p]) {
            if (p != 0)
                is_cut[p] = 1;
            std::vector<Vertex> members;
            std::size_t count = 0;
            while (true) {
                Edge e = edge_stack.back();
                edge_stack.pop_back();
                members.push_back(e.first);
                members.push_back(e.second);
                ++count;
                if (e.first == p && e.second == v)
                    break;
            }
            found.emplace_back(VertexSet(std::move(members)), count);
        }
    }
    if (root_children > 1)
        is_cut[0] = 1;

    std::sort(found.begin(), found.end());
    for (auto& [block, count] : found) {
        out.blocks.push_back(std::move(block));
        out.block_edge_counts.push_back(count);
    }
    std::vector<Vertex> cuts;
    for (Vertex v = 0; v < n; ++v)
        if (is_cut[v])
            cuts.push_back(v);
    out.cut_vertices = VertexSet(std::move(cuts));
    return out;
}

bool is_block_graph(const Graph& g)
{
    auto bd = blocks_and_cut_vertices(g);
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        std::size_t k = bd.blocks[i].size();
        if (bd.block_edge_counts[i] != k * (k - 1) / 2)
            return false;
    }
    return true;
}

bool is_p4_free(const Graph& g)
{
    const std::size_t n = g.order();
    if (n < 4)
        return true;
    std::vector<char> adj(n * n, 0);
    for (auto [u, v] : g.edges())
        adj[u * n + v] = adj[v * n + u] = 1;
    auto a = [&](std::size_t x, std::size_t y) { return adj[x * n + y] != 0; };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                int e3 = a(i, j) + a(i, k) + a(j, k);
                if (e3 == 0 || e3 == 3)
                    continue; // adding one vertex to 0 or 3 edges can't give P4
                for (std::size_t l = k + 1; l < n; ++l) {
                    int di = a(i, j) + a(i, k) + a(i, l);
                    int dj = a(j, i) + a(j, k) + a(j, l);
                    int dk = a(k, i) + a(k, j) + a(k, l);
                    int dl = a(l, i) + a(l, j) + a(l, k);
                    if (di + dj + dk + dl != 6)
                        continue;
                    int ones = (di == 1) + (dj == 1) + (dk == 1) + (dl == 1);
                    int twos = (di == 2) + (dj == 2) + (dk == 2) + (dl == 2);
                    if (ones == 2 && twos == 2)
                        return false;
                }
            }
    return true;
}

bool is_tree(const Graph& g) { return g.order() > 0 && g.size() + 1 == g.order() && g.is_connected(); }

bool is_path(const Graph& g) { return is_tree(g) && g.max_degree() <= 2; }

} // namespace domcover
