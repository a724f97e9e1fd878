#include "cli.hpp"

#include "domcover/block_dp.hpp"
#include "domcover/families.hpp"
#include "domcover/graph.hpp"
#include "domcover/oracle.hpp"
#include "domcover/products.hpp"
#include "domcover/tree_dp.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace domcover::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string input;
    std::string family;
    std::vector<std::string> params;
};

struct Options {
    GraphSource main, g, h;
    std::uint64_t seed = 0;
    std::string objective;
    Vertex root = 0;
    bool as_json = false;
    bool witness = false;
    bool timing = false;
    bool total = false;
};

std::map<std::string, std::int64_t> parse_params(const std::vector<std::string>& items)
{
    std::map<std::string, std::int64_t> out;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw UsageError("parameter '" + item + "' is not of the form KEY=VALUE");
        std::string key = item.substr(0, eq);
        std::string value = item.substr(eq + 1);
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(value, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != value.size())
            throw UsageError("parameter '" + key + "' needs an integer value, got '" + value + "'");
        out[key] = v;
    }
    return out;
}

struct LoadedGraph {
    Graph graph;
    json descriptor;
};

LoadedGraph load(const GraphSource& src, std::uint64_t seed, const std::string& what)
{
    if (src.input.empty() == src.family.empty())
        throw UsageError("give exactly one of --input" + what + " or --family" + what);
    if (!src.input.empty()) {
        std::ifstream in(src.input);
        if (!in)
            throw DomainError("cannot open '" + src.input + "'");
        return {read_graph(in), json{{"path", src.input}}};
    }
    FamilySpec spec{parse_family(src.family), parse_params(src.params), seed};
    json params = json::object();
    for (auto& [k, v] : spec.params)
        params[k] = v;
    return {generate(spec), json{{"family", src.family}, {"params", params}, {"seed", seed}}};
}

json set_json(const VertexSet& s) { return json(s.members()); }

json report_json(const DominationReport& r, bool witness)
{
    json j{{"mode", r.mode == DominationMode::plain ? "plain" : "total"},
           {"size", r.size},
           {"cover_min", r.cover_min},
           {"cover_max", r.cover_max}};
    if (witness) {
        j["witness_min"] = set_json(r.witness_min);
        j["witness_max"] = set_json(r.witness_max);
    }
    return j;
}

json solution_json(const Solution& s, bool witness)
{
    json j{{"objective", std::string(to_string(s.objective))}, {"size", s.size}, {"cover", s.cover}};
    if (witness)
        j["witness"] = set_json(s.witness);
    return j;
}

json product_json(const ProductCoverResult& r)
{
    const auto& in = r.ingredients;
    json j{{"mode", std::string(to_string(r.mode))},
           {"value", r.value},
           {"case", std::string(to_string(r.case_used))},
           {"alpha", r.alpha},
           {"ingredients",
            {{"gamma_g", in.gamma_g},
             {"gamma_t_g", in.gamma_t_g},
             {"gamma_h", in.gamma_h},
             {"cover_min_g", in.cover_g.cover_min},
             {"cover_max_g", in.cover_g.cover_max},
             {"total_cover_min_g", in.total_cover_g.cover_min},
             {"total_cover_max_g", in.total_cover_g.cover_max},
             {"cover_min_h", in.cover_h.cover_min},
             {"cover_max_h", in.cover_h.cover_max},
             {"min_degree_h", in.min_degree_h},
             {"max_degree_h", in.max_degree_h},
             {"order_h", in.order_h}}}};
    if (r.case_used == ProductCase::mixed_case)
        j["beta"] = r.beta;
    return j;
}

json audit_json(const BoundAudit& a)
{
    json checks = json::object();
    for (const auto& c : a.checks)
        checks[c.name] = {{"applicable", c.applicable}, {"lhs", c.lhs},   {"rhs", c.rhs},
                          {"holds", c.holds},           {"tight", c.tight}, {"violations", c.violations}};
    return {{"order", a.order},
            {"gamma", a.gamma},
            {"cover_min", a.cover_min},
            {"cover_max", a.cover_max},
            {"gamma_set_count", a.gamma_set_count},
            {"unique_gamma_set", a.unique_gamma_set},
            {"p4_free", a.p4_free},
            {"path", a.path},
            {"checks", checks}};
}

Objective parse_objective(const std::string& s)
{
    if (s.empty() || s == "min")
        return Objective::min;
    if (s == "max")
        return Objective::max;
    throw UsageError("--objective must be min or max");
}

// Flattened "a.b: value" lines for human consumption.
void print_text(std::ostream& out, const json& j, const std::string& prefix = "")
{
    if (j.is_object()) {
        for (auto& [k, v] : j.items())
            print_text(out, v, prefix.empty() ? k : prefix + "." + k);
        return;
    }
    out << prefix << ": " << j.dump() << '\n';
}

struct Outcome {
    json input;
    json results;
    std::optional<std::string> raw; // gen without --json
};

Outcome execute(const std::string& command, const Options& o)
{
    Outcome r;
    if (command == "product" || command == "validate-product") {
        auto g = load(o.g, o.seed, "G");
        auto h = load(o.h, o.seed, "H");
        r.input = {{"G", g.descriptor}, {"H", h.descriptor}};
        if (command == "product") {
            if (o.objective.empty())
                r.results = {{"min", product_json(product_cover_extrema(g.graph, h.graph, Objective::min))},
                             {"max", product_json(product_cover_extrema(g.graph, h.graph, Objective::max))}};
            else
                r.results = product_json(product_cover_extrema(g.graph, h.graph, parse_objective(o.objective)));
        } else {
            auto v = validate_product_theorem(g.graph, h.graph);
            auto side = [&](const ProductCoverResult& f, CoverValue oracle, bool agree) {
                return json{{"formula", f.value},
                            {"oracle", oracle},
                            {"case", std::string(to_string(f.case_used))},
                            {"agree", agree}};
            };
            r.results = {{"gamma", {{"formula", v.gamma_formula}, {"oracle", v.gamma_oracle}, {"agree", v.gamma_agrees()}}},
                         {"min", side(v.min_formula, v.oracle.cover_min, v.min_agrees())},
                         {"max", side(v.max_formula, v.oracle.cover_max, v.max_agrees())},
                         {"agree", v.gamma_agrees() && v.min_agrees() && v.max_agrees()}};
        }
        return r;
    }

    auto loaded = load(o.main, o.seed, "");
    const Graph& g = loaded.graph;
    r.input = loaded.descriptor;
    if (command == "gamma") {
        r.results = {{"order", g.order()}, {"size", g.size()}, {"gamma", gamma(g)}};
    } else if (command == "cover") {
        r.results = report_json(cover_extrema(g), o.witness);
        if (o.witness) {
            auto eff = has_efficient_dominating_set(g);
            r.results["efficient_dominating_set"] = eff ? set_json(*eff) : json(nullptr);
        }
    } else if (command == "total") {
        r.results = report_json(total_cover_extrema(g), o.witness);
    } else if (command == "tree") {
        r.results = solution_json(solve_tree(root_tree(g, o.root), parse_objective(o.objective)), o.witness);
    } else if (command == "block") {
        r.results = solution_json(solve_block_graph(g, parse_objective(o.objective)), o.witness);
    } else if (command == "bounds") {
        r.results = audit_json(audit_bounds(g));
    } else if (command == "enum") {
        auto sets = o.total ? enumerate_gamma_total_sets(g) : enumerate_gamma_sets(g);
        json list = json::array();
        for (const auto& s : sets)
            list.push_back(set_json(s));
        r.results = {{"mode", o.total ? "total" : "plain"},
                     {"size", sets.empty() ? 0 : sets.front().size()},
                     {"count", sets.size()},
                     {"sets", list}};
    } else if (command == "gen") {
        json edges = json::array();
        for (auto [u, v] : g.edges())
            edges.push_back({u, v});
        r.results = {{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
        if (!o.as_json)
            r.raw = format_graph(g);
    }
    return r;
}

void add_source(CLI::App* sub, GraphSource& src, const std::string& suffix)
{
    sub->add_option("--input" + suffix, src.input, "Edge-list file");
    sub->add_option("--family" + suffix, src.family, "Generated family name");
    sub->add_option("--params" + suffix, src.params, "Family parameters KEY=VALUE")->expected(1, -1);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact domination cover numbers: oracles, tree and block-graph DPs, products, bounds"};
    app.name("domcover");
    app.require_subcommand(1);

    Options o;
    const std::vector<std::pair<std::string, std::string>> commands{
        {"gamma", "Domination number"},
        {"cover", "Min/max cover number over gamma-sets (exhaustive)"},
        {"total", "Min/max cover number over gamma_t-sets (exhaustive)"},
        {"tree", "Tree dynamic program"},
        {"block", "Block-graph dynamic program"},
        {"product", "Closed-form cover number of a lexicographic product"},
        {"validate-product", "Closed form vs exhaustive search on the product"},
        {"bounds", "Audit cover-number bounds over every gamma-set"},
        {"gen", "Generate a family member as an edge list"},
        {"enum", "Enumerate all gamma-sets"},
    };
    for (auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (name == "product" || name == "validate-product") {
            add_source(sub, o.g, "G");
            add_source(sub, o.h, "H");
        } else {
            add_source(sub, o.main, "");
        }
        sub->add_option("--seed", o.seed, "Seed for random families");
        sub->add_flag("--json", o.as_json, "Structured output");
        sub->add_flag("--witness", o.witness, "Include witness sets");
        sub->add_flag("--timing", o.timing, "Include wall-clock timing");
        if (name == "tree" || name == "block" || name == "product")
            sub->add_option("--objective", o.objective, "min or max")->check(CLI::IsMember({"min", "max"}));
        if (name == "tree")
            sub->add_option("--root", o.root, "Root vertex");
        if (name == "enum")
            sub->add_flag("--total", o.total, "Enumerate gamma_t-sets instead");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "domcover: " << e.what() << "\n\n" << app.help();
        return exit_usage;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        const auto start = std::chrono::steady_clock::now();
        Outcome r = execute(command, o);
        const auto elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (r.raw) {
            out << *r.raw;
            return exit_ok;
        }
        json record{{"command", command}, {"input", r.input}, {"results", r.results}};
        if (o.timing)
            record["timing"] = {{"wall_ms", elapsed}};
        if (o.as_json)
            out << record.dump(2) << '\n';
        else
            print_text(out, record);
        return exit_ok;
    } catch (const UsageError& e) {
        err << "domcover: " << e.what() << '\n';
        return exit_usage;
    } catch (const CapacityError& e) {
        err << "domcover: capacity: " << e.what() << '\n';
        return exit_capacity;
    } catch (const Error& e) {
        err << "domcover: " << e.what() << '\n';
        return exit_domain;
    }
}

} // namespace domcover::cli
