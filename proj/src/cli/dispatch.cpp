#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "arborkit/arboricity.hpp"
#include "arborkit/cli.hpp"
#include "arborkit/generator.hpp"
#include "arborkit/matroid.hpp"

namespace arborkit {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

std::string join(const std::vector<EdgeId>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? " " : "") + std::to_string(ids[i]);
    return s;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open JSON file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed JSON in '" + path + "': " + e.what());
    }
}

int cmd_arboricity(const std::string& file, bool json, std::ostream& out) {
    Graph g = read_graph_file(file);
    auto r = arboricity(g);
    if (json) {
        print_json(out, arboricity_json(r));
    } else if (r.infinite) {
        out << "infinite (graph has a loop)\n";
    } else {
        out << r.value << '\n';
        if (!r.witness.empty()) out << "witness vertices: " << join(r.witness) << '\n';
    }
    return exit_ok;
}

int cmd_frac(const std::string& file, const std::string& mode_name, bool json, std::ostream& out) {
    Graph g = read_graph_file(file);
    FracMode mode = mode_name == "brute" ? FracMode::bruteforce : FracMode::exact;
    auto r = fractional_arboricity(g, mode);
    if (json) {
        print_json(out, frac_json(r, mode));
    } else {
        out << (r.infinite ? std::string("infinite") : to_string(r.value)) << '\n';
        if (!r.witness.empty()) out << "witness vertices: " << join(r.witness) << '\n';
    }
    return exit_ok;
}

int cmd_partition(const std::string& file, int k, bool json, std::ostream& out) {
    Graph g = read_graph_file(file);
    auto r = partition_into_forests(g, k);
    if (json) {
        print_json(out, partition_json(r, k));
    } else if (r.ok()) {
        for (std::size_t i = 0; i < r.forests.size(); ++i)
            out << "forest " << i << ": " << join(r.forests[i].ids()) << '\n';
    } else {
        out << "no partition into " << k << " forest(s); violating set T (|T| = " << r.violation->size()
            << " > " << k << " * " << cycle_rank(g, *r.violation) << "): " << join(r.violation->ids()) << '\n';
    }
    return r.ok() ? exit_ok : exit_negative;
}

int cmd_decompose(const std::string& file, int k, std::optional<int> d, std::optional<std::string> kind_name,
                  bool json, std::ostream& out) {
    Graph g = read_graph_file(file);
    RemainderKind kind = kind_name ? parse_remainder_kind(*kind_name)
                                   : (d && *d > 1 ? RemainderKind::graph : RemainderKind::matching);
    const int degree = kind == RemainderKind::matching ? 1 : d.value_or(1);
    SearchOutcome outcome = kind == RemainderKind::matching
                                ? decompose_forests_matching(g, k)
                                : decompose_forests_bounded(g, k, degree, kind, desk_scale_limit(22));
    if (json) {
        print_json(out, decomposition_json(outcome, k, degree, kind));
        return outcome.exhausted() ? exit_negative : exit_ok;
    }
    if (outcome.exhausted()) {
        out << "status: exhausted\n";
        out << "no decomposition into " << k << " forest(s) and a " << to_string(kind);
        if (kind != RemainderKind::matching) out << " of max degree " << degree;
        out << " exists (complete search, " << outcome.stats.nodes << " nodes)\n";
        if (kind == RemainderKind::matching && k >= 1) {
            auto frac = fractional_arboricity(g);
            Rational bound = Threshold{k}.bound();
            if (frac.infinite || frac.value > bound)
                out << "fractional arboricity " << (frac.infinite ? "infinite" : to_string(frac.value))
                    << " exceeds the guaranteed bound " << to_string(bound)
                    << "; this is a search certificate, not a counterexample\n";
            else
                out << "fractional arboricity " << to_string(frac.value) << " is within the guaranteed bound "
                    << to_string(bound) << "; this contradicts the guarantee\n";
        }
        return exit_negative;
    }
    const Decomposition& dec = *outcome.decomposition;
    out << "status: ok\n";
    for (std::size_t i = 0; i < dec.forests.size(); ++i)
        out << "forest " << i << ": " << join(dec.forests[i].ids()) << '\n';
    out << "remainder (" << to_string(kind) << "): " << join(dec.remainder.ids()) << '\n';
    return exit_ok;
}

int cmd_domination(const std::string& file, const std::string& kind, bool json, std::ostream& out) {
    Graph g = read_graph_file(file);
    const bool two_path = kind == "two-path";
    auto r = two_path ? two_path_domination(g, desk_scale_limit(24)) : edge_domination(g, desk_scale_limit(24));
    if (json) {
        print_json(out, domination_json(r, two_path));
        return exit_ok;
    }
    if (r.infinite) {
        out << "infinite (" << (two_path ? "a component has exactly one edge" : "isolated vertex") << ")\n";
        return exit_ok;
    }
    out << r.value << '\n';
    if (two_path) {
        for (const TwoPath& p : r.two_paths)
            out << "2-path " << p.vertices[0] << '-' << p.vertices[1] << '-' << p.vertices[2] << " (edges "
                << p.first << ' ' << p.second << ")\n";
    } else {
        out << "witness edges: " << join(r.edges) << '\n';
    }
    return exit_ok;
}

int cmd_prooftrace(const std::string& file, int k, std::optional<std::size_t> max_edges, bool json,
                   std::ostream& out) {
    Graph g = read_graph_file(file);
    const std::size_t limit = max_edges.value_or(desk_scale_limit(prooftrace_default_limit));
    auto r = run_prooftrace(g, k, limit);
    if (json) {
        print_json(out, prooftrace_json(r));
    } else {
        out << "graph: n=" << r.n << " m=" << r.m << " k=" << r.k << '\n';
        out << "fractional arboricity " << (r.frac_infinite ? "infinite" : to_string(r.frac_arboricity))
            << (r.hypothesis ? " <= " : " > ") << to_string(r.bound)
            << (r.hypothesis ? "" : " (density hypothesis not met)") << '\n';
        out << "flats of N: " << r.flats_of_n << '\n';
        out << "link (cover <=> matching base): " << (r.link_ok ? "ok" : "FAIL") << '\n';
        out << "independent <=> avoids a basic set: " << (r.basic_obs_ok ? "ok" : "FAIL") << '\n';
        out << "flat complements have min degree >= k+1: " << (r.mindeg_ok ? "ok" : "FAIL") << '\n';
        out << "gamma_P >= |X| - rank_k(X) on flat complements: "
            << (r.inters_ok ? "sufficient condition verified" : "not verified") << '\n';
        out << "verdict: " << to_string(r.verdict) << '\n';
    }
    return r.verdict == Verdict::pass ? exit_ok : exit_negative;
}

int cmd_gen(int n, const std::string& bound, std::uint64_t seed, bool parallel, int max_rejections,
            const std::string& output, std::ostream& out) {
    GenSpec spec;
    spec.n = n;
    spec.target_bound = parse_rational(bound);
    spec.seed = seed;
    spec.allow_parallel = parallel;
    spec.max_rejections = max_rejections;
    GenResult r = generate(spec);
    std::string text = serialize_graph(r.graph);
    if (output.empty() || output == "-") {
        out << text;
    } else {
        std::ofstream file(output, std::ios::binary);
        if (!file) throw Error("cannot write '" + output + "'");
        file << "# arborkit gen --n " << n << " --bound " << to_string(spec.target_bound) << " --seed " << seed
             << (parallel ? " --parallel-edges" : "") << '\n'
             << text;
        out << "wrote " << output << " (n=" << r.graph.vertex_count() << ", m=" << r.graph.edge_count()
            << ", accepted after " << r.attempts << " draws)\n";
    }
    return exit_ok;
}

int cmd_experiment(ExperimentConfig config, const std::string& bound, const std::string& output, bool json,
                   std::ostream& out) {
    parse_bound_selector(bound, config);
    auto rows = run_experiment(config);
    Json report = report_json(rows);
    if (json)
        print_json(out, report);
    else
        out << report_table(rows);
    if (!output.empty()) {
        std::ofstream file(output);
        if (!file) throw Error("cannot write '" + output + "'");
        file << report.dump(2) << '\n';
    }
    const bool backed = config.selector == BoundSelector::theorem5 || config.selector == BoundSelector::theorem2i ||
                        config.selector == BoundSelector::theorem2ii;
    bool bad = false;
    for (const ExperimentRow& r : rows) {
        if (r.verified != r.decomposed) bad = true;
        if (backed && r.exhausted > 0) bad = true;
    }
    return bad ? exit_negative : exit_ok;
}

int verify_document(const Graph& g, const Json& doc, std::optional<int> k_flag, std::optional<int> d_flag,
                    std::ostream& out) {
    std::string object = doc.value("object", std::string());
    if (object.empty()) {
        if (doc.contains("violation")) object = "partition";
        else if (doc.contains("forests")) object = "decomposition";
        else if (doc.contains("witness_vertices")) object = "frac";
    }
    auto k_of = [&]() {
        if (k_flag) return *k_flag;
        if (doc.contains("k")) return doc["k"].get<int>();
        throw Error("verify: --k is required for this document");
    };
    const auto m = static_cast<std::size_t>(g.edge_count());

    if (object == "partition" && doc.contains("violation")) {
        const int k = k_of();
        EdgeSubset t = edge_subset_from_json(doc["violation"], m);
        const int rank = cycle_rank(g, t);
        const bool ok = static_cast<long long>(t.size()) > static_cast<long long>(k) * rank;
        out << (ok ? "verified" : "FAILED") << ": |T| = " << t.size() << (ok ? " > " : " <= ") << k << " * "
            << rank << '\n';
        return ok ? exit_ok : exit_negative;
    }
    if (object == "partition" || object == "decomposition") {
        if (doc.value("status", std::string("ok")) == "exhausted") {
            out << "document records an exhausted search; nothing to verify\n";
            return exit_negative;
        }
        const int k = k_of();
        const int d = d_flag ? *d_flag : doc.value("d", 1);
        Decomposition dec = decomposition_from_json(doc, m);
        auto v = verify_decomposition(g, dec, k, d);
        out << (v.ok ? "verified" : "FAILED: " + v.clause) << '\n';
        return v.ok ? exit_ok : exit_negative;
    }
    if (object == "frac" || object == "arboricity") {
        std::vector<Vertex> witness = doc.at("witness_vertices").get<std::vector<Vertex>>();
        const Json& value = doc.at("value");
        if (value.is_string() && value.get<std::string>() == "infinite") {
            out << (g.has_loop() ? "verified: graph has a loop\n" : "FAILED: no loop but value infinite\n");
            return g.has_loop() ? exit_ok : exit_negative;
        }
        bool ok;
        if (witness.empty()) {
            ok = g.edge_count() == 0;
        } else if (object == "frac") {
            Rational claimed = parse_rational(value.get<std::string>());
            ok = induced_density(g, witness) == claimed && fractional_arboricity(g).value == claimed;
        } else {
            ok = ceil(induced_density(g, witness)) == value.get<int>() && arboricity(g).value == value.get<int>();
        }
        out << (ok ? "verified" : "FAILED: witness does not attain the value") << '\n';
        return ok ? exit_ok : exit_negative;
    }
    if (object == "domination") {
        const bool two_path = doc.value("kind", std::string("edge")) == "two-path";
        const Json& value = doc.at("value");
        auto fresh = two_path ? two_path_domination(g, desk_scale_limit(24)) : edge_domination(g, desk_scale_limit(24));
        bool ok;
        if (value.is_string()) {
            ok = fresh.infinite;
        } else {
            std::size_t size = doc.at("witness").size();
            bool dom;
            if (two_path) {
                std::vector<TwoPath> paths;
                for (const auto& p : doc["witness"])
                    paths.push_back(make_two_path(g, p.at("edges")[0].get<EdgeId>(), p.at("edges")[1].get<EdgeId>()));
                dom = dominates(g, paths);
            } else {
                auto ids = doc["witness"].get<std::vector<EdgeId>>();
                for (EdgeId e : ids)
                    if (e < 0 || e >= g.edge_count()) throw Error("edge id out of range in witness");
                dom = dominates(g, ids);
            }
            ok = dom && !fresh.infinite && static_cast<int>(size) == value.get<int>() && fresh.value == value.get<int>();
        }
        out << (ok ? "verified" : "FAILED: witness or value does not match") << '\n';
        return ok ? exit_ok : exit_negative;
    }
    if (object == "prooftrace") {
        const int k = k_of();
        auto fresh = prooftrace_json(run_prooftrace(g, k, std::max<std::size_t>(m, prooftrace_default_limit)));
        const bool ok = fresh == doc;
        out << (ok ? "verified: report reproduced" : "FAILED: report differs from a fresh run") << '\n';
        return ok ? exit_ok : exit_negative;
    }
    throw Error("verify: unsupported document object '" + object + "'");
}

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"arborkit: exact arboricity, forest decompositions and their certificates", "arborkit"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string file;
    bool json = false;
    int k = 1;

    auto* arb = app.add_subcommand("arboricity", "integer arboricity with a dense witness");
    arb->add_option("file", file, "graph file")->required();
    arb->add_flag("--json", json);
    arb->callback([&] { action = [&] { return cmd_arboricity(file, json, out); }; });

    std::string mode = "exact";
    auto* frac = app.add_subcommand("frac", "fractional arboricity as an exact rational");
    frac->add_option("file", file, "graph file")->required();
    frac->add_option("--mode", mode)->check(CLI::IsMember({"exact", "brute"}));
    frac->add_flag("--json", json);
    frac->callback([&] { action = [&] { return cmd_frac(file, mode, json, out); }; });

    auto* part = app.add_subcommand("partition", "partition into k forests or a violating set");
    part->add_option("file", file, "graph file")->required();
    part->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    part->add_flag("--json", json);
    part->callback([&] { action = [&] { return cmd_partition(file, k, json, out); }; });

    std::optional<int> d;
    std::optional<std::string> kind;
    auto* dec = app.add_subcommand("decompose", "k forests plus a matching or bounded-degree part");
    dec->add_option("file", file, "graph file")->required();
    dec->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    dec->add_option("--d", d)->check(CLI::PositiveNumber);
    dec->add_option("--kind", kind)->check(CLI::IsMember({"matching", "forest", "graph"}));
    dec->add_flag("--json", json);
    dec->callback([&] { action = [&] { return cmd_decompose(file, k, d, kind, json, out); }; });

    std::string dom_kind = "edge";
    auto* dom = app.add_subcommand("domination", "edge or 2-path domination number");
    dom->add_option("file", file, "graph file")->required();
    dom->add_option("--kind", dom_kind)->required()->check(CLI::IsMember({"edge", "two-path"}));
    dom->add_flag("--json", json);
    dom->callback([&] { action = [&] { return cmd_domination(file, dom_kind, json, out); }; });

    std::optional<std::size_t> max_edges;
    auto* trace = app.add_subcommand("prooftrace", "exhaustive check of the matroid argument");
    trace->add_option("file", file, "graph file")->required();
    trace->add_option("--k", k)->required()->check(CLI::PositiveNumber);
    trace->add_option("--max-edges", max_edges);
    trace->add_flag("--json", json);
    trace->callback([&] { action = [&] { return cmd_prooftrace(file, k, max_edges, json, out); }; });

    int n = 0;
    std::string bound;
    std::uint64_t seed = 0;
    bool parallel = false;
    int max_rejections = 100000;
    std::string output;
    auto* gen = app.add_subcommand("gen", "random graph below a fractional-arboricity bound");
    gen->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    gen->add_option("--bound", bound)->required();
    gen->add_option("--seed", seed)->required();
    gen->add_flag("--parallel-edges", parallel);
    gen->add_option("--max-rejections", max_rejections);
    gen->add_option("-o,--output", output);
    gen->callback([&] { action = [&] { return cmd_gen(n, bound, seed, parallel, max_rejections, output, out); }; });

    ExperimentConfig config;
    std::vector<int> k_range{1};
    std::vector<int> n_range{8};
    std::string selector = "theorem5";
    std::string custom_kind = "matching";
    auto* exp = app.add_subcommand("experiment", "success rates over seeded random instances");
    exp->add_option("--k", k_range, "k range: K or KMIN KMAX")->expected(1, 2);
    exp->add_option("--n", n_range, "n range: N or NMIN NMAX")->expected(1, 2);
    exp->add_option("--trials", config.trials);
    exp->add_option("--seed", config.seed);
    exp->add_option("--bound", selector, "theorem5 | theorem2i | theorem2ii | conjecture:K,D | p/q");
    exp->add_option("--kind", custom_kind)->check(CLI::IsMember({"matching", "forest", "graph"}));
    exp->add_option("--d", config.d)->check(CLI::PositiveNumber);
    exp->add_flag("--parallel-edges", config.allow_parallel);
    exp->add_option("--max-rejections", config.max_rejections);
    exp->add_option("--jobs", config.jobs)->check(CLI::PositiveNumber);
    exp->add_option("-o,--output", output);
    exp->add_flag("--json", json);
    exp->callback([&] {
        action = [&] {
            config.k_min = k_range.front();
            config.k_max = k_range.back();
            config.n_min = n_range.front();
            config.n_max = n_range.back();
            config.kind = parse_remainder_kind(custom_kind);
            return cmd_experiment(config, selector, output, json, out);
        };
    });

    std::string document;
    std::optional<int> k_opt;
    auto* ver = app.add_subcommand("verify", "re-check a JSON result against a graph");
    ver->add_option("file", file, "graph file")->required();
    ver->add_option("--k", k_opt)->check(CLI::NonNegativeNumber);
    ver->add_option("--d", d)->check(CLI::PositiveNumber);
    ver->add_option("--decomposition,--result", document, "JSON document to verify")->required();
    ver->callback([&] {
        action = [&] { return verify_document(read_graph_file(file), read_json_file(document), k_opt, d, out); };
    });

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        if (!args.empty()) args.pop_back();  // program name
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        if (code != 0) err << app.help();
        return code == 0 ? exit_ok : exit_usage;
    }
    try {
        return action ? action() : exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace arborkit
