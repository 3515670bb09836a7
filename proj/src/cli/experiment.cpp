#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "arborkit/arboricity.hpp"
#include "arborkit/cli.hpp"
#include "arborkit/generator.hpp"

namespace arborkit {

void parse_bound_selector(const std::string& text, ExperimentConfig& config) {
    if (text == "theorem5") {
        config.selector = BoundSelector::theorem5;
    } else if (text == "theorem2i") {
        config.selector = BoundSelector::theorem2i;
    } else if (text == "theorem2ii") {
        config.selector = BoundSelector::theorem2ii;
    } else if (text.rfind("conjecture:", 0) == 0) {
        auto args = text.substr(11);
        auto comma = args.find(',');
        if (comma == std::string::npos) throw Error("conjecture selector needs 'conjecture:K,D'");
        config.selector = BoundSelector::conjecture;
        config.conjecture_k = std::stoi(args.substr(0, comma));
        config.conjecture_d = std::stoi(args.substr(comma + 1));
        if (config.conjecture_k < 1 || config.conjecture_d < 1) throw Error("conjecture K and D must be positive");
    } else {
        config.selector = BoundSelector::custom;
        config.custom_bound = parse_rational(text);
    }
}

std::vector<CellPlan> plan_cells(const ExperimentConfig& c) {
    std::vector<CellPlan> plans;
    switch (c.selector) {
        case BoundSelector::theorem5:
            for (int k = c.k_min; k <= c.k_max; ++k)
                plans.push_back({k, Threshold{k}.bound(), RemainderKind::matching, 1});
            break;
        case BoundSelector::theorem2i:
            plans.push_back({1, Rational(4, 3), RemainderKind::matching, 1});
            break;
        case BoundSelector::theorem2ii:
            plans.push_back({1, Rational(3, 2), RemainderKind::forest, 2});
            break;
        case BoundSelector::conjecture:
            plans.push_back({c.conjecture_k, Threshold::conjecture_bound(c.conjecture_k, c.conjecture_d),
                             RemainderKind::forest, c.conjecture_d});
            break;
        case BoundSelector::custom:
            for (int k = c.k_min; k <= c.k_max; ++k) plans.push_back({k, c.custom_bound, c.kind, c.d});
            break;
    }
    return plans;
}

std::uint64_t trial_seed(std::uint64_t seed, int k, int n, int trial) {
    return mix_seed(mix_seed(mix_seed(seed, static_cast<std::uint64_t>(k)), static_cast<std::uint64_t>(n)),
                    static_cast<std::uint64_t>(trial));
}

namespace {

ExperimentRow run_cell(const ExperimentConfig& config, const CellPlan& plan, int n) {
    ExperimentRow row;
    row.k = plan.k;
    row.n = n;
    row.bound = plan.bound;
    row.kind = plan.kind;
    row.d = plan.d;
    auto start = std::chrono::steady_clock::now();
    for (int t = 0; t < config.trials; ++t) {
        ++row.attempted;
        GenSpec spec;
        spec.n = n;
        spec.target_bound = plan.bound;
        spec.allow_parallel = config.allow_parallel;
        spec.seed = trial_seed(config.seed, plan.k, n, t);
        spec.max_rejections = config.max_rejections;
        Graph g;
        try {
            g = generate(spec).graph;
        } catch (const Error&) {
            ++row.gen_failed;
            continue;
        }
        ++row.generated;
        SearchOutcome outcome = plan.kind == RemainderKind::matching
                                    ? decompose_forests_matching(g, plan.k)
                                    : decompose_forests_bounded(g, plan.k, plan.d, plan.kind);
        if (outcome.exhausted()) {
            ++row.exhausted;
            continue;
        }
        ++row.decomposed;
        if (verify_decomposition(g, *outcome.decomposition, plan.k, plan.d).ok) ++row.verified;
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config) {
    if (config.trials < 0 || config.n_min > config.n_max || config.k_min > config.k_max || config.k_min < 1)
        throw Error("invalid experiment ranges");
    struct Cell {
        CellPlan plan;
        int n;
    };
    std::vector<Cell> cells;
    for (const CellPlan& plan : plan_cells(config))
        for (int n = config.n_min; n <= config.n_max; ++n) cells.push_back({plan, n});

    std::vector<ExperimentRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) rows[i] = run_cell(config, cells[i].plan, cells[i].n);
    };
    const int jobs = std::max(1, std::min<int>(config.jobs, static_cast<int>(cells.size())));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return rows;
}

std::string report_table(const std::vector<ExperimentRow>& rows) {
    std::ostringstream os;
    const char* cols[] = {"k", "n", "bound", "kind", "d", "attempted", "generated", "gen_failed",
                          "decomposed", "verified", "exhausted", "success", "wall_ms"};
    const int widths[] = {3, 4, 8, 9, 3, 10, 10, 11, 11, 9, 10, 9, 10};
    for (std::size_t i = 0; i < std::size(cols); ++i) os << std::setw(widths[i]) << cols[i];
    os << '\n';
    for (const ExperimentRow& r : rows) {
        std::string success = std::to_string(r.decomposed) + "/" + std::to_string(r.generated);
        std::ostringstream ms;
        ms << std::fixed << std::setprecision(1) << r.wall_ms;
        os << std::setw(widths[0]) << r.k << std::setw(widths[1]) << r.n << std::setw(widths[2])
           << to_string(r.bound) << std::setw(widths[3]) << to_string(r.kind) << std::setw(widths[4]) << r.d
           << std::setw(widths[5]) << r.attempted << std::setw(widths[6]) << r.generated << std::setw(widths[7])
           << r.gen_failed << std::setw(widths[8]) << r.decomposed << std::setw(widths[9]) << r.verified
           << std::setw(widths[10]) << r.exhausted << std::setw(widths[11]) << success << std::setw(widths[12])
           << ms.str() << '\n';
    }
    return os.str();
}

Json report_json(const std::vector<ExperimentRow>& rows) {
    Json j;
    j["schema"] = json_schema_version;
    j["object"] = "experiment";
    Json arr = Json::array();
    for (const ExperimentRow& r : rows) {
        arr.push_back({{"k", r.k},
                       {"n", r.n},
                       {"bound", to_string(r.bound)},
                       {"kind", std::string(to_string(r.kind))},
                       {"d", r.d},
                       {"attempted", r.attempted},
                       {"generated", r.generated},
                       {"gen_failed", r.gen_failed},
                       {"decomposed", r.decomposed},
                       {"verified", r.verified},
                       {"exhausted", r.exhausted},
                       {"success", std::to_string(r.decomposed) + "/" + std::to_string(r.generated)},
                       {"wall_ms", r.wall_ms}});
    }
    j["rows"] = std::move(arr);
    return j;
}

}  // namespace arborkit
