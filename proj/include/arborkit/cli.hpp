#ifndef ARBORKIT_CLI_HPP
#define ARBORKIT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "arborkit/decompose.hpp"
#include "arborkit/json_io.hpp"
#include "arborkit/rational.hpp"

namespace arborkit {

enum class BoundSelector { theorem5, theorem2i, theorem2ii, conjecture, custom };

struct ExperimentConfig {
    int k_min = 1;
    int k_max = 1;
    int n_min = 8;
    int n_max = 8;
    int trials = 20;
    std::uint64_t seed = 1;
    BoundSelector selector = BoundSelector::theorem5;
    int conjecture_k = 1;
    int conjecture_d = 1;
    Rational custom_bound{1};
    RemainderKind kind = RemainderKind::matching;  // custom selector only
    int d = 1;                                     // custom selector only
    bool allow_parallel = false;
    int max_rejections = 20000;
    int jobs = 1;
};

/// "theorem5", "theorem2i", "theorem2ii", "conjecture:K,D" or a rational "p/q".
void parse_bound_selector(const std::string& text, ExperimentConfig& config);

struct ExperimentRow {
    int k = 0;
    int n = 0;
    Rational bound;
    RemainderKind kind = RemainderKind::matching;
    int d = 1;
    int attempted = 0;
    int generated = 0;
    int gen_failed = 0;
    int decomposed = 0;
    int verified = 0;
    int exhausted = 0;
    double wall_ms = 0;
};

/// Cell parameters (k, bound, remainder kind, d) for a selector.
struct CellPlan {
    int k;
    Rational bound;
    RemainderKind kind;
    int d;
};
std::vector<CellPlan> plan_cells(const ExperimentConfig& config);

/// Seed of trial `trial` in cell (k, n); independent of execution order.
std::uint64_t trial_seed(std::uint64_t seed, int k, int n, int trial);

/// Rows in canonical (k, n) order regardless of `jobs`.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config);

/// Aligned text table with a fixed column order, header only when empty.
std::string report_table(const std::vector<ExperimentRow>& rows);
Json report_json(const std::vector<ExperimentRow>& rows);

/// Whole command line including the program name. Exit codes: 0 success or
/// verified, 1 exhausted/inconclusive/failed verdicts, 2 usage or input errors.
int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace arborkit

#endif  // ARBORKIT_CLI_HPP
