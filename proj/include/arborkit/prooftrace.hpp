// Exhaustive desk-scale checks of the matroid argument behind the
// "k forests plus a matching" decomposition: N is the dual of the k-fold union
// of the cycle matroid, and every claim about N is recomputed from primitives.

#ifndef ARBORKIT_PROOFTRACE_HPP
#define ARBORKIT_PROOFTRACE_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "arborkit/domination.hpp"
#include "arborkit/graph.hpp"
#include "arborkit/matroid.hpp"
#include "arborkit/rational.hpp"

namespace arborkit {

inline constexpr std::size_t prooftrace_default_limit = 14;

/// rank_N(X) = |X| + rank_k(E \ X) - rank_k(E) with rank_k the k-fold union rank.
RankOracle build_dual_union_oracle(const Graph& g, int k);

/// Masks of edge sets coverable by k forests, by subset dynamic programming over
/// acyclic sets (no matroid theory involved). Needs |E| <= 20.
std::vector<char> forest_coverable_table(const Graph& g, int k);

struct LinkCheck {
    bool cover_exists = false;         // E = k forests + a matching
    bool matching_base_exists = false;  // some base of N is a matching

    bool agree() const noexcept { return cover_exists == matching_base_exists; }
};

LinkCheck check_link(const Graph& g, int k, std::size_t limit = prooftrace_default_limit);

/// X independent in N iff X avoids some basic set (a maximum k-forest-coverable set).
bool check_basic_observation(const Graph& g, int k, std::size_t limit = prooftrace_default_limit);

/// One flat F of N, described through its complement X = E \ F.
struct FlatRecord {
    EdgeSubset complement;
    int min_degree = 0;  // of the edge-induced subgraph on X; 0 when X is empty
    bool mindeg_ok = true;
    DominationResult gamma_p;  // of the edge-induced subgraph on X
    int required = 0;          // |X| - rank_k(X)
    bool inters_ok = true;
};

struct MindegCheck {
    std::vector<FlatRecord> records;
    bool ok = true;
};

/// Every flat's complement induces an empty graph or one of min degree >= k+1.
MindegCheck check_mindeg_flats(const Graph& g, int k, std::size_t limit = prooftrace_default_limit);

struct IntersCheck {
    std::vector<FlatRecord> records;
    bool hypothesis = false;  // frac arboricity <= k + 1/(3k+2)
    bool ok = true;           // gamma_P(G[X]) >= |X| - rank_k(X) for every record
};

IntersCheck check_inters_condition(const Graph& g, int k, std::size_t limit = prooftrace_default_limit);

enum class Verdict { pass, fail, inconclusive };
std::string_view to_string(Verdict v);

struct ProofTraceReport {
    int n = 0;
    int m = 0;
    int k = 1;
    Rational bound;
    bool frac_infinite = false;
    Rational frac_arboricity;
    bool hypothesis = false;
    int flats_of_n = 0;
    std::vector<FlatRecord> flats;  // sorted by complement mask
    LinkCheck link;
    bool link_ok = false;
    bool basic_obs_ok = false;
    bool mindeg_ok = false;
    bool inters_ok = false;
    Verdict verdict = Verdict::fail;
};

/// FAIL when a claim that holds for every graph is contradicted; INCONCLUSIVE
/// when only the 2-path lower bound is too weak under the density hypothesis.
ProofTraceReport run_prooftrace(const Graph& g, int k, std::size_t limit = prooftrace_default_limit);

}  // namespace arborkit

#endif  // ARBORKIT_PROOFTRACE_HPP
