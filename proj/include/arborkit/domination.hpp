// Exact edge-domination and 2-path-domination numbers.
//
// The 2-path domination number of G is the edge-domination number of its line
// graph; it lower-bounds the connectivity parameter of the matching complex.

#ifndef ARBORKIT_DOMINATION_HPP
#define ARBORKIT_DOMINATION_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "arborkit/graph.hpp"
#include "arborkit/rational.hpp"

namespace arborkit {

/// Two distinct edges of G sharing an endpoint, written as a vertex walk
/// (end, middle, end). A parallel pair reads (u, v, u).
struct TwoPath {
    EdgeId first = 0;
    EdgeId second = 0;
    std::array<Vertex, 3> vertices{};
};

struct DominationResult {
    bool infinite = false;
    int value = 0;
    std::vector<EdgeId> edges;      // edge-domination witness
    std::vector<TwoPath> two_paths;  // 2-path witness (two_path_domination only)
};

/// Every vertex is incident with an edge of D or adjacent to a vertex that is.
bool dominates(const Graph& h, const std::vector<EdgeId>& d);
/// Every edge of G belongs to or shares an endpoint with an edge of some 2-path.
bool dominates(const Graph& g, const std::vector<TwoPath>& paths);

DominationResult edge_domination(const Graph& h, std::size_t edge_limit = 24);
/// Computed on the line graph; the gate applies to |E(G)|.
DominationResult two_path_domination(const Graph& g, std::size_t edge_limit = 24);

TwoPath make_two_path(const Graph& g, EdgeId first, EdgeId second);

struct ConnChainReport {
    int k = 1;
    int n = 0;
    int m = 0;
    int min_degree = 0;
    Rational epsilon;
    Rational frac_arboricity;  // meaningless when frac_infinite
    bool frac_infinite = false;
    bool hypothesis_density = false;  // frac arboricity <= k + epsilon
    bool hypothesis_degree = false;   // min degree >= k + 1
    DominationResult gamma_p;         // eta_lower_bound
    int n_star = 0;                   // vertices of the union of witness 2-paths
    int m_star = 0;                   // edges of that union
    bool ineq_degree = false;         // (k+1) n - m <= (k+1) n* - m*
    bool ineq_star = false;           // n* <= (3/2) m*
    bool ineq_density = false;        // m < n (k + epsilon)
    bool conclusion = false;          // gamma_P >= epsilon n

    bool hypotheses() const noexcept { return hypothesis_density && hypothesis_degree; }
};

/// n* <= (3/2) m* for the union of an arbitrary 2-path family.
bool star_inequality(const Graph& g, const std::vector<TwoPath>& paths, int* n_star = nullptr,
                     int* m_star = nullptr);

ConnChainReport check_conn_chain(const Graph& h, int k, std::size_t edge_limit = 24);

}  // namespace arborkit

#endif  // ARBORKIT_DOMINATION_HPP
