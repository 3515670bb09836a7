#ifndef ARBORKIT_ARBORICITY_HPP
#define ARBORKIT_ARBORICITY_HPP

#include <optional>
#include <vector>

#include "arborkit/graph.hpp"
#include "arborkit/rational.hpp"

namespace arborkit {

/// Either k forests covering every edge or a set T with |T| > k * cycle_rank(T).
struct PartitionResult {
    std::vector<EdgeSubset> forests;
    std::optional<EdgeSubset> violation;

    bool ok() const noexcept { return !violation.has_value(); }
};

/// k = 0 is accepted: it succeeds only on an edgeless graph.
PartitionResult partition_into_forests(const Graph& g, int k);

struct ArboricityResult {
    bool infinite = false;  // a loop can never be covered
    int value = 0;
    std::vector<Vertex> witness;  // vertex set H with ceil(|E(H)| / (|V(H)| - 1)) == value
};

ArboricityResult arboricity(const Graph& g);

enum class FracMode { exact, bruteforce };

struct FracArbResult {
    bool infinite = false;
    Rational value{0};
    std::vector<Vertex> witness;  // attains value as an induced subgraph; empty when edgeless
    int iterations = 0;           // Dinkelbach rounds (exact mode only)
};

/// Max over subgraphs with at least two vertices of |E(H)| / (|V(H)| - 1).
/// Bruteforce mode scans vertex subsets and needs at most 16 vertices.
FracArbResult fractional_arboricity(const Graph& g, FracMode mode = FracMode::exact);

/// Density |E(H)| / (|V(H)| - 1) of the subgraph induced by `vertices` (at least two).
Rational induced_density(const Graph& g, const std::vector<Vertex>& vertices);

/// |E(H)| <= frac * (|V(H)| - c(H)) for the edge-induced subgraph H = G[x].
/// A graph with a loop has unbounded fractional arboricity and always passes.
bool check_subgraph_bound(const Graph& g, const EdgeSubset& x);
bool check_subgraph_bound(const Graph& g, const EdgeSubset& x, const FracArbResult& frac);

}  // namespace arborkit

#endif  // ARBORKIT_ARBORICITY_HPP
