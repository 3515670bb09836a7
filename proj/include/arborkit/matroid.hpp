// Rank-oracle matroids over the edge set of a graph: the cycle matroid, its
// k-fold union, duals, flats and circuits.

#ifndef ARBORKIT_MATROID_HPP
#define ARBORKIT_MATROID_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "arborkit/graph.hpp"

namespace arborkit {

/// A matroid given only by its rank function on subsets of a ground set.
struct RankOracle {
    std::size_t ground_size = 0;
    std::function<int(const EdgeSubset&)> rank;

    int operator()(const EdgeSubset& x) const { return rank(x); }
};

/// Rank of every subset of a ground set of at most 30 elements, indexed by mask.
class RankTable {
public:
    explicit RankTable(const RankOracle& oracle);

    std::size_t ground_size() const noexcept { return ground_size_; }
    int operator[](std::uint64_t mask) const { return ranks_[static_cast<std::size_t>(mask)]; }
    std::uint64_t full_mask() const noexcept { return (std::uint64_t{1} << ground_size_) - 1; }

private:
    std::size_t ground_size_;
    std::vector<int> ranks_;
};

/// Edges of `g` packed into k edge-disjoint forests, grown by matroid-partition
/// augmenting paths. Copyable so search code can snapshot and restore it.
class ForestPacking {
public:
    ForestPacking(const Graph& g, int k);

    int k() const noexcept { return k_; }
    /// Forest holding each edge, or -1 when the edge is unpacked.
    const std::vector<int>& owner() const noexcept { return owner_; }
    int packed_count() const noexcept { return packed_; }

    /// Inserts `e`, rearranging the forests along a shortest exchange path. On
    /// failure the packing is unchanged and, if `blocked` is non-null, it receives
    /// every edge reached by the search (including `e`). That set T satisfies
    /// |T| = k * rank(T) + 1 with respect to the cycle matroid.
    bool insert(EdgeId e, EdgeSubset* blocked = nullptr);

    std::vector<EdgeSubset> forests() const;

private:
    // Edges of the path joining the endpoints inside a forest, nullopt if disconnected.
    std::optional<std::vector<EdgeId>> forest_path(int forest, Vertex from, Vertex to,
                                    const std::vector<std::vector<EdgeId>>& adjacency) const;

    const Graph* g_;
    int k_;
    std::vector<int> owner_;
    int packed_ = 0;
};

RankOracle cycle_matroid(const Graph& g);
/// Rank oracle of the k-fold union of the cycle matroid of g.
RankOracle union_matroid(const Graph& g, int k);
RankOracle dual(RankOracle base);

/// n(X) - c(X).
int cycle_rank(const Graph& g, const EdgeSubset& x);

/// Rank of X in the k-fold union of the cycle matroid, computed by augmenting
/// paths restricted to X.
int union_rank(const Graph& g, int k, const EdgeSubset& x);

/// Same value as union_rank via min over T of |X \ T| + k * cycle_rank(T); |X| <= 20.
int union_rank_bruteforce(const Graph& g, int k, const EdgeSubset& x);

/// |X| + r(E \ X) - r(E).
int dual_rank(const RankOracle& base, const EdgeSubset& x);

/// Every flat, ordered by mask value. Throws SizeLimitError above `limit`.
std::vector<EdgeSubset> enumerate_flats(const RankOracle& oracle, std::size_t limit = 14);
std::vector<std::uint64_t> enumerate_flat_masks(const RankTable& table);

bool is_flat(const RankOracle& oracle, const EdgeSubset& x);
bool is_circuit(const RankOracle& oracle, const EdgeSubset& c);

}  // namespace arborkit

#endif  // ARBORKIT_MATROID_HPP
