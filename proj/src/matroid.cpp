#include "arborkit/matroid.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

namespace arborkit {

RankTable::RankTable(const RankOracle& oracle) : ground_size_(oracle.ground_size) {
    if (ground_size_ > 30) throw SizeLimitError("rank table", ground_size_, 30);
    ranks_.resize(std::size_t{1} << ground_size_);
    for (std::uint64_t mask = 0; mask < ranks_.size(); ++mask)
        ranks_[static_cast<std::size_t>(mask)] = oracle(EdgeSubset::from_mask(ground_size_, mask));
}

// --------------------------------------------------------- ForestPacking

ForestPacking::ForestPacking(const Graph& g, int k)
    : g_(&g), k_(k), owner_(static_cast<std::size_t>(g.edge_count()), -1) {
    if (k < 0) throw Error("forest count must be nonnegative");
}

std::optional<std::vector<EdgeId>> ForestPacking::forest_path(
    int forest, Vertex from, Vertex to, const std::vector<std::vector<EdgeId>>& adjacency) const {
    // adjacency is indexed by forest * n + vertex.
    const int n = g_->vertex_count();
    if (from == to) return std::vector<EdgeId>{};
    std::vector<EdgeId> via(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::deque<Vertex> queue{from};
    seen[static_cast<std::size_t>(from)] = 1;
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        if (x == to) break;
        for (EdgeId e : adjacency[static_cast<std::size_t>(forest * n + x)]) {
            Vertex y = g_->edge(e).other(x);
            if (seen[static_cast<std::size_t>(y)]) continue;
            seen[static_cast<std::size_t>(y)] = 1;
            via[static_cast<std::size_t>(y)] = e;
            queue.push_back(y);
        }
    }
    if (!seen[static_cast<std::size_t>(to)]) return std::nullopt;
    std::vector<EdgeId> path;
    for (Vertex x = to; x != from;) {
        EdgeId e = via[static_cast<std::size_t>(x)];
        path.push_back(e);
        x = g_->edge(e).other(x);
    }
    return path;
}

bool ForestPacking::insert(EdgeId e, EdgeSubset* blocked) {
    const int m = g_->edge_count();
    const int n = g_->vertex_count();
    if (e < 0 || e >= m) throw Error("edge id out of range: " + std::to_string(e));
    if (owner_[static_cast<std::size_t>(e)] >= 0) return true;

    std::vector<std::vector<EdgeId>> adjacency(static_cast<std::size_t>(k_) * static_cast<std::size_t>(n));
    for (EdgeId f = 0; f < m; ++f) {
        int i = owner_[static_cast<std::size_t>(f)];
        if (i < 0) continue;
        const Edge& ed = g_->edge(f);
        adjacency[static_cast<std::size_t>(i * n + ed.u)].push_back(f);
        adjacency[static_cast<std::size_t>(i * n + ed.v)].push_back(f);
    }

    // BFS over the exchange graph: x -> y when y lies on the cycle x closes in
    // y's forest. Shortest paths keep every exchange valid simultaneously.
    std::vector<EdgeId> parent(static_cast<std::size_t>(m), -1);
    std::vector<char> labelled(static_cast<std::size_t>(m), 0);
    std::deque<EdgeId> queue{e};
    labelled[static_cast<std::size_t>(e)] = 1;
    while (!queue.empty()) {
        EdgeId x = queue.front();
        queue.pop_front();
        const Edge& ex = g_->edge(x);
        for (int i = 0; i < k_; ++i) {
            if (owner_[static_cast<std::size_t>(x)] == i) continue;
            auto path = forest_path(i, ex.u, ex.v, adjacency);
            if (!path) {
                // x fits into forest i; shift the chain back to e.
                int target = i;
                for (EdgeId cur = x; cur >= 0; cur = parent[static_cast<std::size_t>(cur)]) {
                    int previous = owner_[static_cast<std::size_t>(cur)];
                    owner_[static_cast<std::size_t>(cur)] = target;
                    target = previous;
                }
                ++packed_;
                return true;
            }
            for (EdgeId y : *path) {
                if (labelled[static_cast<std::size_t>(y)]) continue;
                labelled[static_cast<std::size_t>(y)] = 1;
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
        }
    }
    if (blocked != nullptr) {
        *blocked = EdgeSubset(static_cast<std::size_t>(m));
        for (EdgeId f = 0; f < m; ++f)
            if (labelled[static_cast<std::size_t>(f)]) blocked->insert(f);
    }
    return false;
}

std::vector<EdgeSubset> ForestPacking::forests() const {
    std::vector<EdgeSubset> out(static_cast<std::size_t>(k_), EdgeSubset(owner_.size()));
    for (std::size_t f = 0; f < owner_.size(); ++f)
        if (owner_[f] >= 0) out[static_cast<std::size_t>(owner_[f])].insert(static_cast<EdgeId>(f));
    return out;
}

// ---------------------------------------------------------------- ranks

int cycle_rank(const Graph& g, const EdgeSubset& x) {
    validate(g, x);
    UnionFind uf(g.vertex_count());
    int rank = 0;
    for (EdgeId e : x.ids())
        if (uf.unite(g.edge(e).u, g.edge(e).v)) ++rank;
    return rank;
}

int union_rank(const Graph& g, int k, const EdgeSubset& x) {
    validate(g, x);
    if (k < 1) throw Error("union_rank: k must be positive");
    ForestPacking packing(g, k);
    for (EdgeId e : x.ids()) packing.insert(e);
    return packing.packed_count();
}

int union_rank_bruteforce(const Graph& g, int k, const EdgeSubset& x) {
    validate(g, x);
    if (k < 1) throw Error("union_rank: k must be positive");
    auto ids = x.ids();
    if (ids.size() > 20) throw SizeLimitError("union_rank_bruteforce", ids.size(), 20);
    int best = static_cast<int>(ids.size());
    const std::uint64_t subsets = std::uint64_t{1} << ids.size();
    for (std::uint64_t sel = 0; sel < subsets; ++sel) {
        EdgeSubset t(x.host_size());
        int size = 0;
        for (std::size_t i = 0; i < ids.size(); ++i)
            if ((sel >> i) & 1U) {
                t.insert(ids[i]);
                ++size;
            }
        int value = static_cast<int>(ids.size()) - size + k * cycle_rank(g, t);
        best = std::min(best, value);
    }
    return best;
}

RankOracle cycle_matroid(const Graph& g) {
    return {static_cast<std::size_t>(g.edge_count()),
            [g](const EdgeSubset& x) { return cycle_rank(g, x); }};
}

RankOracle union_matroid(const Graph& g, int k) {
    if (k < 1) throw Error("union_matroid: k must be positive");
    return {static_cast<std::size_t>(g.edge_count()),
            [g, k](const EdgeSubset& x) { return union_rank(g, k, x); }};
}

int dual_rank(const RankOracle& base, const EdgeSubset& x) {
    if (x.host_size() != base.ground_size) throw Error("dual_rank: subset outside ground set");
    return static_cast<int>(x.size()) + base(x.complement()) -
           base(EdgeSubset::full(base.ground_size));
}

RankOracle dual(RankOracle base) {
    const int full_rank = base(EdgeSubset::full(base.ground_size));
    const std::size_t size = base.ground_size;
    return {size, [base = std::move(base), full_rank](const EdgeSubset& x) {
                if (x.host_size() != base.ground_size)
                    throw Error("dual rank: subset outside ground set");
                return static_cast<int>(x.size()) + base(x.complement()) - full_rank;
            }};
}

// -------------------------------------------------------- flats, circuits

bool is_flat(const RankOracle& oracle, const EdgeSubset& x) {
    const int r = oracle(x);
    for (std::size_t e = 0; e < oracle.ground_size; ++e) {
        if (x.contains(static_cast<EdgeId>(e))) continue;
        EdgeSubset y = x;
        y.insert(static_cast<EdgeId>(e));
        if (oracle(y) != r + 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> enumerate_flat_masks(const RankTable& table) {
    std::vector<std::uint64_t> flats;
    const std::size_t size = table.ground_size();
    for (std::uint64_t mask = 0; mask <= table.full_mask(); ++mask) {
        bool flat = true;
        for (std::size_t e = 0; e < size && flat; ++e) {
            std::uint64_t bit = std::uint64_t{1} << e;
            if (mask & bit) continue;
            if (table[mask | bit] != table[mask] + 1) flat = false;
        }
        if (flat) flats.push_back(mask);
    }
    return flats;
}

std::vector<EdgeSubset> enumerate_flats(const RankOracle& oracle, std::size_t limit) {
    if (oracle.ground_size > limit || oracle.ground_size > 30)
        throw SizeLimitError("enumerate_flats", oracle.ground_size, std::min<std::size_t>(limit, 30));
    RankTable table(oracle);
    std::vector<EdgeSubset> out;
    for (std::uint64_t mask : enumerate_flat_masks(table))
        out.push_back(EdgeSubset::from_mask(oracle.ground_size, mask));
    return out;
}

bool is_circuit(const RankOracle& oracle, const EdgeSubset& c) {
    if (c.empty()) return false;
    if (oracle(c) >= static_cast<int>(c.size())) return false;
    for (EdgeId e : c.ids()) {
        EdgeSubset smaller = c;
        smaller.erase(e);
        if (oracle(smaller) != static_cast<int>(smaller.size())) return false;
    }
    return true;
}

}  // namespace arborkit
