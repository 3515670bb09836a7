#include "arborkit/arboricity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "arborkit/matroid.hpp"
#include "maxflow.hpp"

namespace arborkit {

PartitionResult partition_into_forests(const Graph& g, int k) {
    if (k < 0) throw Error("partition_into_forests: k must be nonnegative");
    PartitionResult result;
    ForestPacking packing(g, k);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        EdgeSubset blocked;
        if (!packing.insert(e, &blocked)) {
            result.violation = std::move(blocked);
            return result;
        }
    }
    result.forests = packing.forests();
    return result;
}

Rational induced_density(const Graph& g, const std::vector<Vertex>& vertices) {
    auto sub = vertex_induced_subgraph(g, vertices);
    if (sub.graph.vertex_count() < 2) throw Error("density needs at least two vertices");
    return Rational(sub.graph.edge_count(), sub.graph.vertex_count() - 1);
}

ArboricityResult arboricity(const Graph& g) {
    ArboricityResult result;
    if (g.has_loop()) {
        result.infinite = true;
        return result;
    }
    if (g.edge_count() == 0) return result;

    int k = 1;
    std::optional<EdgeSubset> last_violation;
    for (;; ++k) {
        auto attempt = partition_into_forests(g, k);
        if (attempt.ok()) break;
        last_violation = std::move(attempt.violation);
    }
    result.value = k;

    if (!last_violation) {
        const Edge& e = g.edge(0);
        result.witness = {std::min(e.u, e.v), std::max(e.u, e.v)};
        return result;
    }
    // |T| > (k-1) r(T) summed over components of G[T] forces one component
    // with |E_c| > (k-1)(n_c - 1).
    auto sub = edge_induced_subgraph(g, *last_violation);
    UnionFind uf(sub.graph.vertex_count());
    for (const Edge& e : sub.graph.edges()) uf.unite(e.u, e.v);
    std::map<int, std::pair<int, std::vector<Vertex>>> components;  // root -> (edges, vertices)
    for (Vertex v = 0; v < sub.graph.vertex_count(); ++v)
        components[uf.find(v)].second.push_back(sub.original_vertex[static_cast<std::size_t>(v)]);
    for (const Edge& e : sub.graph.edges()) ++components[uf.find(e.u)].first;
    for (auto& [root, comp] : components) {
        auto& [edges, vertices] = comp;
        if (vertices.size() >= 2 &&
            static_cast<long long>(edges) > static_cast<long long>(k - 1) * (static_cast<long long>(vertices.size()) - 1)) {
            std::sort(vertices.begin(), vertices.end());
            result.witness = vertices;
            break;
        }
    }
    if (result.witness.empty() || ceil(induced_density(g, result.witness)) != k)
        throw std::logic_error("arboricity: violation certificate did not yield a witness");
    return result;
}

namespace {

FracArbResult frac_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw SizeLimitError("fractional_arboricity bruteforce", static_cast<std::size_t>(n), 16);
    FracArbResult result;
    std::vector<std::uint32_t> endpoints;
    for (const Edge& e : g.edges()) endpoints.push_back((1U << e.u) | (1U << e.v));
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size < 2) continue;
        int inside = 0;
        for (std::uint32_t ep : endpoints)
            if ((ep & mask) == ep) ++inside;
        if (inside == 0) continue;
        Rational density(inside, size - 1);
        if (density > result.value) {
            result.value = density;
            best_mask = mask;
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if ((best_mask >> v) & 1U) result.witness.push_back(v);
    return result;
}

// Max over S containing `forced` of q|E(S)| - p|S|, as a project-selection cut:
// each vertex pair with c parallel edges earns q*c and requires both endpoints,
// each selected vertex costs p.
std::pair<std::int64_t, std::vector<Vertex>> best_closure(
    int n, const std::map<std::pair<Vertex, Vertex>, int>& pairs, std::int64_t p, std::int64_t q,
    Vertex forced, std::int64_t total_edges) {
    const int source = n + static_cast<int>(pairs.size());
    const int sink = source + 1;
    detail::MaxFlow flow(sink + 1);
    int node = n;
    for (const auto& [pair, count] : pairs) {
        flow.add_arc(source, node, q * count);
        flow.add_arc(node, pair.first, detail::MaxFlow::infinite);
        flow.add_arc(node, pair.second, detail::MaxFlow::infinite);
        ++node;
    }
    for (Vertex v = 0; v < n; ++v) flow.add_arc(v, sink, p);
    flow.add_arc(source, forced, detail::MaxFlow::infinite);
    std::int64_t cut = flow.run(source, sink);
    auto side = flow.source_side(source);
    std::vector<Vertex> chosen;
    for (Vertex v = 0; v < n; ++v)
        if (side[static_cast<std::size_t>(v)]) chosen.push_back(v);
    return {q * total_edges - cut, chosen};
}

FracArbResult frac_exact(const Graph& g) {
    FracArbResult result;
    const int n = g.vertex_count();
    std::map<std::pair<Vertex, Vertex>, int> pairs;
    for (const Edge& e : g.edges()) ++pairs[{std::min(e.u, e.v), std::max(e.u, e.v)}];
    std::vector<int> degree = g.degrees();

    std::vector<Vertex> current(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) current[static_cast<std::size_t>(v)] = v;
    Rational lambda(g.edge_count(), n - 1);

    for (;;) {
        ++result.iterations;
        const std::int64_t p = lambda.numerator();
        const std::int64_t q = lambda.denominator();
        // q * (|E(S)| - lambda (|S| - 1)); a lone forced vertex scores exactly 0.
        std::int64_t best_gain = 0;
        std::vector<Vertex> best_set;
        for (Vertex v = 0; v < n; ++v) {
            if (degree[static_cast<std::size_t>(v)] == 0) continue;
            auto [closure, chosen] = best_closure(n, pairs, p, q, v, g.edge_count());
            std::int64_t gain = closure + p;
            if (gain > best_gain) {
                best_gain = gain;
                best_set = std::move(chosen);
            }
        }
        if (best_gain <= 0) break;
        Rational next = induced_density(g, best_set);
        if (!(next > lambda)) throw std::logic_error("fractional_arboricity: lambda did not increase");
        lambda = next;
        current = std::move(best_set);
    }
    result.value = lambda;
    result.witness = std::move(current);
    return result;
}

}  // namespace

FracArbResult fractional_arboricity(const Graph& g, FracMode mode) {
    if (g.has_loop()) {
        FracArbResult r;
        r.infinite = true;
        return r;
    }
    if (g.edge_count() == 0) return {};
    return mode == FracMode::exact ? frac_exact(g) : frac_bruteforce(g);
}

bool check_subgraph_bound(const Graph& g, const EdgeSubset& x, const FracArbResult& frac) {
    validate(g, x);
    if (frac.infinite) return true;
    auto stats = subset_stats(g, x);
    return Rational(static_cast<std::int64_t>(x.size())) <=
           frac.value * Rational(stats.vertex_count - stats.component_count);
}

bool check_subgraph_bound(const Graph& g, const EdgeSubset& x) {
    return check_subgraph_bound(g, x, fractional_arboricity(g));
}

}  // namespace arborkit
