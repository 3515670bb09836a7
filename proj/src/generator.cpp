#include "arborkit/generator.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <unordered_set>

#include "arborkit/arboricity.hpp"

namespace arborkit {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error("Rng::below: empty range");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

GenerationError::GenerationError(int attempts, int accepted_before)
    : Error("generator exhausted: " + std::to_string(accepted_before) + "/" + std::to_string(attempts) +
            " draws met the bound (acceptance rate " + std::to_string(accepted_before) + "/" +
            std::to_string(attempts) + ")") {}

namespace {

Graph draw(int n, int m, bool allow_parallel, Rng& rng) {
    Graph g(n);
    std::set<std::pair<Vertex, Vertex>> used;
    while (g.edge_count() < m) {
        auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
        auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - 1)));
        if (v >= u) ++v;
        if (u > v) std::swap(u, v);
        if (!allow_parallel && !used.insert({u, v}).second) continue;
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace

GenResult generate(const GenSpec& spec) {
    if (spec.n < 0) throw Error("generate: negative vertex count");
    if (spec.n <= 1) return {Graph(spec.n), 1};
    if (spec.target_bound < Rational(1)) throw Error("generate: target bound below 1 needs n <= 1");
    const Rational scaled = spec.target_bound * Rational(spec.n - 1);
    const auto m = static_cast<int>(scaled.numerator() / scaled.denominator());
    const long long pairs = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
    if (!spec.allow_parallel && m > pairs)
        throw Error("generate: " + std::to_string(m) + " edges do not fit a simple graph on " +
                    std::to_string(spec.n) + " vertices");

    Rng rng(spec.seed);
    for (int attempt = 1; attempt <= spec.max_rejections + 1; ++attempt) {
        Graph g = draw(spec.n, m, spec.allow_parallel, rng);
        auto frac = fractional_arboricity(g);
        if (frac.value <= spec.target_bound) return {std::move(g), attempt};
    }
    throw GenerationError(spec.max_rejections + 1, 0);
}

Graph random_multigraph(int n, int m, std::uint64_t seed) {
    if (m > 0 && n < 2) throw Error("random_multigraph: need two vertices for loop-free edges");
    Rng rng(seed);
    return draw(n, m, true, rng);
}

// ------------------------------------------------------------- catalog

namespace {

using Adjacency = std::array<std::uint8_t, 8>;

std::uint32_t encode(const Adjacency& adj, int n, const std::array<int, 8>& label) {
    Adjacency relabelled{};
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if ((adj[static_cast<std::size_t>(v)] >> w) & 1U)
                relabelled[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] |=
                    static_cast<std::uint8_t>(1U << label[static_cast<std::size_t>(w)]);
    std::uint32_t code = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((relabelled[static_cast<std::size_t>(i)] >> j) & 1U) code |= 1U << bit;
    return code;
}

// Minimum code over labelings that order vertices by degree, which makes the
// result an isomorphism invariant.
std::uint32_t canonical_code(const Adjacency& adj, int n) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto degree = [&](int v) { return std::popcount(static_cast<unsigned>(adj[static_cast<std::size_t>(v)])); };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree(a) < degree(b); });

    std::vector<std::pair<int, int>> classes;  // [begin, end) into order
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && degree(order[static_cast<std::size_t>(j)]) == degree(order[static_cast<std::size_t>(i)])) ++j;
        classes.emplace_back(i, j);
        i = j;
    }

    std::uint32_t best = ~std::uint32_t{0};
    std::vector<int> current = order;
    auto recurse = [&](auto&& self, std::size_t cls) -> void {
        if (cls == classes.size()) {
            std::array<int, 8> label{};
            for (int pos = 0; pos < n; ++pos) label[static_cast<std::size_t>(current[static_cast<std::size_t>(pos)])] = pos;
            best = std::min(best, encode(adj, n, label));
            return;
        }
        auto [b, e] = classes[cls];
        std::sort(current.begin() + b, current.begin() + e);
        do {
            self(self, cls + 1);
        } while (std::next_permutation(current.begin() + b, current.begin() + e));
    };
    recurse(recurse, 0);
    return best;
}

bool connected(const Adjacency& adj, int n) {
    std::uint8_t seen = 1;
    std::uint8_t frontier = 1;
    while (frontier) {
        std::uint8_t next = 0;
        for (int v = 0; v < n; ++v)
            if ((frontier >> v) & 1U) next |= adj[static_cast<std::size_t>(v)];
        frontier = static_cast<std::uint8_t>(next & ~seen);
        seen |= next;
    }
    return std::popcount(static_cast<unsigned>(seen)) == n;
}

}  // namespace

std::vector<Graph> connected_graph_catalog(int max_n) {
    if (max_n > 8) throw SizeLimitError("connected_graph_catalog", static_cast<std::size_t>(max_n), 8);
    std::vector<Graph> out;
    std::vector<Adjacency> level{Adjacency{}};  // every graph on 1 vertex
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) {
            std::vector<Adjacency> next;
            std::unordered_set<std::uint32_t> seen;
            for (const Adjacency& base : level) {
                for (unsigned nbrs = 0; nbrs < (1U << (n - 1)); ++nbrs) {
                    Adjacency adj = base;
                    adj[static_cast<std::size_t>(n - 1)] = static_cast<std::uint8_t>(nbrs);
                    for (int v = 0; v < n - 1; ++v)
                        if ((nbrs >> v) & 1U) adj[static_cast<std::size_t>(v)] |= static_cast<std::uint8_t>(1U << (n - 1));
                    if (seen.insert(canonical_code(adj, n)).second) next.push_back(adj);
                }
            }
            level = std::move(next);
        }
        std::vector<std::pair<std::uint32_t, Graph>> found;
        for (const Adjacency& adj : level) {
            if (!connected(adj, n)) continue;
            Graph g(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if ((adj[static_cast<std::size_t>(i)] >> j) & 1U) g.add_edge(i, j);
            found.emplace_back(canonical_code(adj, n), std::move(g));
        }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
            if (a.second.edge_count() != b.second.edge_count()) return a.second.edge_count() < b.second.edge_count();
            return a.first < b.first;
        });
        for (auto& [code, g] : found) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace arborkit
