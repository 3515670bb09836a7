#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

#include "arborkit/generator.hpp"

namespace oracle {

namespace {

struct Dsu {
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    }
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
    std::vector<int> parent;
};

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

bool has_bit(Mask m, int i) { return (m >> i) & 1U; }

// Calls visit(mask) for every size-s subset of {0..n-1}, stopping when it returns true.
template <typename Visit>
bool for_each_combination(int n, int s, Visit visit) {
    std::vector<int> pick(idx(s));
    std::iota(pick.begin(), pick.end(), 0);
    if (s > n) return false;
    while (true) {
        Mask m = 0;
        for (int p : pick) m |= Mask{1} << p;
        if (visit(m, pick)) return true;
        int i = s - 1;
        while (i >= 0 && pick[idx(i)] == n - s + i) --i;
        if (i < 0) return false;
        ++pick[idx(i)];
        for (int j = i + 1; j < s; ++j) pick[idx(j)] = pick[idx(j - 1)] + 1;
    }
}

void assign(const Graph& g, int k, int e, int used, Mask mask, std::vector<std::vector<int>>& label,
            std::vector<char>& out) {
    if (e == g.edge_count()) {
        out[static_cast<std::size_t>(mask)] = 1;
        return;
    }
    assign(g, k, e + 1, used, mask, label, out);
    const auto& edge = g.edge(e);
    for (int f = 0; f < std::min(k, used + 1); ++f) {
        auto& lab = label[idx(f)];
        int a = lab[idx(edge.u)];
        int b = lab[idx(edge.v)];
        if (a == b) continue;
        std::vector<int> saved = lab;
        for (int& x : lab)
            if (x == b) x = a;
        assign(g, k, e + 1, std::max(used, f + 1), mask | (Mask{1} << e), label, out);
        lab = std::move(saved);
    }
}

}  // namespace

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int vertices) {
    Graph g(vertices);
    for (int i = 0; i + 1 < vertices; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

std::vector<CorpusEntry> random_corpus(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusEntry> out;
    for (int i = 0; i < count; ++i) {
        int n = 2 + static_cast<int>(rng() % 9);
        int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n));
        Graph g(n);
        while (g.edge_count() < m) {
            auto u = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
            auto v = static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n));
            if (u != v) g.add_edge(u, v);
        }
        out.push_back({"random-" + std::to_string(i), std::move(g)});
    }
    return out;
}

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> all = [] {
        std::vector<CorpusEntry> out;
        auto catalog = arborkit::connected_graph_catalog(7);
        for (std::size_t i = 0; i < catalog.size(); ++i)
            out.push_back({"catalog-" + std::to_string(i), std::move(catalog[i])});
        for (auto& entry : random_corpus(200, 20240611)) out.push_back(std::move(entry));
        return out;
    }();
    return all;
}

std::uint64_t canonical_code(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> adj(idx(n), std::vector<char>(idx(n), 0));
    for (const auto& e : g.edges()) adj[idx(e.u)][idx(e.v)] = adj[idx(e.v)][idx(e.u)] = 1;
    std::vector<int> perm(idx(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) code = (code << 1) | static_cast<std::uint64_t>(adj[idx(perm[idx(i)])][idx(perm[idx(j)])]);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    Dsu dsu(g.vertex_count());
    int parts = g.vertex_count();
    for (const auto& e : g.edges())
        if (dsu.join(e.u, e.v)) --parts;
    return parts == 1;
}

int count_connected_classes(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::set<std::uint64_t> classes;
    for (Mask m = 0; m < (Mask{1} << pairs.size()); ++m) {
        Graph g(n);
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (has_bit(m, static_cast<int>(p))) g.add_edge(pairs[p].first, pairs[p].second);
        if (is_connected(g)) classes.insert(canonical_code(g));
    }
    return static_cast<int>(classes.size());
}

Mask full_mask(const Graph& g) { return g.edge_count() == 64 ? ~Mask{0} : (Mask{1} << g.edge_count()) - 1; }

int spanning_forest_size(const Graph& g, Mask edges) {
    Dsu dsu(g.vertex_count());
    int size = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (has_bit(edges, e) && dsu.join(g.edge(e).u, g.edge(e).v)) ++size;
    return size;
}

bool is_forest(const Graph& g, Mask edges) { return spanning_forest_size(g, edges) == std::popcount(edges); }

int incident_vertex_count(const Graph& g, Mask edges) {
    std::set<Vertex> seen;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!has_bit(edges, e)) continue;
        seen.insert(g.edge(e).u);
        seen.insert(g.edge(e).v);
    }
    return static_cast<int>(seen.size());
}

int component_count(const Graph& g, Mask edges) {
    return incident_vertex_count(g, edges) - spanning_forest_size(g, edges);
}

bool is_matching(const Graph& g, Mask edges) {
    std::vector<int> used(idx(g.vertex_count()), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!has_bit(edges, e)) continue;
        if (g.edge(e).is_loop()) return false;
        if (used[idx(g.edge(e).u)]++ || used[idx(g.edge(e).v)]++) return false;
    }
    return true;
}

int min_degree(const Graph& g, Mask edges) {
    std::vector<int> deg(idx(g.vertex_count()), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!has_bit(edges, e)) continue;
        ++deg[idx(g.edge(e).u)];
        ++deg[idx(g.edge(e).v)];
    }
    int best = 0;
    bool any = false;
    for (int d : deg) {
        if (d == 0) continue;
        best = any ? std::min(best, d) : d;
        any = true;
    }
    return best;
}

std::vector<char> coverable_sets(const Graph& g, int k) {
    std::vector<char> out(std::size_t{1} << g.edge_count(), 0);
    std::vector<std::vector<int>> label(idx(k), std::vector<int>(idx(g.vertex_count())));
    for (auto& lab : label) std::iota(lab.begin(), lab.end(), 0);
    assign(g, k, 0, 0, 0, label, out);
    return out;
}

std::vector<int> union_ranks_by_cover(const Graph& g, int k) {
    auto cover = coverable_sets(g, k);
    std::vector<int> rank(cover.size(), 0);
    for (Mask x = 0; x < cover.size(); ++x) {
        if (cover[x]) {
            rank[x] = std::popcount(x);
            continue;
        }
        for (Mask rest = x; rest; rest &= rest - 1)
            rank[x] = std::max(rank[x], rank[x & ~(rest & -rest)]);
    }
    return rank;
}

std::vector<int> cycle_ranks(const Graph& g) {
    std::vector<int> rank(std::size_t{1} << g.edge_count());
    for (Mask x = 0; x < rank.size(); ++x) rank[x] = spanning_forest_size(g, x);
    return rank;
}

std::vector<int> union_ranks_by_min_formula(const Graph& g, int k) {
    auto r = cycle_ranks(g);
    std::vector<int> rank(r.size());
    for (Mask x = 0; x < r.size(); ++x) {
        int best = std::popcount(x);
        for (Mask t = x;; t = (t - 1) & x) {
            best = std::min(best, std::popcount(x & ~t) + k * r[t]);
            if (t == 0) break;
        }
        rank[x] = best;
    }
    return rank;
}

std::vector<int> dual_ranks_by_bases(const std::vector<int>& primal) {
    const Mask full = primal.size() - 1;
    std::vector<Mask> bases;
    for (Mask b = 0; b <= full; ++b)
        if (primal[b] == std::popcount(b) && primal[b] == primal[full]) bases.push_back(b);
    std::vector<int> rank(primal.size(), 0);
    for (Mask x = 0; x <= full; ++x)
        for (Mask b : bases) rank[x] = std::max(rank[x], std::popcount(x & ~b));
    return rank;
}

std::vector<Mask> flats(const std::vector<int>& ranks) {
    const Mask full = ranks.size() - 1;
    std::vector<Mask> out;
    for (Mask x = 0; x <= full; ++x) {
        bool flat = true;
        for (Mask rest = full & ~x; rest && flat; rest &= rest - 1)
            flat = ranks[x | (rest & -rest)] == ranks[x] + 1;
        if (flat) out.push_back(x);
    }
    return out;
}

std::vector<Mask> circuits(const std::vector<int>& ranks) {
    std::vector<Mask> out;
    for (Mask c = 1; c < ranks.size(); ++c) {
        const int size = std::popcount(c);
        if (ranks[c] >= size) continue;
        bool minimal = true;
        for (Mask rest = c; rest && minimal; rest &= rest - 1) minimal = ranks[c & ~(rest & -rest)] == size - 1;
        if (minimal) out.push_back(c);
    }
    return out;
}

std::vector<Mask> all_matchings(const Graph& g) {
    std::vector<Mask> out;
    for (Mask m = 0; m <= full_mask(g); ++m)
        if (is_matching(g, m)) out.push_back(m);
    return out;
}

namespace {

bool cover_search(const Graph& g, const std::vector<EdgeId>& edges, std::size_t next, int used,
                  std::vector<std::vector<int>>& label) {
    if (next == edges.size()) return true;
    const auto& edge = g.edge(edges[next]);
    const int k = static_cast<int>(label.size());
    for (int f = 0; f < std::min(k, used + 1); ++f) {
        auto& lab = label[idx(f)];
        int a = lab[idx(edge.u)];
        int b = lab[idx(edge.v)];
        if (a == b) continue;
        std::vector<int> saved = lab;
        for (int& x : lab)
            if (x == b) x = a;
        bool found = cover_search(g, edges, next + 1, std::max(used, f + 1), label);
        lab = std::move(saved);
        if (found) return true;
    }
    return false;
}

bool coverable(const Graph& g, Mask edges, int k) {
    if (std::popcount(edges) > k * std::max(0, g.vertex_count() - 1)) return false;
    std::vector<EdgeId> list;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (has_bit(edges, e)) list.push_back(e);
    std::vector<std::vector<int>> label(idx(k), std::vector<int>(idx(g.vertex_count())));
    for (auto& lab : label) std::iota(lab.begin(), lab.end(), 0);
    return cover_search(g, list, 0, 0, label);
}

}  // namespace

std::optional<Mask> forests_plus_matching(const Graph& g, int k) {
    for (Mask m : all_matchings(g))
        if (coverable(g, full_mask(g) & ~m, k)) return m;
    return std::nullopt;
}

std::optional<int> edge_domination_number(const Graph& h) {
    const int n = h.vertex_count();
    std::vector<char> touched(idx(n), 0);
    for (const auto& e : h.edges()) touched[idx(e.u)] = touched[idx(e.v)] = 1;
    if (std::find(touched.begin(), touched.end(), 0) != touched.end()) return std::nullopt;
    auto dominated = [&](const std::vector<int>& pick) {
        std::vector<char> covered(idx(n), 0);
        for (int e : pick) covered[idx(h.edge(e).u)] = covered[idx(h.edge(e).v)] = 1;
        std::vector<char> ok = covered;
        for (const auto& e : h.edges()) {
            if (covered[idx(e.u)]) ok[idx(e.v)] = 1;
            if (covered[idx(e.v)]) ok[idx(e.u)] = 1;
        }
        return std::find(ok.begin(), ok.end(), 0) == ok.end();
    };
    for (int s = 0; s <= h.edge_count(); ++s)
        if (for_each_combination(h.edge_count(), s, [&](Mask, const std::vector<int>& pick) { return dominated(pick); }))
            return s;
    return std::nullopt;
}

bool paths_dominate(const Graph& g, const std::vector<PathPair>& paths) {
    std::vector<char> hit(idx(g.vertex_count()), 0);
    for (const auto& p : paths)
        for (EdgeId e : {p.a, p.b}) hit[idx(g.edge(e).u)] = hit[idx(g.edge(e).v)] = 1;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const arborkit::Edge& e) { return hit[idx(e.u)] || hit[idx(e.v)]; });
}

std::optional<int> two_path_domination_number(const Graph& g, std::vector<PathPair>* witness) {
    std::vector<PathPair> pairs;
    for (EdgeId a = 0; a < g.edge_count(); ++a)
        for (EdgeId b = a + 1; b < g.edge_count(); ++b)
            if (g.edge(b).touches(g.edge(a).u) || g.edge(b).touches(g.edge(a).v)) pairs.push_back({a, b});
    if (!paths_dominate(g, pairs)) return std::nullopt;
    const int p = static_cast<int>(pairs.size());
    for (int s = 0; s <= p; ++s) {
        std::vector<PathPair> chosen;
        bool found = for_each_combination(p, s, [&](Mask, const std::vector<int>& pick) {
            chosen.clear();
            for (int i : pick) chosen.push_back(pairs[idx(i)]);
            return paths_dominate(g, chosen);
        });
        if (found) {
            if (witness) *witness = chosen;
            return s;
        }
    }
    return std::nullopt;
}

std::optional<Rational> fractional_arboricity(const Graph& g) {
    if (g.has_loop()) return std::nullopt;
    const int n = g.vertex_count();
    Rational best(0);
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        const int size = std::popcount(s);
        if (size < 2) continue;
        int inside = 0;
        for (const auto& e : g.edges())
            if (has_bit(s, e.u) && has_bit(s, e.v)) ++inside;
        best = std::max(best, Rational(inside, size - 1));
    }
    return best;
}

}  // namespace oracle
