#include "arborkit/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <set>

#include "arborkit/arboricity.hpp"

namespace arborkit {

namespace {

using Mask = std::uint64_t;

class EdgeDominationSearch {
public:
    explicit EdgeDominationSearch(const Graph& h) {
        const int n = h.vertex_count();
        all_ = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        std::vector<Mask> closed(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = Mask{1} << v;
        for (const Edge& e : h.edges()) {
            closed[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
            closed[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
        }
        for (const Edge& e : h.edges())
            dom_.push_back(closed[static_cast<std::size_t>(e.u)] | closed[static_cast<std::size_t>(e.v)]);
        dominators_.resize(static_cast<std::size_t>(n));
        reach_.assign(static_cast<std::size_t>(n), 0);
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            for (Mask rest = dom_[static_cast<std::size_t>(e)]; rest != 0; rest &= rest - 1) {
                auto x = static_cast<std::size_t>(std::countr_zero(rest));
                dominators_[x].push_back(e);
                reach_[x] |= dom_[static_cast<std::size_t>(e)];
            }
        }
    }

    std::vector<EdgeId> solve() {
        for (int budget = lower_bound(0);; ++budget) {
            chosen_.clear();
            if (search(0, budget)) return chosen_;
        }
    }

private:
    // Undominated vertices pairwise out of reach of a common edge each need
    // their own edge.
    int lower_bound(Mask dominated) const {
        int count = 0;
        for (Mask rest = all_ & ~dominated; rest != 0; ++count)
            rest &= ~reach_[static_cast<std::size_t>(std::countr_zero(rest))];
        return count;
    }

    bool search(Mask dominated, int budget) {
        if (dominated == all_) return true;
        if (budget == 0 || lower_bound(dominated) > budget) return false;

        std::size_t pick = 0;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (Mask rest = all_ & ~dominated; rest != 0; rest &= rest - 1) {
            auto x = static_cast<std::size_t>(std::countr_zero(rest));
            if (dominators_[x].size() < fewest) {
                fewest = dominators_[x].size();
                pick = x;
            }
        }
        std::set<Mask> tried;
        for (EdgeId e : dominators_[pick]) {
            Mask next = dominated | dom_[static_cast<std::size_t>(e)];
            if (!tried.insert(next).second) continue;
            chosen_.push_back(e);
            if (search(next, budget - 1)) return true;
            chosen_.pop_back();
        }
        return false;
    }

    Mask all_ = 0;
    std::vector<Mask> dom_;
    std::vector<std::vector<EdgeId>> dominators_;
    std::vector<Mask> reach_;
    std::vector<EdgeId> chosen_;
};

}  // namespace

bool dominates(const Graph& h, const std::vector<EdgeId>& d) {
    const auto n = static_cast<std::size_t>(h.vertex_count());
    std::vector<char> covered(n, 0);
    for (EdgeId e : d) {
        covered[static_cast<std::size_t>(h.edge(e).u)] = 1;
        covered[static_cast<std::size_t>(h.edge(e).v)] = 1;
    }
    std::vector<char> ok = covered;
    for (const Edge& e : h.edges()) {
        if (covered[static_cast<std::size_t>(e.u)]) ok[static_cast<std::size_t>(e.v)] = 1;
        if (covered[static_cast<std::size_t>(e.v)]) ok[static_cast<std::size_t>(e.u)] = 1;
    }
    return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

bool dominates(const Graph& g, const std::vector<TwoPath>& paths) {
    std::vector<char> touched(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const TwoPath& p : paths) {
        for (EdgeId e : {p.first, p.second}) {
            touched[static_cast<std::size_t>(g.edge(e).u)] = 1;
            touched[static_cast<std::size_t>(g.edge(e).v)] = 1;
        }
    }
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return touched[static_cast<std::size_t>(e.u)] || touched[static_cast<std::size_t>(e.v)];
    });
}

DominationResult edge_domination(const Graph& h, std::size_t edge_limit) {
    if (static_cast<std::size_t>(h.edge_count()) > edge_limit)
        throw SizeLimitError("edge_domination", static_cast<std::size_t>(h.edge_count()), edge_limit);
    if (h.vertex_count() > 64)
        throw SizeLimitError("edge_domination (vertices)", static_cast<std::size_t>(h.vertex_count()), 64);
    DominationResult result;
    auto inc = h.incidence();
    if (std::any_of(inc.begin(), inc.end(), [](const auto& list) { return list.empty(); })) {
        result.infinite = true;
        return result;
    }
    result.edges = EdgeDominationSearch(h).solve();
    std::sort(result.edges.begin(), result.edges.end());
    result.value = static_cast<int>(result.edges.size());
    return result;
}

TwoPath make_two_path(const Graph& g, EdgeId first, EdgeId second) {
    if (first == second) throw Error("a 2-path needs two distinct edges");
    const Edge& a = g.edge(first);
    const Edge& b = g.edge(second);
    Vertex middle = b.touches(a.u) ? a.u : a.v;
    if (!b.touches(middle)) throw Error("edges " + std::to_string(first) + " and " +
                                        std::to_string(second) + " share no endpoint");
    return {first, second, {a.other(middle), middle, b.other(middle)}};
}

DominationResult two_path_domination(const Graph& g, std::size_t edge_limit) {
    if (static_cast<std::size_t>(g.edge_count()) > edge_limit)
        throw SizeLimitError("two_path_domination", static_cast<std::size_t>(g.edge_count()), edge_limit);
    Graph lg = line_graph(g);
    DominationResult result = edge_domination(lg, std::numeric_limits<std::size_t>::max());
    for (EdgeId e : result.edges) {
        const Edge& pair = lg.edge(e);
        result.two_paths.push_back(make_two_path(g, pair.u, pair.v));
    }
    return result;
}

bool star_inequality(const Graph& g, const std::vector<TwoPath>& paths, int* n_star, int* m_star) {
    std::set<EdgeId> edges;
    std::set<Vertex> vertices;
    for (const TwoPath& p : paths) {
        for (EdgeId e : {p.first, p.second}) {
            edges.insert(e);
            vertices.insert(g.edge(e).u);
            vertices.insert(g.edge(e).v);
        }
    }
    if (n_star) *n_star = static_cast<int>(vertices.size());
    if (m_star) *m_star = static_cast<int>(edges.size());
    return 2 * vertices.size() <= 3 * edges.size();
}

ConnChainReport check_conn_chain(const Graph& h, int k, std::size_t edge_limit) {
    if (k < 1) throw Error("check_conn_chain: k must be positive");
    ConnChainReport r;
    r.k = k;
    r.n = h.vertex_count();
    r.m = h.edge_count();
    r.epsilon = Rational(1, 3 * k + 2);
    auto deg = h.degrees();
    r.min_degree = deg.empty() ? 0 : *std::min_element(deg.begin(), deg.end());

    auto frac = fractional_arboricity(h);
    r.frac_infinite = frac.infinite;
    r.frac_arboricity = frac.value;
    r.hypothesis_density = !frac.infinite && frac.value <= Rational(k) + r.epsilon;
    r.hypothesis_degree = r.n > 0 && r.min_degree >= k + 1;

    r.gamma_p = two_path_domination(h, edge_limit);
    r.ineq_star = star_inequality(h, r.gamma_p.two_paths, &r.n_star, &r.m_star);
    r.ineq_degree = (k + 1) * r.n - r.m <= (k + 1) * r.n_star - r.m_star;
    r.ineq_density = Rational(r.m) < Rational(r.n) * (Rational(k) + r.epsilon);
    r.conclusion = r.gamma_p.infinite || Rational(r.gamma_p.value) >= r.epsilon * Rational(r.n);
    return r;
}

}  // namespace arborkit
