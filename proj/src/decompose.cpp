#include "arborkit/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "arborkit/matroid.hpp"

namespace arborkit {

std::string_view to_string(RemainderKind kind) {
    switch (kind) {
        case RemainderKind::matching: return "matching";
        case RemainderKind::forest: return "forest";
        case RemainderKind::graph: return "graph";
    }
    return "matching";
}

RemainderKind parse_remainder_kind(std::string_view text) {
    if (text == "matching") return RemainderKind::matching;
    if (text == "forest") return RemainderKind::forest;
    if (text == "graph") return RemainderKind::graph;
    throw Error("unknown remainder kind '" + std::string(text) + "'");
}

std::int64_t Threshold::weak_degree_bound(int k, const Rational& eps) {
    if (eps < Rational(0) || eps >= Rational(1)) throw Error("epsilon must lie in [0, 1)");
    Rational value = Rational(k + 1) * (Rational(k - 1) + 2 * eps) / (Rational(1) - eps);
    return ceil(value);
}

namespace {

// High-degree vertices obstruct k-forest packings, so edges touching them go first.
std::vector<EdgeId> priority_order(const Graph& g) {
    std::vector<int> deg = g.degrees();
    std::vector<EdgeId> order(static_cast<std::size_t>(g.edge_count()));
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](EdgeId e) {
        int a = deg[static_cast<std::size_t>(g.edge(e).u)];
        int b = deg[static_cast<std::size_t>(g.edge(e).v)];
        return std::make_pair(std::max(a, b), a + b);
    };
    std::stable_sort(order.begin(), order.end(), [&](EdgeId x, EdgeId y) { return key(x) > key(y); });
    return order;
}

class MatchingSearch {
public:
    MatchingSearch(const Graph& g, int k)
        : g_(g), k_(k), order_(priority_order(g)), incidence_(g.incidence()),
          state_(static_cast<std::size_t>(g.edge_count()), undecided),
          matched_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    SearchOutcome run() {
        SearchOutcome out;
        ForestPacking packing(g_, k_);
        if (search(packing)) {
            Decomposition dec;
            dec.kind = RemainderKind::matching;
            dec.remainder = EdgeSubset(static_cast<std::size_t>(g_.edge_count()));
            for (EdgeId e = 0; e < g_.edge_count(); ++e)
                if (state_[static_cast<std::size_t>(e)] == in_matching) dec.remainder.insert(e);
            dec.forests = solution_->forests();
            out.decomposition = std::move(dec);
        }
        out.stats = stats_;
        return out;
    }

private:
    enum State : char { undecided, in_matching, in_forests };

    bool free_vertex(Vertex v) const { return !matched_[static_cast<std::size_t>(v)]; }

    // An excluded edge whose endpoints can no longer be matched leaves M
    // non-maximal; that matching is dominated by one explored elsewhere.
    bool can_still_cover(Vertex v) const {
        if (!free_vertex(v)) return true;
        for (EdgeId f : incidence_[static_cast<std::size_t>(v)])
            if (state_[static_cast<std::size_t>(f)] == undecided) return true;
        return false;
    }

    bool maximality_possible() const {
        for (EdgeId e : excluded_) {
            const Edge& ed = g_.edge(e);
            if (free_vertex(ed.u) && free_vertex(ed.v) && !can_still_cover(ed.u) && !can_still_cover(ed.v))
                return false;
        }
        return true;
    }

    bool search(ForestPacking& packing) {
        ++stats_.nodes;
        if (!maximality_possible()) return false;
        auto next = std::find_if(order_.begin(), order_.end(), [&](EdgeId e) {
            return state_[static_cast<std::size_t>(e)] == undecided;
        });
        if (next == order_.end()) {
            ++stats_.leaves;
            solution_ = packing;
            return true;
        }
        const EdgeId e = *next;
        const Edge& ed = g_.edge(e);

        // Branch 1: e joins the matching; every other undecided edge at its
        // endpoints must go to the forests.
        {
            ForestPacking trial = packing;
            std::vector<EdgeId> forced;
            bool feasible = true;
            state_[static_cast<std::size_t>(e)] = in_matching;
            for (Vertex x : {ed.u, ed.v}) {
                for (EdgeId f : incidence_[static_cast<std::size_t>(x)]) {
                    if (state_[static_cast<std::size_t>(f)] != undecided) continue;
                    state_[static_cast<std::size_t>(f)] = in_forests;
                    forced.push_back(f);
                    if (!trial.insert(f)) {
                        feasible = false;
                        break;
                    }
                }
                if (!feasible) break;
            }
            matched_[static_cast<std::size_t>(ed.u)] = 1;
            matched_[static_cast<std::size_t>(ed.v)] = 1;
            if (feasible && search(trial)) return true;
            matched_[static_cast<std::size_t>(ed.u)] = 0;
            matched_[static_cast<std::size_t>(ed.v)] = 0;
            for (EdgeId f : forced) state_[static_cast<std::size_t>(f)] = undecided;
            state_[static_cast<std::size_t>(e)] = undecided;
        }

        // Branch 2: e goes to the forests.
        {
            ForestPacking trial = packing;
            state_[static_cast<std::size_t>(e)] = in_forests;
            excluded_.push_back(e);
            if (trial.insert(e) && search(trial)) return true;
            excluded_.pop_back();
            state_[static_cast<std::size_t>(e)] = undecided;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<EdgeId> order_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<State> state_;
    std::vector<char> matched_;
    std::vector<EdgeId> excluded_;
    std::optional<ForestPacking> solution_;
    SearchStats stats_;
};

class BoundedSearch {
public:
    BoundedSearch(const Graph& g, int k, int d, RemainderKind kind)
        : g_(g), k_(k), d_(d), kind_(kind), order_(priority_order(g)),
          in_remainder_(static_cast<std::size_t>(g.edge_count()), 0),
          degree_(static_cast<std::size_t>(g.vertex_count()), 0) {}

    SearchOutcome run() {
        SearchOutcome out;
        ForestPacking packing(g_, k_);
        UnionFind remainder_components(g_.vertex_count());
        if (search(0, packing, remainder_components)) {
            Decomposition dec;
            dec.kind = kind_;
            dec.remainder = EdgeSubset(static_cast<std::size_t>(g_.edge_count()));
            for (EdgeId e = 0; e < g_.edge_count(); ++e)
                if (in_remainder_[static_cast<std::size_t>(e)]) dec.remainder.insert(e);
            dec.forests = solution_->forests();
            out.decomposition = std::move(dec);
        }
        out.stats = stats_;
        return out;
    }

private:
    bool search(std::size_t pos, const ForestPacking& packing, const UnionFind& components) {
        ++stats_.nodes;
        if (pos == order_.size()) {
            ++stats_.leaves;
            solution_ = packing;
            return true;
        }
        const EdgeId e = order_[pos];
        const Edge& ed = g_.edge(e);
        auto& du = degree_[static_cast<std::size_t>(ed.u)];
        auto& dv = degree_[static_cast<std::size_t>(ed.v)];

        bool fits = du + 1 <= d_ && dv + 1 <= d_;
        UnionFind next_components = components;
        if (fits && kind_ == RemainderKind::forest) fits = next_components.unite(ed.u, ed.v);
        if (fits) {
            ++du;
            ++dv;
            in_remainder_[static_cast<std::size_t>(e)] = 1;
            if (search(pos + 1, packing, next_components)) return true;
            in_remainder_[static_cast<std::size_t>(e)] = 0;
            --du;
            --dv;
        }

        ForestPacking trial = packing;
        if (trial.insert(e) && search(pos + 1, trial, components)) return true;
        return false;
    }

    const Graph& g_;
    int k_;
    int d_;
    RemainderKind kind_;
    std::vector<EdgeId> order_;
    std::vector<char> in_remainder_;
    std::vector<int> degree_;
    std::optional<ForestPacking> solution_;
    SearchStats stats_;
};

}  // namespace

SearchOutcome decompose_forests_matching(const Graph& g, int k) {
    if (k < 0) throw Error("decompose: k must be nonnegative");
    if (g.has_loop()) throw Error("decompose: graph contains a loop");
    return MatchingSearch(g, k).run();
}

SearchOutcome decompose_forests_bounded(const Graph& g, int k, int d, RemainderKind kind,
                                        std::size_t edge_limit) {
    if (k < 0) throw Error("decompose: k must be nonnegative");
    if (d < 1) throw Error("decompose: d must be positive");
    if (g.has_loop()) throw Error("decompose: graph contains a loop");
    if (kind == RemainderKind::forest && static_cast<std::size_t>(g.edge_count()) > edge_limit)
        throw SizeLimitError("decompose_forests_bounded", static_cast<std::size_t>(g.edge_count()), edge_limit);
    // A matching is exactly a max-degree-1 graph.
    const bool matching = kind == RemainderKind::matching;
    auto outcome = BoundedSearch(g, k, matching ? 1 : d, matching ? RemainderKind::graph : kind).run();
    if (outcome.decomposition) outcome.decomposition->kind = kind;
    return outcome;
}

VerifyResult verify_decomposition(const Graph& g, const Decomposition& dec, int k, int d) {
    auto fail = [](std::string clause) { return VerifyResult{false, std::move(clause)}; };
    const std::size_t m = static_cast<std::size_t>(g.edge_count());
    if (dec.forests.size() != static_cast<std::size_t>(k))
        return fail("expected " + std::to_string(k) + " forests, got " + std::to_string(dec.forests.size()));
    for (const auto& part : dec.forests)
        if (part.host_size() != m) return fail("edge subset does not match the graph's edge count");
    if (dec.remainder.host_size() != m) return fail("edge subset does not match the graph's edge count");

    std::vector<int> uses(m, 0);
    auto count = [&](const EdgeSubset& part) {
        for (EdgeId e : part.ids()) ++uses[static_cast<std::size_t>(e)];
    };
    for (const auto& part : dec.forests) count(part);
    count(dec.remainder);
    for (std::size_t e = 0; e < m; ++e) {
        if (uses[e] > 1) return fail("parts not disjoint (edge " + std::to_string(e) + ")");
        if (uses[e] == 0) return fail("parts do not cover E (edge " + std::to_string(e) + " missing)");
    }

    auto acyclic = [&](const EdgeSubset& part) {
        UnionFind uf(g.vertex_count());
        for (EdgeId e : part.ids())
            if (!uf.unite(g.edge(e).u, g.edge(e).v)) return false;
        return true;
    };
    for (std::size_t i = 0; i < dec.forests.size(); ++i)
        if (!acyclic(dec.forests[i])) return fail("forest " + std::to_string(i) + " contains a cycle");

    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
    for (EdgeId e : dec.remainder.ids()) {
        const Edge& ed = g.edge(e);
        if (dec.kind == RemainderKind::matching && ed.is_loop())
            return fail("remainder contains a loop (edge " + std::to_string(e) + ")");
        ++degree[static_cast<std::size_t>(ed.u)];
        ++degree[static_cast<std::size_t>(ed.v)];
    }
    const int limit = dec.kind == RemainderKind::matching ? 1 : d;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (degree[static_cast<std::size_t>(v)] <= limit) continue;
        if (dec.kind == RemainderKind::matching)
            return fail("remainder is not a matching (vertex " + std::to_string(v) + ")");
        return fail("remainder exceeds max degree " + std::to_string(d) + " (vertex " + std::to_string(v) + ")");
    }
    if (dec.kind == RemainderKind::forest && !acyclic(dec.remainder))
        return fail("remainder contains a cycle");
    return {};
}

}  // namespace arborkit
