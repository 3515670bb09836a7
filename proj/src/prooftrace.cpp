#include "arborkit/prooftrace.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "arborkit/arboricity.hpp"

namespace arborkit {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::inconclusive: return "INCONCLUSIVE";
    }
    return "FAIL";
}

RankOracle build_dual_union_oracle(const Graph& g, int k) {
    return dual(union_matroid(g, k));
}

std::vector<char> forest_coverable_table(const Graph& g, int k) {
    const auto m = static_cast<std::size_t>(g.edge_count());
    if (m > 16) throw SizeLimitError("forest_coverable_table", m, 16);
    if (k < 0) throw Error("forest_coverable_table: k must be nonnegative");
    const std::uint64_t count = std::uint64_t{1} << m;

    std::vector<char> acyclic(count, 0);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        UnionFind uf(g.vertex_count());
        bool ok = true;
        for (std::size_t e = 0; e < m && ok; ++e)
            if ((mask >> e) & 1U) ok = uf.unite(g.edge(static_cast<EdgeId>(e)).u, g.edge(static_cast<EdgeId>(e)).v);
        acyclic[mask] = ok;
    }

    std::vector<char> cover(count, 0);
    cover[0] = 1;
    for (int j = 1; j <= k; ++j) {
        std::vector<char> next(count, 0);
        next[0] = 1;
        for (std::uint64_t mask = 1; mask < count; ++mask) {
            if (cover[mask]) {
                next[mask] = 1;
                continue;
            }
            // The lowest edge lies in some forest; enumerate that forest.
            const std::uint64_t low = mask & (~mask + 1);
            const std::uint64_t rest = mask ^ low;
            for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
                const std::uint64_t forest = sub | low;
                if (acyclic[forest] && cover[mask ^ forest]) {
                    next[mask] = 1;
                    break;
                }
                if (sub == 0) break;
            }
        }
        cover = std::move(next);
    }
    return cover;
}

namespace {

void gate(const Graph& g, std::size_t limit, std::string_view what) {
    if (static_cast<std::size_t>(g.edge_count()) > limit)
        throw SizeLimitError(what, static_cast<std::size_t>(g.edge_count()), limit);
}

bool is_matching_mask(const Graph& g, std::uint64_t mask) {
    std::uint64_t seen = 0;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        const Edge& e = g.edge(std::countr_zero(rest));
        if (e.is_loop()) return false;
        std::uint64_t ends = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
        if (seen & ends) return false;
        seen |= ends;
    }
    return true;
}

std::vector<FlatRecord> flat_records(const Graph& g, int k, bool with_gamma) {
    const auto m = static_cast<std::size_t>(g.edge_count());
    RankTable n_ranks(build_dual_union_oracle(g, k));
    std::vector<FlatRecord> records;
    for (std::uint64_t flat : enumerate_flat_masks(n_ranks)) {
        FlatRecord rec;
        rec.complement = EdgeSubset::from_mask(m, n_ranks.full_mask() & ~flat);
        auto sub = edge_induced_subgraph(g, rec.complement);
        rec.min_degree = sub.stats.min_degree;
        rec.mindeg_ok = rec.complement.empty() || rec.min_degree >= k + 1;
        if (with_gamma) {
            rec.required = static_cast<int>(rec.complement.size()) - union_rank(g, k, rec.complement);
            rec.gamma_p = two_path_domination(sub.graph, m);
            rec.inters_ok = rec.gamma_p.infinite || rec.gamma_p.value >= rec.required;
        }
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(),
              [](const FlatRecord& a, const FlatRecord& b) { return a.complement < b.complement; });
    return records;
}

}  // namespace

LinkCheck check_link(const Graph& g, int k, std::size_t limit) {
    gate(g, limit, "check_link");
    if (g.vertex_count() > 64) throw SizeLimitError("check_link (vertices)", static_cast<std::size_t>(g.vertex_count()), 64);
    const auto m = static_cast<std::size_t>(g.edge_count());
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    LinkCheck out;

    auto cover = forest_coverable_table(g, k);
    RankTable n_ranks(build_dual_union_oracle(g, k));
    const int base_rank = n_ranks[full];
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        if (!is_matching_mask(g, mask)) continue;
        if (cover[full & ~mask]) out.cover_exists = true;
        if (std::popcount(mask) == base_rank && n_ranks[mask] == base_rank) out.matching_base_exists = true;
    }
    return out;
}

bool check_basic_observation(const Graph& g, int k, std::size_t limit) {
    gate(g, limit, "check_basic_observation");
    const auto m = static_cast<std::size_t>(g.edge_count());
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;

    auto cover = forest_coverable_table(g, k);
    int basic_size = 0;
    for (std::uint64_t mask = 0; mask <= full; ++mask)
        if (cover[mask]) basic_size = std::max(basic_size, std::popcount(mask));

    // avoids[X]: X lies inside the complement of some basic set.
    std::vector<char> avoids(full + 1, 0);
    for (std::uint64_t mask = 0; mask <= full; ++mask)
        if (cover[mask] && std::popcount(mask) == basic_size) avoids[full & ~mask] = 1;
    for (std::size_t e = 0; e < m; ++e)
        for (std::uint64_t mask = 0; mask <= full; ++mask)
            if (((mask >> e) & 1U) && avoids[mask]) avoids[mask ^ (std::uint64_t{1} << e)] = 1;

    RankTable n_ranks(build_dual_union_oracle(g, k));
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        bool independent = n_ranks[mask] == std::popcount(mask);
        if (independent != static_cast<bool>(avoids[mask])) return false;
    }
    return true;
}

MindegCheck check_mindeg_flats(const Graph& g, int k, std::size_t limit) {
    gate(g, limit, "check_mindeg_flats");
    MindegCheck out;
    out.records = flat_records(g, k, false);
    out.ok = std::all_of(out.records.begin(), out.records.end(), [](const FlatRecord& r) { return r.mindeg_ok; });
    return out;
}

IntersCheck check_inters_condition(const Graph& g, int k, std::size_t limit) {
    gate(g, limit, "check_inters_condition");
    IntersCheck out;
    auto frac = fractional_arboricity(g);
    out.hypothesis = !frac.infinite && frac.value <= Rational(k) + Rational(1, 3 * k + 2);
    out.records = flat_records(g, k, true);
    out.ok = std::all_of(out.records.begin(), out.records.end(), [](const FlatRecord& r) { return r.inters_ok; });
    return out;
}

ProofTraceReport run_prooftrace(const Graph& g, int k, std::size_t limit) {
    gate(g, limit, "prooftrace");
    if (k < 1) throw Error("prooftrace: k must be positive");
    ProofTraceReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.k = k;
    r.bound = Rational(k) + Rational(1, 3 * k + 2);
    auto frac = fractional_arboricity(g);
    r.frac_infinite = frac.infinite;
    r.frac_arboricity = frac.value;

    auto inters = check_inters_condition(g, k, limit);
    r.hypothesis = inters.hypothesis;
    r.flats = std::move(inters.records);
    r.flats_of_n = static_cast<int>(r.flats.size());
    r.inters_ok = inters.ok;
    r.mindeg_ok = std::all_of(r.flats.begin(), r.flats.end(), [](const FlatRecord& f) { return f.mindeg_ok; });
    r.link = check_link(g, k, limit);
    r.link_ok = r.link.agree();
    r.basic_obs_ok = check_basic_observation(g, k, limit);

    if (!r.link_ok || !r.basic_obs_ok || !r.mindeg_ok)
        r.verdict = Verdict::fail;
    else if (r.hypothesis && !r.inters_ok)
        r.verdict = Verdict::inconclusive;
    else
        r.verdict = Verdict::pass;
    return r;
}

}  // namespace arborkit
