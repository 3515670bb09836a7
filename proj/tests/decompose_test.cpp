#include <gtest/gtest.h>

#include <bit>

#include "arborkit/arboricity.hpp"
#include "arborkit/decompose.hpp"
#include "arborkit/generator.hpp"
#include "support/oracles.hpp"

using namespace arborkit;
using oracle::Mask;

namespace {

Decomposition make(std::size_t m, std::vector<std::vector<EdgeId>> forests, std::vector<EdgeId> rest,
                   RemainderKind kind = RemainderKind::matching) {
    Decomposition d;
    for (const auto& f : forests) d.forests.emplace_back(m, f);
    d.remainder = EdgeSubset(m, rest);
    d.kind = kind;
    return d;
}

void expect_sound(const Graph& g, const SearchOutcome& out, int k, int d = 1) {
    ASSERT_FALSE(out.exhausted());
    auto v = verify_decomposition(g, *out.decomposition, k, d);
    EXPECT_TRUE(v.ok) << v.clause;
    // Independent re-check of the same invariants.
    Mask all = 0;
    for (const auto& f : out.decomposition->forests) {
        EXPECT_TRUE(oracle::is_forest(g, f.to_mask()));
        EXPECT_EQ(all & f.to_mask(), 0U);
        all |= f.to_mask();
    }
    Mask rest = out.decomposition->remainder.to_mask();
    EXPECT_EQ(all & rest, 0U);
    EXPECT_EQ(all | rest, oracle::full_mask(g));
    if (out.decomposition->kind == RemainderKind::matching) EXPECT_TRUE(oracle::is_matching(g, rest));
}

}  // namespace

TEST(Threshold, Values) {
    for (int k = 1; k <= 6; ++k) {
        Threshold t{k};
        EXPECT_EQ(t.epsilon(), Rational(1, 3 * k + 2));
        EXPECT_EQ(t.bound(), Rational(3 * k * k + 2 * k + 1, 3 * k + 2));
    }
    EXPECT_EQ(Threshold{1}.bound(), Rational(6, 5));
    EXPECT_EQ(Threshold{2}.bound(), Rational(17, 8));
    EXPECT_EQ(Threshold::conjecture_bound(1, 1), Rational(4, 3));
    EXPECT_EQ(Threshold::conjecture_bound(1, 2), Rational(3, 2));
    // (k+1)(k-1+2e)/(1-e): k=1, e=1/5 gives 2*(2/5)/(4/5) = 1.
    EXPECT_EQ(Threshold{1}.weak_degree_bound(), 1);
    EXPECT_EQ(Threshold::weak_degree_bound(2, Rational(1, 2)), 12);
    EXPECT_EQ(Threshold::weak_degree_bound(3, Rational(0)), 8);
}

TEST(RemainderKind, Names) {
    for (auto kind : {RemainderKind::matching, RemainderKind::forest, RemainderKind::graph})
        EXPECT_EQ(parse_remainder_kind(to_string(kind)), kind);
    EXPECT_THROW(parse_remainder_kind("tree"), Error);
}

TEST(DecomposeMatching, Examples) {
    Graph tri = oracle::cycle_graph(3);
    auto t = decompose_forests_matching(tri, 1);
    expect_sound(tri, t, 1);
    EXPECT_EQ(t.decomposition->remainder.size(), 1U);

    Graph c6 = oracle::cycle_graph(6);
    expect_sound(c6, decompose_forests_matching(c6, 1), 1);

    Graph k4 = oracle::complete_graph(4);
    expect_sound(k4, decompose_forests_matching(k4, 2), 2);
    EXPECT_TRUE(decompose_forests_matching(k4, 1).exhausted());
    EXPECT_THROW(decompose_forests_matching(Graph(1, {{0, 0}}), 1), Error);
}

TEST(DecomposeBounded, Examples) {
    Graph tri = oracle::cycle_graph(3);
    auto as_graph = decompose_forests_bounded(tri, 1, 1, RemainderKind::graph);
    expect_sound(tri, as_graph, 1, 1);
    EXPECT_EQ(as_graph.decomposition->remainder.size(), 1U);

    Graph c5_pendant(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}});
    EXPECT_LE(fractional_arboricity(c5_pendant).value, Rational(3, 2));
    expect_sound(c5_pendant, decompose_forests_bounded(c5_pendant, 1, 2, RemainderKind::forest), 1, 2);

    Graph k4 = oracle::complete_graph(4);
    auto k4_graph = decompose_forests_bounded(k4, 1, 3, RemainderKind::graph);
    expect_sound(k4, k4_graph, 1, 3);

    EXPECT_TRUE(decompose_forests_bounded(k4, 1, 1, RemainderKind::graph).exhausted());
    EXPECT_THROW(decompose_forests_bounded(oracle::complete_graph(8), 1, 2, RemainderKind::forest), SizeLimitError);
}

TEST(DecomposeBounded, ZeroForestsChecksMaxDegree) {
    Graph c4 = oracle::cycle_graph(4);
    EXPECT_FALSE(decompose_forests_bounded(c4, 0, 2, RemainderKind::graph).exhausted());
    EXPECT_TRUE(decompose_forests_bounded(c4, 0, 1, RemainderKind::graph).exhausted());
    EXPECT_TRUE(decompose_forests_bounded(c4, 0, 2, RemainderKind::forest).exhausted());
}

TEST(Verify, Clauses) {
    Graph tri = oracle::cycle_graph(3);
    EXPECT_TRUE(verify_decomposition(tri, make(3, {{0, 1}}, {2}), 1).ok);

    auto twice = verify_decomposition(tri, make(3, {{0, 1, 2}}, {2}), 1);
    EXPECT_FALSE(twice.ok);
    EXPECT_NE(twice.clause.find("parts not disjoint"), std::string::npos);

    auto cycle = verify_decomposition(tri, make(3, {{0, 1, 2}}, {}), 1);
    EXPECT_FALSE(cycle.ok);
    EXPECT_NE(cycle.clause.find("forest 0 contains a cycle"), std::string::npos);

    auto missing = verify_decomposition(tri, make(3, {{0}}, {2}), 1);
    EXPECT_FALSE(missing.ok);
    EXPECT_NE(missing.clause.find("cover"), std::string::npos);

    Graph p3 = oracle::path_graph(3);
    auto not_matching = verify_decomposition(p3, make(2, {{}}, {0, 1}), 1);
    EXPECT_FALSE(not_matching.ok);
    EXPECT_NE(not_matching.clause.find("matching"), std::string::npos);

    auto count = verify_decomposition(tri, make(3, {{0, 1}}, {2}), 2);
    EXPECT_FALSE(count.ok);

    auto degree = verify_decomposition(oracle::star_graph(3), make(3, {{}}, {0, 1, 2}, RemainderKind::graph), 1, 2);
    EXPECT_FALSE(degree.ok);
    EXPECT_NE(degree.clause.find("degree"), std::string::npos);

    auto acyclic = verify_decomposition(tri, make(3, {{}}, {0, 1, 2}, RemainderKind::forest), 1, 2);
    EXPECT_FALSE(acyclic.ok);
    EXPECT_NE(acyclic.clause.find("cycle"), std::string::npos);
}

TEST(DecomposeMatching, CompleteAgainstMatchingEnumeration) {
    int exhausted = 0;
    int found = 0;
    for (const auto& entry : oracle::random_corpus(120, 70)) {
        const Graph& g = entry.graph;
        if (g.edge_count() > 16) continue;
        for (int k : {1, 2}) {
            auto out = decompose_forests_matching(g, k);
            auto brute = oracle::forests_plus_matching(g, k);
            ASSERT_EQ(out.exhausted(), !brute.has_value()) << entry.name << " k=" << k;
            if (out.exhausted()) {
                ++exhausted;
            } else {
                ++found;
                expect_sound(g, out, k);
            }
        }
    }
    EXPECT_GT(exhausted, 10);
    EXPECT_GT(found, 10);
}

TEST(DecomposeBounded, CompleteAgainstSubsetEnumeration) {
    for (const auto& entry : oracle::random_corpus(60, 71)) {
        const Graph& g = entry.graph;
        if (g.edge_count() > 12) continue;
        auto cover = oracle::coverable_sets(g, 1);
        for (int d : {1, 2}) {
            for (auto kind : {RemainderKind::forest, RemainderKind::graph}) {
                bool exists = false;
                for (Mask rest = 0; rest <= oracle::full_mask(g) && !exists; ++rest) {
                    if (!cover[oracle::full_mask(g) & ~rest]) continue;
                    std::vector<int> deg(static_cast<std::size_t>(g.vertex_count()), 0);
                    bool ok = true;
                    for (EdgeId e = 0; e < g.edge_count(); ++e) {
                        if (!((rest >> e) & 1U)) continue;
                        ok = ok && ++deg[static_cast<std::size_t>(g.edge(e).u)] <= d;
                        ok = ok && ++deg[static_cast<std::size_t>(g.edge(e).v)] <= d;
                    }
                    if (kind == RemainderKind::forest) ok = ok && oracle::is_forest(g, rest);
                    exists = ok;
                }
                auto out = decompose_forests_bounded(g, 1, d, kind);
                ASSERT_EQ(out.exhausted(), !exists) << entry.name;
                if (!out.exhausted()) expect_sound(g, out, 1, d);
            }
        }
    }
}

TEST(DecomposeMatching, SupersetsOfWorkingMatchingsWork) {
    for (const auto& entry : oracle::random_corpus(40, 72)) {
        const Graph& g = entry.graph;
        if (g.edge_count() > 12) continue;
        auto cover = oracle::coverable_sets(g, 1);
        auto matchings = oracle::all_matchings(g);
        for (Mask small : matchings) {
            if (!cover[oracle::full_mask(g) & ~small]) continue;
            for (Mask big : matchings)
                if ((big & small) == small) ASSERT_TRUE(cover[oracle::full_mask(g) & ~big]) << entry.name;
        }
    }
}

TEST(DecomposeMatching, SucceedsBelowThreshold) {
    for (int k : {1, 2}) {
        int hits = 0;
        for (const auto& entry : oracle::corpus()) {
            const Graph& g = entry.graph;
            auto frac = fractional_arboricity(g);
            if (frac.infinite || frac.value > Threshold{k}.bound()) continue;
            ++hits;
            expect_sound(g, decompose_forests_matching(g, k), k);
        }
        EXPECT_GT(hits, 50);
    }
}

TEST(DecomposeBounded, TwoForestsBelowThreeHalves) {
    int hits = 0;
    for (const auto& entry : oracle::corpus()) {
        const Graph& g = entry.graph;
        auto frac = fractional_arboricity(g);
        if (frac.infinite || frac.value > Rational(3, 2) || g.edge_count() > 22) continue;
        ++hits;
        if (frac.value <= Rational(4, 3)) expect_sound(g, decompose_forests_matching(g, 1), 1);
        expect_sound(g, decompose_forests_bounded(g, 1, 2, RemainderKind::forest), 1, 2);
    }
    EXPECT_GT(hits, 100);
}
