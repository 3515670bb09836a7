#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "arborkit/json_io.hpp"
#include "arborkit/matroid.hpp"
#include "arborkit/prooftrace.hpp"
#include "support/oracles.hpp"

using namespace arborkit;
using oracle::Mask;

namespace {

// Rank table of N from the cover-based union rank.
std::vector<int> dual_union_ranks(const Graph& g, int k) {
    auto r = oracle::union_ranks_by_cover(g, k);
    const Mask full = r.size() - 1;
    std::vector<int> out(r.size());
    for (Mask x = 0; x <= full; ++x) out[x] = std::popcount(x) + r[full & ~x] - r[full];
    return out;
}

}  // namespace

TEST(DualUnionOracle, Examples) {
    Graph tri = oracle::cycle_graph(3);
    RankOracle n1 = build_dual_union_oracle(tri, 1);
    EXPECT_EQ(n1(EdgeSubset::full(3)), 1);
    EXPECT_EQ(n1(EdgeSubset(3)), 0);
    Graph k4 = oracle::complete_graph(4);
    EXPECT_EQ(build_dual_union_oracle(k4, 2)(EdgeSubset::full(6)), 0);
}

TEST(DualUnionOracle, MatchesBasesOfUnion) {
    for (const auto& entry : oracle::random_corpus(40, 61)) {
        const Graph& g = entry.graph;
        if (g.edge_count() > 10) continue;
        for (int k : {1, 2}) {
            auto by_bases = oracle::dual_ranks_by_bases(oracle::union_ranks_by_cover(g, k));
            RankTable table(build_dual_union_oracle(g, k));
            for (Mask x = 0; x <= oracle::full_mask(g); ++x) ASSERT_EQ(table[x], by_bases[x]) << entry.name;
        }
    }
}

TEST(CoverableTable, MatchesAssignmentSearch) {
    for (const auto& entry : oracle::random_corpus(40, 62)) {
        const Graph& g = entry.graph;
        if (g.edge_count() > 11) continue;
        for (int k : {1, 2, 3}) EXPECT_EQ(forest_coverable_table(g, k), oracle::coverable_sets(g, k)) << entry.name;
    }
}

TEST(Link, Examples) {
    auto tri = check_link(oracle::cycle_graph(3), 1);
    EXPECT_TRUE(tri.cover_exists);
    EXPECT_TRUE(tri.matching_base_exists);
    auto k4 = check_link(oracle::complete_graph(4), 1);
    EXPECT_FALSE(k4.cover_exists);
    EXPECT_FALSE(k4.matching_base_exists);
    auto empty = check_link(Graph(3), 2);
    EXPECT_TRUE(empty.cover_exists);
    EXPECT_TRUE(empty.agree());
    EXPECT_THROW(check_link(oracle::complete_graph(6), 1), SizeLimitError);
}

TEST(BasicObservation, Examples) {
    EXPECT_TRUE(check_basic_observation(oracle::cycle_graph(3), 1));
    EXPECT_TRUE(check_basic_observation(oracle::complete_graph(4), 2));
    EXPECT_TRUE(check_basic_observation(Graph(4, {{0, 1}, {2, 3}}), 1));
    Graph tri = oracle::cycle_graph(3);
    RankTable n(build_dual_union_oracle(tri, 1));
    for (Mask x = 0; x < 8; ++x) EXPECT_EQ(n[x] == std::popcount(x), std::popcount(x) <= 1);
}

TEST(BasicObservation, Corpus) {
    for (const auto& entry : oracle::random_corpus(60, 63)) {
        if (entry.graph.edge_count() > 10) continue;
        for (int k : {1, 2}) EXPECT_TRUE(check_basic_observation(entry.graph, k)) << entry.name;
    }
}

TEST(MindegFlats, Examples) {
    auto tri = check_mindeg_flats(oracle::cycle_graph(3), 1);
    EXPECT_TRUE(tri.ok);
    EXPECT_EQ(tri.records.size(), oracle::flats(dual_union_ranks(oracle::cycle_graph(3), 1)).size());
    auto empty = check_mindeg_flats(Graph(2), 1);
    EXPECT_TRUE(empty.ok);
    ASSERT_EQ(empty.records.size(), 1U);
    auto k4 = check_mindeg_flats(oracle::complete_graph(4), 2);
    EXPECT_TRUE(k4.ok);
    for (const auto& rec : k4.records) EXPECT_TRUE(rec.complement.empty() || rec.min_degree >= 3);
}

TEST(MindegFlats, FlatsMatchOracle) {
    for (const auto& entry : oracle::random_corpus(40, 64)) {
        const Graph& g = entry.graph;
        if (g.edge_count() > 10) continue;
        for (int k : {1, 2}) {
            auto check = check_mindeg_flats(g, k);
            auto flats = oracle::flats(dual_union_ranks(g, k));
            ASSERT_EQ(check.records.size(), flats.size()) << entry.name;
            std::vector<Mask> complements;
            for (Mask f : flats) complements.push_back(oracle::full_mask(g) & ~f);
            std::sort(complements.begin(), complements.end());
            for (std::size_t i = 0; i < flats.size(); ++i)
                EXPECT_EQ(check.records[i].complement.to_mask(), complements[i]);
            EXPECT_TRUE(check.ok) << entry.name;
        }
    }
}

TEST(IntersCondition, Examples) {
    auto c6 = check_inters_condition(oracle::cycle_graph(6), 1);
    EXPECT_TRUE(c6.hypothesis);
    EXPECT_TRUE(c6.ok);
    auto empty = check_inters_condition(Graph(3), 1);
    EXPECT_TRUE(empty.ok);

    Graph doubled(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {2, 0}, {2, 0}});
    auto d = check_inters_condition(doubled, 1);
    EXPECT_FALSE(d.hypothesis);
    EXPECT_FALSE(d.records.empty());
}

TEST(Prooftrace, Verdicts) {
    auto tri = run_prooftrace(oracle::cycle_graph(3), 1);
    EXPECT_EQ(tri.verdict, Verdict::pass);
    EXPECT_TRUE(tri.link_ok);
    EXPECT_EQ(to_string(tri.verdict), "PASS");

    auto k4 = run_prooftrace(oracle::complete_graph(4), 1);
    EXPECT_FALSE(k4.hypothesis);
    EXPECT_TRUE(k4.link_ok);
    EXPECT_NE(k4.verdict, Verdict::fail);
}

TEST(Prooftrace, ReportsAreReproducible) {
    for (const auto& entry : oracle::random_corpus(20, 65)) {
        if (entry.graph.edge_count() > 10) continue;
        auto a = prooftrace_json(run_prooftrace(entry.graph, 1));
        auto b = prooftrace_json(run_prooftrace(entry.graph, 1));
        EXPECT_EQ(a.dump(), b.dump());
    }
}

TEST(Prooftrace, NoFailuresOnCorpus) {
    int graphs = 0;
    for (const auto& entry : oracle::corpus()) {
        if (entry.graph.edge_count() > 9 || graphs++ % 4 != 0) continue;
        for (int k : {1, 2}) {
            auto r = run_prooftrace(entry.graph, k);
            EXPECT_NE(r.verdict, Verdict::fail) << entry.name;
            if (r.hypothesis) EXPECT_EQ(r.verdict, Verdict::pass) << entry.name;
        }
    }
}

TEST(Prooftrace, SizeGate) {
    EXPECT_THROW(run_prooftrace(oracle::complete_graph(6), 1), SizeLimitError);
}
