#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "wicketlab/hypergraph.hpp"

using namespace wicketlab;

namespace {

// Rows (i,i,i); columns (i, i+1, i+2) mod 3.
TripartiteHypergraph grid() {
    return TripartiteHypergraph({3, 3, 3}, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
}

TripartiteHypergraph single_wicket() {
    return TripartiteHypergraph({3, 3, 3}, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 2}, {1, 2, 0}});
}

TripartiteHypergraph permuted(const TripartiteHypergraph& h, const std::vector<EdgeId>& order) {
    return sub_hypergraph(h, order);
}

}  // namespace

TEST(Hypergraph, RejectsBadInput) {
    EXPECT_THROW(TripartiteHypergraph({2, 2, 2}, {{0, 0, 2}}), std::invalid_argument);
    EXPECT_THROW(TripartiteHypergraph({2, 2, 2}, {{0, 1, 1}, {0, 1, 1}}), std::invalid_argument);
    const TripartiteHypergraph h({2, 2, 2}, {{0, 1, 1}, {1, 1, 0}});
    EXPECT_EQ(h.incident(1, 1).size(), 2u);
    EXPECT_EQ(h.vertex_count(), 6u);
}

TEST(Linearity, Examples) {
    const auto bad = is_linear(TripartiteHypergraph({2, 2, 2}, {{0, 0, 0}, {0, 0, 1}}));
    EXPECT_FALSE(bad.linear);
    EXPECT_EQ(bad.violation, std::make_pair(EdgeId{0}, EdgeId{1}));
    EXPECT_TRUE(is_linear(TripartiteHypergraph({2, 2, 2}, {{0, 0, 0}, {1, 1, 1}})).linear);
    EXPECT_TRUE(is_linear(grid()).linear);
}

TEST(Linearity, MatchesPairScan) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<VertexIndex> pick(0, 2);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Edge> edges;
        for (int i = 0; i < 6; ++i) {
            const Edge e{pick(rng), pick(rng), pick(rng)};
            if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
        }
        bool linear = true;
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j)
                if (oracle::common(edges[i], edges[j]) > 1) linear = false;
        EXPECT_EQ(is_linear(TripartiteHypergraph({3, 3, 3}, edges)).linear, linear);
    }
}

TEST(FindWickets, SingleWicket) {
    const auto h = single_wicket();
    const auto ws = find_wickets(h);
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_TRUE(is_wicket(h, ws[0]));
    EXPECT_TRUE(wicket_roles(h, ws[0]).has_value());
}

TEST(FindWickets, GridHasSix) {
    const auto h = grid();
    const auto ws = find_wickets(h);
    EXPECT_EQ(ws.size(), 6u);
    EXPECT_EQ(oracle::as_sets(ws), oracle::brute_wickets(h));
    for (const auto& w : ws) EXPECT_TRUE(is_wicket(h, w));
    EXPECT_EQ(find_wickets(h, 2).size(), 2u);
    EXPECT_TRUE(find_wickets(h, 0).empty());
}

TEST(FindWickets, FewEdgesGiveNothing) {
    EXPECT_TRUE(find_wickets(TripartiteHypergraph({3, 3, 3}, {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}, {0, 1, 2}})).empty());
    EXPECT_TRUE(find_wickets(TripartiteHypergraph()).empty());
}

TEST(FindWickets, RejectsNonLinear) {
    const TripartiteHypergraph h({2, 2, 2}, {{0, 0, 0}, {0, 0, 1}});
    EXPECT_THROW(find_wickets(h), std::invalid_argument);
    EXPECT_THROW(find_63(h), std::invalid_argument);
}

TEST(FindSixThree, Examples) {
    const TripartiteHypergraph tri({2, 2, 2}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}});
    const auto ws = find_63(tri);
    ASSERT_EQ(ws.size(), 1u);
    EXPECT_TRUE(is_six_three(tri, ws[0]));

    const TripartiteHypergraph sunflower({1, 3, 3}, {{0, 0, 0}, {0, 1, 1}, {0, 2, 2}});
    EXPECT_TRUE(find_63(sunflower).empty());
    EXPECT_TRUE(find_63(grid()).empty());
}

TEST(Detectors, MatchBruteForceOnRandomHypergraphs) {
    std::mt19937_64 rng(2024);
    std::size_t with_wicket = 0, with_63 = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t size = 3 + trial % 2;
        const auto h12 = oracle::random_linear(rng, size, 12);
        const auto ws = find_wickets(h12);
        EXPECT_EQ(oracle::as_sets(ws), oracle::brute_wickets(h12));
        for (const auto& w : ws) EXPECT_TRUE(is_wicket(h12, w));
        with_wicket += !ws.empty();

        const auto h20 = oracle::random_linear(rng, size + 1, 20);
        const auto ts = find_63(h20);
        EXPECT_EQ(oracle::as_sets(ts), oracle::brute_six_three(h20));
        EXPECT_EQ(ts.size(), oracle::as_sets(ts).size());
        for (const auto& t : ts) EXPECT_TRUE(is_six_three(h20, t));
        with_63 += !ts.empty();
    }
    // The family must exercise both detectors, not just agree on empty answers.
    EXPECT_GT(with_wicket, 10u);
    EXPECT_GT(with_63, 10u);
}

TEST(Detectors, PermutationInvariant) {
    std::mt19937_64 rng(99);
    auto by_edges = [](const TripartiteHypergraph& h, const auto& sets) {
        std::set<std::vector<Edge>> out;
        for (const auto& s : sets) {
            std::vector<Edge> es;
            for (auto id : s) es.push_back(h.edge(id));
            std::sort(es.begin(), es.end());
            out.insert(es);
        }
        return out;
    };
    for (int trial = 0; trial < 40; ++trial) {
        const auto h = oracle::random_linear(rng, 3 + trial % 2, 14);
        std::vector<EdgeId> order(h.edge_count());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const auto p = permuted(h, order);
        EXPECT_EQ(by_edges(h, oracle::as_sets(find_wickets(h))), by_edges(p, oracle::as_sets(find_wickets(p))));
        EXPECT_EQ(by_edges(h, oracle::as_sets(find_63(h))), by_edges(p, oracle::as_sets(find_63(p))));
    }
}

TEST(WicketRoles, LabelsMatchIncidences) {
    const auto h = grid();
    for (const auto& w : find_wickets(h)) {
        const auto r = wicket_roles(h, w);
        ASSERT_TRUE(r);
        const auto& p = h.edge(r->first);
        const auto& q = h.edge(r->second);
        EXPECT_EQ(h.edge(r->row_a)[0], p[0]);
        EXPECT_EQ(h.edge(r->row_b)[1], p[1]);
        EXPECT_EQ(h.edge(r->row_c)[2], p[2]);
        EXPECT_EQ(h.edge(r->row_a)[2], q[2]);
        EXPECT_EQ(h.edge(r->row_b)[0], q[0]);
        EXPECT_EQ(h.edge(r->row_c)[1], q[1]);
    }
    const TripartiteHypergraph tri({2, 2, 2}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {0, 0, 1}});
    EXPECT_FALSE(wicket_roles(tri, WicketWitness{{0, 1, 2}, {3, 4}}).has_value());
}

TEST(DegreeProfile, Examples) {
    const TripartiteHypergraph one({1, 1, 1}, {{0, 0, 0}});
    EXPECT_EQ(degree_profile(one).sorted_all(), (std::vector<std::size_t>{1, 1, 1}));
    EXPECT_EQ(degree_profile(single_wicket()).sorted_all(), (std::vector<std::size_t>{2, 2, 2, 2, 2, 2, 1, 1, 1}));
    const TripartiteHypergraph none({2, 1, 3}, {});
    EXPECT_EQ(degree_profile(none).sorted_all(), std::vector<std::size_t>(6, 0));
    EXPECT_EQ(degree_profile(grid()).max_degree(), 2u);
}

TEST(HypergraphFile, RoundTrip) {
    const auto h = grid();
    std::ostringstream out;
    write_hypergraph(out, h);
    EXPECT_EQ(out.str().substr(0, 16), "p tlh 3 3 3 6\n0 ");
    std::istringstream in("# comment\n" + out.str());
    const auto back = read_hypergraph(in);
    EXPECT_EQ(back.edges(), h.edges());
    EXPECT_EQ(back.class_sizes(), h.class_sizes());
}

TEST(HypergraphFile, Errors) {
    auto line_of = [](const std::string& text) -> std::optional<std::size_t> {
        std::istringstream in(text);
        try {
            read_hypergraph(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::nullopt;
    };
    EXPECT_EQ(line_of("p tlh 2 2 2 1\n0 0 2\n"), 2u);
    EXPECT_EQ(line_of("p tlh 2 2 2 1\n0 0\n"), 2u);
    EXPECT_EQ(line_of("q tlh 2 2 2 1\n"), 1u);
    EXPECT_EQ(line_of("p tlh 2 2 2 2\n0 0 0\n"), 0u);  // count mismatch
    EXPECT_EQ(line_of("p tlh 2 2 2 2\n0 0 0\n0 0 0\n"), 0u);
    EXPECT_EQ(line_of("p tlh 2 2 2 1\n0 0 0 1\n"), 2u);
    EXPECT_EQ(line_of("p tlh 2 2 2 1\n0 0 0\n"), std::nullopt);
}
