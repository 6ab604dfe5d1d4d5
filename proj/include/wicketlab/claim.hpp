#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wicketlab/hypergraph.hpp"

namespace wicketlab {

// Exhaustive check that every linear 5-edge system on the 3x3x3 grid
// (classes of 3 vertices, 27 transversal edges) contains a wicket or a
// (6,3)-configuration.

inline constexpr std::size_t kGridEdges = 27;

/// The 27 transversal edges (a, b, c), a-major.
inline std::vector<Edge> grid_edges() {
    std::vector<Edge> out;
    for (VertexIndex a = 0; a < 3; ++a)
        for (VertexIndex b = 0; b < 3; ++b)
            for (VertexIndex c = 0; c < 3; ++c) out.push_back({a, b, c});
    return out;
}

template <std::size_t N>
bool pairwise_linear(const std::array<Edge, N>& edges) {
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (shared_vertices(edges[i], edges[j]) > 1) return false;
    return true;
}

template <std::size_t N>
std::size_t covered_vertices(const std::array<Edge, N>& edges) {
    std::array<std::array<bool, 3>, 3> hit{};
    for (const auto& e : edges)
        for (int c = 0; c < 3; ++c) hit[c][e[c]] = true;
    std::size_t n = 0;
    for (const auto& cls : hit) n += static_cast<std::size_t>(std::count(cls.begin(), cls.end(), true));
    return n;
}

template <std::size_t N>
TripartiteHypergraph grid_system(const std::array<Edge, N>& edges) {
    return TripartiteHypergraph({3, 3, 3}, std::vector<Edge>(edges.begin(), edges.end()));
}

/// One examined 5-edge system.
struct ClaimRow {
    std::array<Edge, 5> edges{};
    bool linear = false;
    bool wicket = false;
    bool six_three = false;
    std::size_t covered = 0;
};

struct ClaimReport {
    std::size_t candidates = 0;
    std::size_t linear = 0;
    std::size_t wicket_only = 0;
    std::size_t six_three_only = 0;
    std::size_t both = 0;
    std::size_t linear_full_coverage = 0;            // linear systems touching all 9 vertices
    std::map<std::size_t, std::size_t> coverage;     // covered vertices -> linear systems
    std::vector<std::array<Edge, 5>> counterexamples;
    std::vector<ClaimRow> rows;  // filled when requested

    std::size_t with_wicket() const noexcept { return wicket_only + both; }
    std::size_t with_six_three() const noexcept { return six_three_only + both; }
    bool verified() const noexcept { return counterexamples.empty(); }
};

struct ClaimOptions {
    /// Detector for "contains a wicket"; default find_wickets with limit 1.
    std::function<bool(const TripartiteHypergraph&)> has_wicket;
    /// Detector for "contains a (6,3)"; default find_63 with limit 1.
    std::function<bool(const TripartiteHypergraph&)> has_six_three;
    /// Permutation of the 27 grid edges defining the enumeration order; empty = a-major order.
    std::vector<std::size_t> edge_order;
    std::size_t jobs = 1;
    bool collect_rows = false;
};

namespace detail {

inline std::vector<Edge> ordered_grid(const std::vector<std::size_t>& order) {
    const auto base = grid_edges();
    if (order.empty()) return base;
    if (order.size() != kGridEdges) throw std::invalid_argument("ClaimOptions: edge_order must permute 27 edges");
    std::vector<Edge> out;
    std::vector<bool> used(kGridEdges, false);
    for (auto i : order) {
        if (i >= kGridEdges || used[i]) throw std::invalid_argument("ClaimOptions: edge_order is not a permutation");
        used[i] = true;
        out.push_back(base[i]);
    }
    return out;
}

inline void merge(ClaimReport& into, ClaimReport&& part) {
    into.candidates += part.candidates;
    into.linear += part.linear;
    into.wicket_only += part.wicket_only;
    into.six_three_only += part.six_three_only;
    into.both += part.both;
    into.linear_full_coverage += part.linear_full_coverage;
    for (auto [k, v] : part.coverage) into.coverage[k] += v;
    into.counterexamples.insert(into.counterexamples.end(), part.counterexamples.begin(), part.counterexamples.end());
    into.rows.insert(into.rows.end(), std::make_move_iterator(part.rows.begin()), std::make_move_iterator(part.rows.end()));
}

}  // namespace detail

/// Classifies every 5-subset of the grid edges. Work is split by the first
/// edge of the subset; partial reports are merged in order, so the result
/// does not depend on `jobs`.
inline ClaimReport verify_claim1(const ClaimOptions& options = {}) {
    const auto edges = detail::ordered_grid(options.edge_order);
    auto has_wicket = options.has_wicket ? options.has_wicket
                                         : [](const TripartiteHypergraph& h) { return !find_wickets(h, 1).empty(); };
    auto has_63 = options.has_six_three ? options.has_six_three
                                        : [](const TripartiteHypergraph& h) { return !find_63(h, 1).empty(); };

    auto run_first = [&](std::size_t i0) {
        ClaimReport part;
        std::array<Edge, 5> sys{};
        sys[0] = edges[i0];
        for (std::size_t i1 = i0 + 1; i1 < kGridEdges; ++i1)
            for (std::size_t i2 = i1 + 1; i2 < kGridEdges; ++i2)
                for (std::size_t i3 = i2 + 1; i3 < kGridEdges; ++i3)
                    for (std::size_t i4 = i3 + 1; i4 < kGridEdges; ++i4) {
                        sys[1] = edges[i1];
                        sys[2] = edges[i2];
                        sys[3] = edges[i3];
                        sys[4] = edges[i4];
                        ++part.candidates;
                        ClaimRow row{sys, pairwise_linear(sys), false, false, covered_vertices(sys)};
                        if (row.linear) {
                            ++part.linear;
                            ++part.coverage[row.covered];
                            if (row.covered == 9) ++part.linear_full_coverage;
                            const auto h = grid_system(sys);
                            row.wicket = has_wicket(h);
                            row.six_three = has_63(h);
                            if (row.wicket && row.six_three)
                                ++part.both;
                            else if (row.wicket)
                                ++part.wicket_only;
                            else if (row.six_three)
                                ++part.six_three_only;
                            else
                                part.counterexamples.push_back(sys);
                        }
                        if (options.collect_rows) part.rows.push_back(row);
                    }
        return part;
    };

    ClaimReport report;
    const std::size_t jobs = std::max<std::size_t>(1, options.jobs);
    for (std::size_t start = 0; start < kGridEdges; start += jobs) {
        std::vector<std::future<ClaimReport>> batch;
        for (std::size_t i0 = start; i0 < std::min(kGridEdges, start + jobs); ++i0)
            batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred, run_first, i0));
        for (auto& f : batch) detail::merge(report, f.get());
    }
    return report;
}

struct MinimalityReport {
    std::size_t candidates = 0;      // C(27, 4)
    std::size_t linear = 0;
    std::size_t neither = 0;         // linear, no wicket, no (6,3)
    std::optional<std::array<Edge, 4>> witness;  // first such system
};

/// Shows 5 edges are needed: scans all 4-edge systems for one with neither configuration.
inline MinimalityReport minimality_check() {
    const auto edges = grid_edges();
    MinimalityReport r;
    std::array<Edge, 4> sys{};
    for (std::size_t i0 = 0; i0 < kGridEdges; ++i0)
        for (std::size_t i1 = i0 + 1; i1 < kGridEdges; ++i1)
            for (std::size_t i2 = i1 + 1; i2 < kGridEdges; ++i2)
                for (std::size_t i3 = i2 + 1; i3 < kGridEdges; ++i3) {
                    sys = {edges[i0], edges[i1], edges[i2], edges[i3]};
                    ++r.candidates;
                    if (!pairwise_linear(sys)) continue;
                    ++r.linear;
                    const auto h = grid_system(sys);
                    if (find_wickets(h, 1).empty() && find_63(h, 1).empty()) {
                        ++r.neither;
                        if (!r.witness) r.witness = sys;
                    }
                }
    return r;
}

/// Degree statistics over all linear 5-edge grid systems.
struct DegreeAudit {
    std::size_t linear = 0;
    std::size_t with_degree3 = 0;           // some vertex lies on 3 edges
    std::size_t with_degree3_and_63 = 0;
    std::size_t without_63 = 0;
    std::size_t without_63_max_degree_2 = 0;
    std::size_t without_63_full_coverage = 0;
    std::size_t without_63_six_twos = 0;    // degree sequence 2,2,2,2,2,2,1,1,1
    std::map<std::string, std::size_t> distribution;  // descending degree sequence -> systems

    /// A degree-3 vertex forces a (6,3); without a (6,3) every vertex has
    /// degree 1 or 2, all nine are covered, six of them twice.
    bool consistent() const noexcept {
        return with_degree3 == with_degree3_and_63 && without_63_max_degree_2 == without_63 &&
               without_63_full_coverage == without_63 && without_63_six_twos == without_63;
    }
};

inline std::string degree_sequence_key(const std::vector<std::size_t>& degrees) {
    std::string key;
    for (auto d : degrees) key += std::to_string(d);
    return key;
}

inline DegreeAudit degree_structure_audit() {
    const auto edges = grid_edges();
    DegreeAudit audit;
    const std::vector<std::size_t> six_twos{2, 2, 2, 2, 2, 2, 1, 1, 1};
    std::array<Edge, 5> sys{};
    for (std::size_t i0 = 0; i0 < kGridEdges; ++i0)
        for (std::size_t i1 = i0 + 1; i1 < kGridEdges; ++i1)
            for (std::size_t i2 = i1 + 1; i2 < kGridEdges; ++i2)
                for (std::size_t i3 = i2 + 1; i3 < kGridEdges; ++i3)
                    for (std::size_t i4 = i3 + 1; i4 < kGridEdges; ++i4) {
                        sys = {edges[i0], edges[i1], edges[i2], edges[i3], edges[i4]};
                        if (!pairwise_linear(sys)) continue;
                        ++audit.linear;
                        const auto h = grid_system(sys);
                        const auto degrees = degree_profile(h).sorted_all();
                        ++audit.distribution[degree_sequence_key(degrees)];
                        const bool has63 = !find_63(h, 1).empty();
                        if (degrees.front() >= 3) {
                            ++audit.with_degree3;
                            if (has63) ++audit.with_degree3_and_63;
                        }
                        if (!has63) {
                            ++audit.without_63;
                            if (degrees.front() <= 2) ++audit.without_63_max_degree_2;
                            if (covered_vertices(sys) == 9) ++audit.without_63_full_coverage;
                            if (degrees == six_twos) ++audit.without_63_six_twos;
                        }
                    }
    return audit;
}

}  // namespace wicketlab
