#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wicketlab/assignment.hpp"
#include "wicketlab/eisenstein.hpp"
#include "wicketlab/hypergraph.hpp"

namespace wicketlab {

/// Edges (a, a - s, a + w s) for a in the region and s in S. All three
/// classes index the same vertex list: the region expanded by {0} u (-S) u wS
/// so that every endpoint is a vertex. Edge id = index(a in region) * |S| + index(s).
struct EisensteinBuild {
    std::int64_t bound = 0;
    NormMode mode = NormMode::paper;
    std::vector<EisensteinPoint> region;    // sorted
    std::vector<EisensteinPoint> set;       // sorted
    std::vector<EisensteinPoint> vertices;  // sorted
    TripartiteHypergraph graph;

    std::size_t vertex_index(EisensteinPoint p) const { return index_in(vertices, p); }

    EdgeId edge_id(EisensteinPoint base, EisensteinPoint s) const {
        return static_cast<EdgeId>(index_in(region, base) * set.size() + index_in(set, s));
    }

    std::pair<EisensteinPoint, EisensteinPoint> provenance(EdgeId id) const {
        return {region[id / set.size()], set[id % set.size()]};
    }

private:
    static std::size_t index_in(const std::vector<EisensteinPoint>& v, EisensteinPoint p) {
        const auto it = std::lower_bound(v.begin(), v.end(), p);
        if (it == v.end() || *it != p) throw std::out_of_range("EisensteinBuild: point " + p.to_string() + " not present");
        return static_cast<std::size_t>(it - v.begin());
    }
};

inline EisensteinBuild build_eisenstein(std::span<const EisensteinPoint> set, std::int64_t bound,
                                        NormMode mode = NormMode::paper) {
    EisensteinBuild b;
    b.bound = bound;
    b.mode = mode;
    b.region = eisenstein_region(bound, mode);
    b.set.assign(set.begin(), set.end());
    std::sort(b.set.begin(), b.set.end());
    if (std::adjacent_find(b.set.begin(), b.set.end()) != b.set.end())
        throw std::invalid_argument("build_eisenstein: duplicate point in S");
    for (const auto& s : b.set)
        if (!std::binary_search(b.region.begin(), b.region.end(), s))
            throw std::invalid_argument("build_eisenstein: point " + s.to_string() + " outside the region");

    std::unordered_set<EisensteinPoint, EisensteinPointHash> expanded(b.region.begin(), b.region.end());
    for (const auto& p : b.region)
        for (const auto& s : b.set) {
            expanded.insert(p - s);
            expanded.insert(p + times_omega(s));
        }
    b.vertices.assign(expanded.begin(), expanded.end());
    std::sort(b.vertices.begin(), b.vertices.end());

    std::vector<Edge> edges;
    edges.reserve(b.region.size() * b.set.size());
    for (const auto& a : b.region)
        for (const auto& s : b.set)
            edges.push_back({VertexIndex(b.vertex_index(a)), VertexIndex(b.vertex_index(a - s)),
                             VertexIndex(b.vertex_index(a + times_omega(s)))});
    const auto size = b.vertices.size();
    b.graph = TripartiteHypergraph({size, size, size}, std::move(edges));
    return b;
}

/// Solves the wicket equations
///   x - s = y - t,  x + ws = z + wv,  y - u = z - v,  x + ww = y + wu
/// over S, with x, y, z ranging over the region. Eliminating x, y, z leaves
///   t - w = w(w - v)   and   s = t + w(u - w),
/// and s must lie in S. A solution is a wicket iff its nine vertices are
/// distinct and all three base points lie in the region.
inline std::optional<WicketAssignment<EisensteinPoint>> find_eisenstein_wicket_assignment(
    std::span<const EisensteinPoint> set, std::span<const EisensteinPoint> region) {
    std::vector<EisensteinPoint> sorted(set.begin(), set.end());
    std::sort(sorted.begin(), sorted.end());
    const std::unordered_set<EisensteinPoint, EisensteinPointHash> members(sorted.begin(), sorted.end());
    const std::unordered_set<EisensteinPoint, EisensteinPointHash> inside(region.begin(), region.end());
    for (const auto& w : sorted)
        for (const auto& v : sorted) {
            const EisensteinPoint t = w + times_omega(w - v);
            if (!members.count(t)) continue;
            for (const auto& u : sorted) {
                const EisensteinPoint s = t + times_omega(u - w);
                if (!members.count(s) || !wicket_vertices_distinct(s, t, u, v, w)) continue;
                for (const auto& x : region) {
                    const EisensteinPoint y = x - s + t;
                    const EisensteinPoint z = y - u + v;
                    if (inside.count(y) && inside.count(z)) return WicketAssignment<EisensteinPoint>{x, y, z, s, t, u, v, w};
                }
            }
        }
    return std::nullopt;
}

inline std::optional<WicketAssignment<EisensteinPoint>> find_eisenstein_wicket_assignment(const EisensteinBuild& b) {
    return find_eisenstein_wicket_assignment(b.set, b.region);
}

inline WicketWitness realize_wicket(const EisensteinBuild& b, const WicketAssignment<EisensteinPoint>& a) {
    return realize_wicket(a, [&](EisensteinPoint base, EisensteinPoint dir) { return b.edge_id(base, dir); });
}

}  // namespace wicketlab
