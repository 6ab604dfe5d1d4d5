#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wicketlab/error.hpp"

namespace wicketlab {

using VertexIndex = std::uint32_t;
using EdgeId = std::uint32_t;

/// One vertex from each class: (a, b, c).
using Edge = std::array<VertexIndex, 3>;

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

/// Number of common vertices of two transversal edges.
inline int shared_vertices(const Edge& e, const Edge& f) noexcept {
    return int(e[0] == f[0]) + int(e[1] == f[1]) + int(e[2] == f[2]);
}

/// 3-partite 3-uniform hypergraph. Vertex classes are index spaces
/// [0, |A|), [0, |B|), [0, |C|); edges pick one vertex from each.
class TripartiteHypergraph {
public:
    TripartiteHypergraph() : TripartiteHypergraph({0, 0, 0}, {}) {}

    TripartiteHypergraph(std::array<std::size_t, 3> class_sizes, std::vector<Edge> edges)
        : class_sizes_(class_sizes), edges_(std::move(edges)) {
        for (int c = 0; c < 3; ++c) incidence_[c].assign(class_sizes_[c], {});
        for (std::size_t id = 0; id < edges_.size(); ++id) {
            for (int c = 0; c < 3; ++c) {
                if (edges_[id][c] >= class_sizes_[c])
                    throw std::invalid_argument("TripartiteHypergraph: vertex index out of range in edge " +
                                                std::to_string(id));
                incidence_[c][edges_[id][c]].push_back(static_cast<EdgeId>(id));
            }
        }
        // Duplicates share their A-vertex, so checking within each A-star suffices.
        for (const auto& star : incidence_[0])
            for (std::size_t i = 0; i < star.size(); ++i)
                for (std::size_t j = i + 1; j < star.size(); ++j)
                    if (edges_[star[i]] == edges_[star[j]])
                        throw std::invalid_argument("TripartiteHypergraph: duplicate edge " +
                                                    std::to_string(star[j]));
    }

    const std::array<std::size_t, 3>& class_sizes() const noexcept { return class_sizes_; }
    std::size_t vertex_count() const noexcept { return class_sizes_[0] + class_sizes_[1] + class_sizes_[2]; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId id) const { return edges_.at(id); }

    /// Edge ids through vertex v of class c, ascending.
    std::span<const EdgeId> incident(int c, VertexIndex v) const { return incidence_[c].at(v); }

private:
    std::array<std::size_t, 3> class_sizes_;
    std::vector<Edge> edges_;
    std::array<std::vector<std::vector<EdgeId>>, 3> incidence_;
};

/// Keeps the listed edges (in the given order) on the same vertex classes.
inline TripartiteHypergraph sub_hypergraph(const TripartiteHypergraph& h, std::span<const EdgeId> keep) {
    std::vector<Edge> edges;
    edges.reserve(keep.size());
    for (EdgeId id : keep) edges.push_back(h.edge(id));
    return TripartiteHypergraph(h.class_sizes(), std::move(edges));
}

struct LinearityCheck {
    bool linear = true;
    std::optional<std::pair<EdgeId, EdgeId>> violation;
};

/// Linear iff no two edges share two or more vertices. The reported pair is
/// the lexicographically smallest violating (i, j), i < j.
inline LinearityCheck is_linear(const TripartiteHypergraph& h) {
    for (EdgeId i = 0; i < h.edge_count(); ++i) {
        const Edge& e = h.edge(i);
        std::optional<EdgeId> partner;
        for (int c = 0; c < 3; ++c)
            for (EdgeId j : h.incident(c, e[c]))
                if (j > i && shared_vertices(e, h.edge(j)) >= 2 && (!partner || j < *partner)) partner = j;
        if (partner) return {false, std::make_pair(i, *partner)};
    }
    return {};
}

/// Three pairwise disjoint rows crossed by two disjoint columns.
struct WicketWitness {
    std::array<EdgeId, 3> rows{};
    std::array<EdgeId, 2> columns{};

    /// Sorted 5-edge set; the identity of the sub-hypergraph.
    std::array<EdgeId, 5> edge_set() const {
        std::array<EdgeId, 5> s{rows[0], rows[1], rows[2], columns[0], columns[1]};
        std::sort(s.begin(), s.end());
        return s;
    }
};

/// Three edges pairwise meeting in three distinct vertices (an edge triangle on 6 vertices).
struct SixThreeWitness {
    std::array<EdgeId, 3> edges{};
};

/// Checks the wicket conditions on the edges named by w.
inline bool is_wicket(const TripartiteHypergraph& h, const WicketWitness& w) {
    const auto& r = w.rows;
    const auto& c = w.columns;
    if (shared_vertices(h.edge(c[0]), h.edge(c[1])) != 0) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (shared_vertices(h.edge(r[i]), h.edge(r[j])) != 0) return false;
    for (EdgeId row : r)
        for (EdgeId col : c)
            if (shared_vertices(h.edge(row), h.edge(col)) != 1) return false;
    // Disjoint rows cover 9 vertices, which the columns then lie within.
    return true;
}

inline bool is_six_three(const TripartiteHypergraph& h, const SixThreeWitness& w) {
    const Edge& e = h.edge(w.edges[0]);
    const Edge& f = h.edge(w.edges[1]);
    const Edge& g = h.edge(w.edges[2]);
    if (shared_vertices(e, f) != 1 || shared_vertices(e, g) != 1 || shared_vertices(f, g) != 1) return false;
    // Pairwise intersections sit in three different classes iff no vertex is common to all three.
    for (int c = 0; c < 3; ++c)
        if (e[c] == f[c] && f[c] == g[c]) return false;
    return true;
}

/// Edge roles of a wicket in the labelling
///   x+s = y+t,  x+2s = z+2v,  y+u = z+v,  x+2w = y+2u
/// (generalised to any tripartite hypergraph): `first` is the column (x, s),
/// `second` the column (y, u); row_a = (x, w) meets `first` in class A,
/// row_b = (y, t) in class B, row_c = (z, v) in class C. The second column
/// then meets row_a in C, row_b in A and row_c in B. Exactly one of the two
/// columns can play `first`.
struct WicketRoles {
    EdgeId first, second, row_a, row_b, row_c;
};

inline std::optional<WicketRoles> wicket_roles(const TripartiteHypergraph& h, const WicketWitness& w) {
    if (!is_wicket(h, w)) return std::nullopt;
    for (int swap = 0; swap < 2; ++swap) {
        const EdgeId p = w.columns[swap], q = w.columns[1 - swap];
        const Edge& pe = h.edge(p);
        const Edge& qe = h.edge(q);
        std::array<EdgeId, 3> by_class{};
        for (EdgeId r : w.rows)
            for (int c = 0; c < 3; ++c)
                if (h.edge(r)[c] == pe[c]) by_class[c] = r;
        if (qe[2] == h.edge(by_class[0])[2] && qe[0] == h.edge(by_class[1])[0] && qe[1] == h.edge(by_class[2])[1])
            return WicketRoles{p, q, by_class[0], by_class[1], by_class[2]};
    }
    return std::nullopt;
}

namespace detail {

inline void require_linear(const TripartiteHypergraph& h, const char* who) {
    if (auto check = is_linear(h); !check.linear)
        throw std::invalid_argument(std::string(who) + ": hypergraph is not linear (edges " +
                                    std::to_string(check.violation->first) + ", " +
                                    std::to_string(check.violation->second) + ")");
}

}  // namespace detail

/// All wickets (up to limit), deduplicated by 5-edge set.
///
/// Outer loop over disjoint column pairs (c1 < c2). A row candidate meets each
/// column in exactly one vertex; in a tripartite hypergraph every such edge is
/// reachable through a vertex of c1. Any three pairwise disjoint candidates
/// complete a wicket. Order is deterministic for a fixed edge order.
inline std::vector<WicketWitness> find_wickets(const TripartiteHypergraph& h, std::size_t limit = kUnlimited) {
    detail::require_linear(h, "find_wickets");
    std::vector<WicketWitness> out;
    std::set<std::array<EdgeId, 5>> seen;
    std::vector<EdgeId> candidates;
    const auto m = static_cast<EdgeId>(h.edge_count());
    if (limit == 0) return out;

    for (EdgeId c1 = 0; c1 < m; ++c1) {
        const Edge& col1 = h.edge(c1);
        for (EdgeId c2 = c1 + 1; c2 < m; ++c2) {
            const Edge& col2 = h.edge(c2);
            if (shared_vertices(col1, col2) != 0) continue;
            candidates.clear();
            for (int c = 0; c < 3; ++c)
                for (EdgeId r : h.incident(c, col1[c]))
                    if (r != c1 && shared_vertices(h.edge(r), col2) == 1) candidates.push_back(r);
            std::sort(candidates.begin(), candidates.end());
            if (candidates.size() < 3) continue;
            const std::size_t k = candidates.size();
            for (std::size_t i = 0; i < k; ++i) {
                const Edge& ri = h.edge(candidates[i]);
                for (std::size_t j = i + 1; j < k; ++j) {
                    const Edge& rj = h.edge(candidates[j]);
                    if (shared_vertices(ri, rj) != 0) continue;
                    for (std::size_t l = j + 1; l < k; ++l) {
                        const Edge& rl = h.edge(candidates[l]);
                        if (shared_vertices(ri, rl) != 0 || shared_vertices(rj, rl) != 0) continue;
                        WicketWitness w{{candidates[i], candidates[j], candidates[l]}, {c1, c2}};
                        if (!seen.insert(w.edge_set()).second) continue;
                        out.push_back(w);
                        if (out.size() >= limit) return out;
                    }
                }
            }
        }
    }
    return out;
}

/// All (6,3)-configurations (up to limit), each reported once as a sorted triple.
inline std::vector<SixThreeWitness> find_63(const TripartiteHypergraph& h, std::size_t limit = kUnlimited) {
    detail::require_linear(h, "find_63");
    std::vector<SixThreeWitness> out;
    if (limit == 0) return out;
    const auto m = static_cast<EdgeId>(h.edge_count());
    // Enumerate each triangle from its smallest edge e and the middle edge f.
    for (EdgeId e = 0; e < m; ++e) {
        const Edge& ee = h.edge(e);
        for (int i = 0; i < 3; ++i) {
            for (EdgeId f : h.incident(i, ee[i])) {
                if (f <= e) continue;
                const Edge& ff = h.edge(f);
                const int j = (i + 1) % 3, l = (i + 2) % 3;
                // g meets e in class j and f in class l, or the other way round.
                for (auto [je, lf] : {std::pair{j, l}, std::pair{l, j}}) {
                    for (EdgeId g : h.incident(je, ee[je])) {
                        if (g <= f) continue;
                        const Edge& gg = h.edge(g);
                        if (gg[lf] == ff[lf] && gg[i] != ee[i]) {
                            out.push_back({{e, f, g}});
                            if (out.size() >= limit) return out;
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SixThreeWitness& a, const SixThreeWitness& b) { return a.edges < b.edges; });
    return out;
}

/// Degree of every vertex, per class, indexed by vertex.
struct DegreeProfile {
    std::array<std::vector<std::size_t>, 3> degrees;

    /// Degrees of all vertices as one descending sequence.
    std::vector<std::size_t> sorted_all() const {
        std::vector<std::size_t> all;
        for (const auto& d : degrees) all.insert(all.end(), d.begin(), d.end());
        std::sort(all.rbegin(), all.rend());
        return all;
    }

    std::size_t max_degree() const {
        std::size_t best = 0;
        for (const auto& d : degrees)
            for (auto x : d) best = std::max(best, x);
        return best;
    }
};

inline DegreeProfile degree_profile(const TripartiteHypergraph& h) {
    DegreeProfile p;
    for (int c = 0; c < 3; ++c) {
        p.degrees[c].resize(h.class_sizes()[c]);
        for (VertexIndex v = 0; v < h.class_sizes()[c]; ++v) p.degrees[c][v] = h.incident(c, v).size();
    }
    return p;
}

// Text format:
//   p tlh |A| |B| |C| m
//   a b c            (m lines, 0-based)
// '#' lines and blank lines are ignored.

inline void write_hypergraph(std::ostream& out, const TripartiteHypergraph& h) {
    const auto& s = h.class_sizes();
    out << "p tlh " << s[0] << ' ' << s[1] << ' ' << s[2] << ' ' << h.edge_count() << '\n';
    for (const auto& e : h.edges()) out << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
}

inline TripartiteHypergraph read_hypergraph(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::array<std::size_t, 3>> sizes;
    std::size_t expected = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        if (!sizes) {
            std::string p, tag;
            std::array<std::size_t, 3> s{};
            if (!(fields >> p >> tag >> s[0] >> s[1] >> s[2] >> expected) || p != "p" || tag != "tlh")
                throw ParseError(lineno, "expected header 'p tlh |A| |B| |C| m'");
            sizes = s;
        } else {
            long long a = -1, b = -1, c = -1;
            if (!(fields >> a >> b >> c) || a < 0 || b < 0 || c < 0)
                throw ParseError(lineno, "expected edge 'a b c' with non-negative indices");
            const Edge e{VertexIndex(a), VertexIndex(b), VertexIndex(c)};
            for (int k = 0; k < 3; ++k)
                if (e[k] >= (*sizes)[k]) throw ParseError(lineno, "vertex index out of range");
            edges.push_back(e);
        }
        std::string extra;
        if (fields >> extra) throw ParseError(lineno, "unexpected trailing token '" + extra + "'");
    }
    if (!sizes) throw ParseError(0, "missing 'p tlh' header");
    if (edges.size() != expected)
        throw ParseError(0, "header announces " + std::to_string(expected) + " edges, found " +
                                std::to_string(edges.size()));
    try {
        return TripartiteHypergraph(*sizes, std::move(edges));
    } catch (const std::invalid_argument& err) {
        throw ParseError(0, err.what());
    }
}

}  // namespace wicketlab
