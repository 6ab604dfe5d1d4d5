#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "wicketlab/gf3.hpp"
#include "wicketlab/hypergraph.hpp"

namespace wicketlab {

namespace detail {

/// x + c*y on base-3 encodings of dimension n.
inline Encoding f3_axpy(Encoding x, Digit c, Encoding y, std::size_t n) {
    Encoding out = 0, place = 1;
    for (std::size_t i = 0; i < n; ++i) {
        out += ((x % 3 + c * (y % 3)) % 3) * place;
        x /= 3;
        y /= 3;
        place *= 3;
    }
    return out;
}

}  // namespace detail

/// Where an edge came from: the A-vertex (base, 0) and the direction (s, 1).
struct EdgeProvenance {
    F3Vector base;       // dimension n
    F3Vector direction;  // dimension n + 1, last digit 1
};

/// The hypergraph on F_3^n x {0,1,2}: a ~ (a,0), b ~ (a+s,1), c ~ (a+2s,2)
/// for every a in F_3^n and s in the cap. Vertex index in each class is the
/// encoding of the F_3^n part. Edge id = code(a) * |S| + index(s).
class RszF3Build {
public:
    std::size_t dimension() const noexcept { return cap_.dimension(); }
    const CapSet& cap() const noexcept { return cap_; }
    const CapSet& directions() const noexcept { return directions_; }
    const TripartiteHypergraph& graph() const noexcept { return graph_; }

    EdgeId edge_id(Encoding base, std::size_t direction) const {
        return static_cast<EdgeId>(base * cap_.size() + direction);
    }

    EdgeProvenance provenance(EdgeId id) const {
        const std::size_t k = cap_.size();
        return {F3Vector::decode(id / k, dimension()), directions_[id % k]};
    }

    /// The edge on the line through point (p, layer) of F_3^{n+1} with the
    /// given direction.
    EdgeId edge_through(Encoding p, Digit layer, std::size_t direction) const {
        const auto base = detail::f3_axpy(p, static_cast<Digit>((3 - layer) % 3), codes_[direction], dimension());
        return edge_id(base, direction);
    }

    /// Encodings of the cap elements (F_3^n parts of the directions).
    const std::vector<Encoding>& direction_codes() const noexcept { return codes_; }

private:
    friend RszF3Build build_rsz_f3(const CapSet& cap);

    CapSet cap_;
    CapSet directions_;
    std::vector<Encoding> codes_;
    TripartiteHypergraph graph_;
};

inline RszF3Build build_rsz_f3(const CapSet& cap) {
    if (!cap.verified()) throw std::invalid_argument("build_rsz_f3: cap must be verified AP3-free");
    if (cap.dimension() > 16) throw std::invalid_argument("build_rsz_f3: dimension too large to materialise");
    const std::size_t n = cap.dimension();
    const auto points = static_cast<std::size_t>(pow3(n));

    RszF3Build b;
    b.cap_ = cap;
    b.directions_ = lift_cap(cap);
    for (const auto& s : cap.elements()) b.codes_.push_back(s.encode());

    std::vector<Edge> edges;
    edges.reserve(points * cap.size());
    for (Encoding a = 0; a < points; ++a)
        for (Encoding s : b.codes_)
            edges.push_back({static_cast<VertexIndex>(a), static_cast<VertexIndex>(detail::f3_axpy(a, 1, s, n)),
                             static_cast<VertexIndex>(detail::f3_axpy(a, 2, s, n))});
    b.graph_ = TripartiteHypergraph({points, points, points}, std::move(edges));
    return b;
}

/// Overload that also checks the stated base dimension.
inline RszF3Build build_rsz_f3(const CapSet& cap, std::size_t n) {
    if (cap.dimension() != n) throw std::invalid_argument("build_rsz_f3: cap dimension does not match n");
    return build_rsz_f3(cap);
}

/// The six edges of one affine plane x + span{s, t} and the six wickets
/// obtained by dropping one of them.
struct PlaneWicketFamily {
    F3Vector base;  // minimal-encoding point of the plane, dimension n + 1
    std::size_t direction_s = 0;
    std::size_t direction_t = 0;    // indices into the cap, direction_s < direction_t
    std::array<EdgeId, 3> s_lines{};  // s_lines[j] passes through base + j*t
    std::array<EdgeId, 3> t_lines{};  // t_lines[i] passes through base + i*s
    std::array<WicketWitness, 6> wickets{};
};

/// For each unordered pair {s, t} of directions and each plane coset, the
/// family of six lines and six wickets. 3^{n+1} / 9 planes per pair.
inline std::vector<PlaneWicketFamily> enumerate_plane_wickets(const RszF3Build& b) {
    std::vector<PlaneWicketFamily> out;
    const std::size_t n = b.dimension();
    const auto& codes = b.direction_codes();
    const Encoding points = pow3(n);

    // Point of F_3^{n+1} as (code of the F_3^n part, layer); full code = part * 3 + layer.
    auto shift = [n](Encoding part, Digit layer, Encoding dir, Digit times) {
        return std::pair{detail::f3_axpy(part, times, dir, n), static_cast<Digit>((layer + times) % 3)};
    };

    for (std::size_t i = 0; i < codes.size(); ++i) {
        for (std::size_t j = i + 1; j < codes.size(); ++j) {
            for (Encoding full = 0; full < points * 3; ++full) {
                const Encoding part = full / 3;
                const auto layer = static_cast<Digit>(full % 3);
                bool minimal = true;
                for (Digit alpha = 0; alpha < 3 && minimal; ++alpha) {
                    const auto [pa, la] = shift(part, layer, codes[i], alpha);
                    for (Digit beta = 0; beta < 3; ++beta) {
                        const auto [pb, lb] = shift(pa, la, codes[j], beta);
                        if (pb * 3 + lb < full) {
                            minimal = false;
                            break;
                        }
                    }
                }
                if (!minimal) continue;

                PlaneWicketFamily f;
                f.base = F3Vector::decode(part, n).append(layer);
                f.direction_s = i;
                f.direction_t = j;
                for (Digit step = 0; step < 3; ++step) {
                    const auto [pt, lt] = shift(part, layer, codes[j], step);
                    f.s_lines[step] = b.edge_through(pt, lt, i);
                    const auto [ps, ls] = shift(part, layer, codes[i], step);
                    f.t_lines[step] = b.edge_through(ps, ls, j);
                }
                for (int drop = 0; drop < 3; ++drop) {
                    std::array<EdgeId, 2> s_cols{}, t_cols{};
                    for (int k = 0, c = 0; k < 3; ++k)
                        if (k != drop) {
                            s_cols[c] = f.s_lines[k];
                            t_cols[c] = f.t_lines[k];
                            ++c;
                        }
                    f.wickets[drop] = WicketWitness{f.t_lines, s_cols};
                    f.wickets[3 + drop] = WicketWitness{f.s_lines, t_cols};
                }
                out.push_back(std::move(f));
            }
        }
    }
    return out;
}

/// All wickets of the build, taken from the plane families.
inline std::vector<WicketWitness> plane_wickets(const RszF3Build& b) {
    std::vector<WicketWitness> out;
    for (const auto& f : enumerate_plane_wickets(b)) out.insert(out.end(), f.wickets.begin(), f.wickets.end());
    return out;
}

/// Values of x, y, z, s, t, u, v, w for a wicket of an F_3 build in the
/// labelling of wicket_roles. x, y, z are layer-0 points of F_3^{n+1};
/// s..w are lifted directions.
struct WicketLabels {
    F3Vector x, y, z;
    F3Vector s, t, u, v, w;
};

inline std::optional<WicketLabels> decode_wicket(const RszF3Build& b, const WicketWitness& witness) {
    const auto roles = wicket_roles(b.graph(), witness);
    if (!roles) return std::nullopt;
    auto point = [&](EdgeId e) { return b.provenance(e).base.append(0); };
    auto dir = [&](EdgeId e) { return b.provenance(e).direction; };
    return WicketLabels{point(roles->first), point(roles->second), point(roles->row_c),
                        dir(roles->first), dir(roles->row_b), dir(roles->second),
                        dir(roles->row_c), dir(roles->row_a)};
}

/// Maximum number of other wickets sharing an edge with a wicket.
inline std::size_t wicket_dependency_degree(std::size_t edge_count, std::span<const WicketWitness> wickets) {
    std::vector<std::vector<std::uint32_t>> through(edge_count);
    for (std::uint32_t i = 0; i < wickets.size(); ++i)
        for (EdgeId e : wickets[i].edge_set()) through.at(e).push_back(i);
    std::vector<std::uint32_t> stamp(wickets.size(), ~0u);
    std::size_t best = 0;
    for (std::uint32_t i = 0; i < wickets.size(); ++i) {
        std::size_t deg = 0;
        stamp[i] = i;
        for (EdgeId e : wickets[i].edge_set())
            for (std::uint32_t j : through[e])
                if (stamp[j] != i) {
                    stamp[j] = i;
                    ++deg;
                }
        best = std::max(best, deg);
    }
    return best;
}

inline std::size_t wicket_dependency_degree(const RszF3Build& b) {
    const auto wickets = plane_wickets(b);
    return wicket_dependency_degree(b.graph().edge_count(), wickets);
}

/// Upper bound on the dependency degree: 5 edges x 6 wickets per spanned plane x |S| partners.
constexpr std::size_t dependency_degree_bound(std::size_t cap_size) { return 30 * cap_size; }

}  // namespace wicketlab
