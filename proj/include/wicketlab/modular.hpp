#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wicketlab/assignment.hpp"
#include "wicketlab/hypergraph.hpp"

namespace wicketlab {

constexpr std::int64_t modular_order(std::int64_t k) { return k * k - k + 1; }

constexpr std::int64_t mod_reduce(std::int64_t x, std::int64_t n) {
    const std::int64_t r = x % n;
    return r < 0 ? r + n : r;
}

/// Edges (a, a + s, a + k s) over three copies of Z/n, n = k^2 - k + 1.
/// Edge id = a * |S| + index(s). Since gcd(k, n) = gcd(k - 1, n) = 1 any
/// two vertices of an edge determine the third, so the hypergraph is linear.
struct ModularBuild {
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::vector<std::int64_t> set;  // ascending
    TripartiteHypergraph graph;

    std::size_t index_of(std::int64_t s) const {
        const auto it = std::lower_bound(set.begin(), set.end(), s);
        if (it == set.end() || *it != s) throw std::out_of_range("ModularBuild: " + std::to_string(s) + " not in S");
        return static_cast<std::size_t>(it - set.begin());
    }

    EdgeId edge_id(std::int64_t a, std::int64_t s) const {
        return static_cast<EdgeId>(static_cast<std::size_t>(mod_reduce(a, n)) * set.size() + index_of(s));
    }

    std::pair<std::int64_t, std::int64_t> provenance(EdgeId id) const {
        return {static_cast<std::int64_t>(id / set.size()), set[id % set.size()]};
    }
};

inline ModularBuild build_modular(std::span<const std::int64_t> set, std::int64_t k) {
    if (k < 2) throw std::invalid_argument("build_modular: k must be at least 2");
    ModularBuild b;
    b.k = k;
    b.n = modular_order(k);
    b.set.assign(set.begin(), set.end());
    std::sort(b.set.begin(), b.set.end());
    if (std::adjacent_find(b.set.begin(), b.set.end()) != b.set.end())
        throw std::invalid_argument("build_modular: duplicate element in S");
    for (auto s : b.set)
        if (s < 0 || s >= b.n)
            throw std::invalid_argument("build_modular: element " + std::to_string(s) + " outside Z/" +
                                        std::to_string(b.n));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(b.n) * b.set.size());
    for (std::int64_t a = 0; a < b.n; ++a)
        for (auto s : b.set)
            edges.push_back({VertexIndex(a), VertexIndex(mod_reduce(a + s, b.n)), VertexIndex(mod_reduce(a + k * s, b.n))});
    const auto size = static_cast<std::size_t>(b.n);
    b.graph = TripartiteHypergraph({size, size, size}, std::move(edges));
    return b;
}

/// Solves the wicket equations
///   x + s = y + t,  x + ks = z + kv,  y + u = z + v,  x + kw = y + ku   (mod n)
/// over S. Eliminating x, y, z leaves
///   k t - (k-1) v = w   and   s = k w + t - k u,
/// so u survives through s, which must lie in S as well. A solution is a
/// wicket iff its nine vertices are distinct. x is a free translation, fixed to 0.
inline std::optional<WicketAssignment<std::int64_t>> find_modular_wicket_assignment(std::span<const std::int64_t> set,
                                                                                   std::int64_t k) {
    const std::int64_t n = modular_order(k);
    std::vector<std::int64_t> sorted(set.begin(), set.end());
    std::sort(sorted.begin(), sorted.end());
    auto in_set = [&](std::int64_t x) { return std::binary_search(sorted.begin(), sorted.end(), x); };
    auto reduce = [n](std::int64_t x) { return mod_reduce(x, n); };
    for (auto t : sorted)
        for (auto v : sorted) {
            const std::int64_t w = reduce(k * t - (k - 1) * v);
            if (!in_set(w)) continue;
            for (auto u : sorted) {
                const std::int64_t s = reduce(k * w + t - k * u);
                if (!in_set(s) || !wicket_vertices_distinct(s, t, u, v, w, reduce)) continue;
                const std::int64_t y = reduce(s - t);
                return WicketAssignment<std::int64_t>{0, y, reduce(y + u - v), s, t, u, v, w};
            }
        }
    return std::nullopt;
}

inline WicketWitness realize_wicket(const ModularBuild& b, const WicketAssignment<std::int64_t>& a) {
    return realize_wicket(a, [&](std::int64_t base, std::int64_t dir) { return b.edge_id(base, dir); });
}

}  // namespace wicketlab
