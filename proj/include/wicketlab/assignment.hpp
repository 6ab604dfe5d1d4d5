#pragma once

#include <array>
#include <functional>

#include "wicketlab/hypergraph.hpp"

namespace wicketlab {

/// Values satisfying the four wicket equations of a construction with edges
/// (a, a + s, a + k s) (or the Eisenstein analogue), in the labelling of
/// WicketRoles: columns (x, s) and (y, u); rows (x, w), (y, t), (z, v).
template <class T>
struct WicketAssignment {
    T x{}, y{}, z{};
    T s{}, t{}, u{}, v{}, w{};
};

/// The five edges named by an assignment, as a witness. `edge(base, dir)`
/// returns the edge id for a base point and direction.
template <class T, class EdgeLookup>
WicketWitness realize_wicket(const WicketAssignment<T>& a, EdgeLookup&& edge) {
    return WicketWitness{{edge(a.x, a.w), edge(a.y, a.t), edge(a.z, a.v)}, {edge(a.x, a.s), edge(a.y, a.u)}};
}

/// The five edges form a wicket on nine distinct vertices iff
///   s != t, u != v, t != u, s != w, s - t + u != v, s - t + u != w.
/// `reduce` maps a raw value to its canonical representative (e.g. mod n).
template <class T, class Reduce = std::identity>
bool wicket_vertices_distinct(const T& s, const T& t, const T& u, const T& v, const T& w, Reduce reduce = {}) {
    const T d = reduce(s - t + u);
    return !(s == t) && !(u == v) && !(t == u) && !(s == w) && !(d == v) && !(d == w);
}

}  // namespace wicketlab
