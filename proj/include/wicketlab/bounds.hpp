#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "wicketlab/coloring.hpp"
#include "wicketlab/rsz_f3.hpp"

namespace wicketlab {

/// Best known upper bound on caps in F_3^n is 2.756^n.
inline constexpr double kCapUpperBoundBase = 2.756;

/// Exponent of ex_L(m, W) >= m^e given caps of size base^n:
/// edges ~ (3 base^{3/4})^n on m = 3^{n+1} vertices, so e = 1 + (3/4) log_3(base).
inline double asymptotic_exponent(double base) {
    if (!(base > 1.0)) throw std::invalid_argument("asymptotic_exponent: base must exceed 1");
    return 1.0 + 0.75 * std::log(base) / std::log(3.0);
}

struct BoundsReport {
    std::size_t n = 0;
    std::size_t cap_size = 0;
    std::uint64_t vertices = 0;  // m = 3^{n+1}
    std::size_t edges_total = 0;
    std::size_t edges_selected = 0;
    std::size_t k = 0;
    std::optional<double> exponent;             // log(edges_selected) / log(m)
    std::optional<double> asymptotic_exponent;  // at base |S|^{1/n}, when that exceeds 1
};

inline BoundsReport exponent_report(const RszF3Build& b, const ColoringResult& colouring) {
    BoundsReport r;
    r.n = b.dimension();
    r.cap_size = b.cap().size();
    r.vertices = pow3(r.n + 1);
    r.edges_total = b.graph().edge_count();
    r.edges_selected = colouring.selected_edges.size();
    r.k = colouring.coloring.k;
    if (r.edges_selected > 0)
        r.exponent = std::log(static_cast<double>(r.edges_selected)) / std::log(static_cast<double>(r.vertices));
    if (r.n > 0 && r.cap_size > 1)
        r.asymptotic_exponent =
            wicketlab::asymptotic_exponent(std::pow(static_cast<double>(r.cap_size), 1.0 / static_cast<double>(r.n)));
    return r;
}

struct CorollaryBound {
    double c = 0;
    double base = 0;        // caps would be at most base^n
    bool improves = false;  // base < 2.756
};

/// An upper bound ex_L(m, W) <= m^{2-c} bounds cap sets by 3^{(4/3)(1-c) n}.
inline CorollaryBound corollary_cap_bound(double c) {
    if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("corollary_cap_bound: c must lie in (0, 1)");
    const double base = std::pow(3.0, 4.0 / 3.0 * (1.0 - c));
    return {c, base, base < kCapUpperBoundBase};
}

/// Constant in the Gowers-Long setting implied by a lower bound m^exponent.
constexpr double gl_constant(double exponent) { return 2.0 - exponent; }

}  // namespace wicketlab
