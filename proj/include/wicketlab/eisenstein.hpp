#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wicketlab {

/// a + w*b with w = (-1 + i*sqrt(3))/2. Exact integer arithmetic; w^2 = -1 - w.
struct EisensteinPoint {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend auto operator<=>(const EisensteinPoint&, const EisensteinPoint&) = default;
    friend bool operator==(const EisensteinPoint&, const EisensteinPoint&) = default;

    friend EisensteinPoint operator+(EisensteinPoint p, EisensteinPoint q) { return {p.a + q.a, p.b + q.b}; }
    friend EisensteinPoint operator-(EisensteinPoint p, EisensteinPoint q) { return {p.a - q.a, p.b - q.b}; }
    friend EisensteinPoint operator-(EisensteinPoint p) { return {-p.a, -p.b}; }

    std::string to_string() const { return std::to_string(a) + "," + std::to_string(b); }
};

struct EisensteinPointHash {
    std::size_t operator()(const EisensteinPoint& p) const noexcept {
        return std::hash<std::int64_t>{}(p.a * 1000003 + p.b);
    }
};

/// w * (a + w b) = -b + (a - b) w
constexpr EisensteinPoint times_omega(EisensteinPoint p) { return {-p.b, p.a - p.b}; }

constexpr EisensteinPoint times_omega_sq(EisensteinPoint p) { return times_omega(times_omega(p)); }

/// Region shape. `paper` is a^2 + b^2 <= n as printed; `ring` is the
/// Eisenstein norm a^2 - ab + b^2 <= n (a disc in the plane).
enum class NormMode { paper, ring };

inline std::int64_t eisenstein_norm(EisensteinPoint p, NormMode mode) {
    return mode == NormMode::paper ? p.a * p.a + p.b * p.b : p.a * p.a - p.a * p.b + p.b * p.b;
}

/// Lattice points with norm <= bound, sorted by (a, b).
inline std::vector<EisensteinPoint> eisenstein_region(std::int64_t bound, NormMode mode) {
    std::vector<EisensteinPoint> out;
    if (bound < 0) return out;
    // a^2 - ab + b^2 >= (a^2 + b^2) / 2, so |a|, |b| <= sqrt(2 * bound) covers both shapes.
    std::int64_t r = 0;
    while (r * r <= 2 * bound) ++r;
    for (std::int64_t a = -r; a <= r; ++a)
        for (std::int64_t b = -r; b <= r; ++b)
            if (eisenstein_norm({a, b}, mode) <= bound) out.push_back({a, b});
    return out;
}

/// True iff some labelling (t, v, w) of the three points satisfies
/// t - w = w(w - v) or t - w = w^2(w - v).
inline bool is_equilateral(EisensteinPoint p, EisensteinPoint q, EisensteinPoint r) {
    if (p == q || q == r || p == r) throw std::invalid_argument("is_equilateral: points must be distinct");
    std::array<EisensteinPoint, 3> pts{p, q, r};
    std::sort(pts.begin(), pts.end());
    do {
        const auto& [t, v, w] = pts;
        if (t - w == times_omega(w - v) || t - w == times_omega_sq(w - v)) return true;
    } while (std::next_permutation(pts.begin(), pts.end()));
    return false;
}

}  // namespace wicketlab
