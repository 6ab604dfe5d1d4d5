#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wicketlab/error.hpp"

namespace wicketlab {

using Digit = std::uint8_t;
using Encoding = std::uint64_t;

/// Largest dimension whose base-3 encoding fits in 64 bits.
inline constexpr std::size_t kMaxDimension = 40;

/// Largest dimension accepted by the exact cap search (3^3 = 27 points).
inline constexpr std::size_t kMaxExactCapDimension = 3;

constexpr Encoding pow3(std::size_t n) {
    Encoding r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= 3;
    return r;
}

/// A point of F_3^n, most significant digit first.
class F3Vector {
public:
    F3Vector() = default;

    explicit F3Vector(std::vector<Digit> coords) : coords_(std::move(coords)) {
        if (coords_.size() > kMaxDimension)
            throw std::invalid_argument("F3Vector: dimension exceeds " + std::to_string(kMaxDimension));
        for (Digit d : coords_)
            if (d > 2) throw std::invalid_argument("F3Vector: digit out of range");
    }

    static F3Vector zero(std::size_t n) { return F3Vector(std::vector<Digit>(n, 0)); }

    static F3Vector decode(Encoding code, std::size_t n) {
        if (n > kMaxDimension || code >= pow3(n))
            throw std::invalid_argument("F3Vector::decode: code out of range for dimension");
        std::vector<Digit> coords(n);
        for (std::size_t i = n; i-- > 0;) {
            coords[i] = static_cast<Digit>(code % 3);
            code /= 3;
        }
        return F3Vector(std::move(coords));
    }

    /// Parses a string of '0'/'1'/'2' characters.
    static F3Vector parse(std::string_view text) {
        std::vector<Digit> coords;
        coords.reserve(text.size());
        for (char ch : text) {
            if (ch < '0' || ch > '2') throw std::invalid_argument("F3Vector::parse: invalid digit");
            coords.push_back(static_cast<Digit>(ch - '0'));
        }
        return F3Vector(std::move(coords));
    }

    std::size_t dimension() const noexcept { return coords_.size(); }
    const std::vector<Digit>& coords() const noexcept { return coords_; }
    Digit operator[](std::size_t i) const { return coords_[i]; }

    Encoding encode() const noexcept {
        Encoding code = 0;
        for (Digit d : coords_) code = code * 3 + d;
        return code;
    }

    std::string to_string() const {
        std::string s;
        s.reserve(coords_.size());
        for (Digit d : coords_) s.push_back(static_cast<char>('0' + d));
        return s;
    }

    F3Vector append(Digit d) const {
        auto coords = coords_;
        coords.push_back(d);
        return F3Vector(std::move(coords));
    }

    F3Vector concat(const F3Vector& tail) const {
        auto coords = coords_;
        coords.insert(coords.end(), tail.coords_.begin(), tail.coords_.end());
        return F3Vector(std::move(coords));
    }

    /// Drops the last coordinate.
    F3Vector truncate() const {
        if (coords_.empty()) throw std::invalid_argument("F3Vector::truncate: empty vector");
        return F3Vector(std::vector<Digit>(coords_.begin(), coords_.end() - 1));
    }

    // Lexicographic on equal dimensions, which coincides with encoding order.
    friend auto operator<=>(const F3Vector&, const F3Vector&) = default;
    friend bool operator==(const F3Vector&, const F3Vector&) = default;

private:
    std::vector<Digit> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const F3Vector& v) { return os << v.to_string(); }

inline F3Vector f3_add(const F3Vector& u, const F3Vector& v) {
    if (u.dimension() != v.dimension()) throw std::invalid_argument("f3_add: dimension mismatch");
    std::vector<Digit> out(u.dimension());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Digit>((u[i] + v[i]) % 3);
    return F3Vector(std::move(out));
}

inline F3Vector f3_scale(Digit c, const F3Vector& v) {
    if (c > 2) throw std::invalid_argument("f3_scale: scalar out of range");
    std::vector<Digit> out(v.dimension());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Digit>((c * v[i]) % 3);
    return F3Vector(std::move(out));
}

inline F3Vector f3_neg(const F3Vector& v) { return f3_scale(2, v); }

inline F3Vector f3_sub(const F3Vector& u, const F3Vector& v) { return f3_add(u, f3_neg(v)); }

/// Encoding of -(x+y) computed digitwise on encodings of dimension n.
inline Encoding f3_completion(Encoding x, Encoding y, std::size_t n) {
    Encoding out = 0, place = 1;
    for (std::size_t i = 0; i < n; ++i) {
        const auto dx = x % 3, dy = y % 3;
        out += ((6 - dx - dy) % 3) * place;
        x /= 3;
        y /= 3;
        place *= 3;
    }
    return out;
}

using Ap3Triple = std::array<F3Vector, 3>;

struct Ap3Check {
    bool free = true;
    std::optional<Ap3Triple> witness;
};

/// An ingested or constructed set contains three distinct points on a line.
class Ap3Violation : public VerificationError {
public:
    explicit Ap3Violation(Ap3Triple witness)
        : VerificationError("set contains a 3-term progression: " + witness[0].to_string() + " " +
                            witness[1].to_string() + " " + witness[2].to_string()),
          witness_(std::move(witness)) {}

    const Ap3Triple& witness() const noexcept { return witness_; }

private:
    Ap3Triple witness_;
};

/// A set of distinct points of F_3^n, kept in encoding order. The verified
/// flag is only ever set by verify_cap.
class CapSet {
public:
    CapSet() = default;

    CapSet(std::size_t dimension, std::vector<F3Vector> elements)
        : dimension_(dimension), elements_(std::move(elements)) {
        if (dimension_ > kMaxDimension) throw std::invalid_argument("CapSet: dimension too large");
        for (const auto& e : elements_)
            if (e.dimension() != dimension_) throw std::invalid_argument("CapSet: element dimension mismatch");
        std::sort(elements_.begin(), elements_.end());
        if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
            throw std::invalid_argument("CapSet: duplicate element");
    }

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    bool verified() const noexcept { return verified_; }
    const std::vector<F3Vector>& elements() const noexcept { return elements_; }
    const F3Vector& operator[](std::size_t i) const { return elements_[i]; }

    bool contains(const F3Vector& v) const { return std::binary_search(elements_.begin(), elements_.end(), v); }

    friend bool operator==(const CapSet& a, const CapSet& b) {
        return a.dimension_ == b.dimension_ && a.elements_ == b.elements_;
    }

private:
    friend CapSet verify_cap(CapSet set);

    std::size_t dimension_ = 0;
    std::vector<F3Vector> elements_;
    bool verified_ = false;
};

/// Pair completion: for every pair x<y look up -(x+y). O(|S|^2) expected.
inline Ap3Check is_ap3_free(const CapSet& s) {
    const std::size_t n = s.dimension();
    std::vector<Encoding> codes;
    codes.reserve(s.size());
    for (const auto& e : s.elements()) codes.push_back(e.encode());
    const std::unordered_set<Encoding> members(codes.begin(), codes.end());

    for (std::size_t i = 0; i < codes.size(); ++i) {
        for (std::size_t j = i + 1; j < codes.size(); ++j) {
            const Encoding z = f3_completion(codes[i], codes[j], n);
            // z is distinct from x and y whenever x != y; report each line once.
            if (z > codes[j] && members.count(z))
                return {false, Ap3Triple{s[i], s[j], F3Vector::decode(z, n)}};
        }
    }
    return {};
}

/// Returns the set flagged as verified, or throws Ap3Violation.
inline CapSet verify_cap(CapSet set) {
    auto check = is_ap3_free(set);
    if (!check.free) throw Ap3Violation(std::move(*check.witness));
    set.verified_ = true;
    return set;
}

struct ExactCapResult {
    std::size_t size = 0;
    CapSet witness;
};

namespace detail {

// Branch and bound over the points of F_3^n (n <= 3) as bits of a 32-bit mask.
// The first point is fixed to 0, which is allowed by translation invariance.
class ExactCapSearch {
public:
    explicit ExactCapSearch(std::size_t n) : n_(n), points_(static_cast<std::size_t>(pow3(n))) {
        completion_.resize(points_ * points_);
        for (std::size_t p = 0; p < points_; ++p)
            for (std::size_t q = 0; q < points_; ++q)
                completion_[p * points_ + q] = static_cast<std::uint32_t>(f3_completion(p, q, n_));
        all_ = points_ == 32 ? ~0u : ((1u << points_) - 1u);
    }

    std::uint32_t run() {
        best_mask_ = 1u;
        best_size_ = 1;
        extend(1u, 1, 0u, 1);
        return best_mask_;
    }

private:
    void extend(std::uint32_t chosen, int size, std::uint32_t forbidden, std::size_t next) {
        if (size > best_size_) {
            best_size_ = size;
            best_mask_ = chosen;
        }
        const std::uint32_t tail = next >= 32 ? 0u : (all_ & ~((1u << next) - 1u));
        std::uint32_t candidates = tail & ~forbidden & ~chosen;
        while (candidates) {
            if (size + std::popcount(candidates) <= best_size_) return;
            const int p = std::countr_zero(candidates);
            candidates &= candidates - 1;
            std::uint32_t blocked = forbidden;
            for (std::uint32_t c = chosen; c; c &= c - 1) {
                const auto q = static_cast<std::size_t>(std::countr_zero(c));
                blocked |= 1u << completion_[static_cast<std::size_t>(p) * points_ + q];
            }
            extend(chosen | (1u << p), size + 1, blocked, static_cast<std::size_t>(p) + 1);
        }
    }

    std::size_t n_;
    std::size_t points_;
    std::vector<std::uint32_t> completion_;
    std::uint32_t all_ = 0;
    std::uint32_t best_mask_ = 0;
    int best_size_ = 0;
};

}  // namespace detail

/// Maximum cap size in F_3^n for n <= 3, with one witness.
inline ExactCapResult max_cap_exact(std::size_t n) {
    if (n > kMaxExactCapDimension)
        throw std::invalid_argument("max_cap_exact: dimension " + std::to_string(n) +
                                    " too large for exact search (max " +
                                    std::to_string(kMaxExactCapDimension) + ")");
    const std::uint32_t mask = detail::ExactCapSearch(n).run();
    std::vector<F3Vector> elements;
    for (std::uint32_t m = mask; m; m &= m - 1)
        elements.push_back(F3Vector::decode(static_cast<Encoding>(std::countr_zero(m)), n));
    auto witness = verify_cap(CapSet(n, std::move(elements)));
    const auto size = witness.size();
    return {size, std::move(witness)};
}

/// Cartesian product: {(x, y)} in dimension n1 + n2. If x1+x2+x3 = 0 and
/// y1+y2+y3 = 0 with the pairs distinct, one block has three distinct
/// entries summing to zero, so products of caps are caps.
inline CapSet product_cap(const CapSet& a, const CapSet& b) {
    if (!a.verified() || !b.verified()) throw std::invalid_argument("product_cap: inputs must be verified caps");
    std::vector<F3Vector> out;
    out.reserve(a.size() * b.size());
    for (const auto& x : a.elements())
        for (const auto& y : b.elements()) out.push_back(x.concat(y));
    return verify_cap(CapSet(a.dimension() + b.dimension(), std::move(out)));
}

/// S x {1}: directions with last coordinate 1 in dimension n + 1.
inline CapSet lift_cap(const CapSet& s) {
    std::vector<F3Vector> out;
    out.reserve(s.size());
    for (const auto& x : s.elements()) out.push_back(x.append(1));
    CapSet lifted(s.dimension() + 1, std::move(out));
    return s.verified() ? verify_cap(std::move(lifted)) : lifted;
}

/// Reads the cap text format: one element per line as a string of 0/1/2,
/// most significant digit first. Blank lines and '#' lines are skipped. The
/// dimension is taken from the first element unless given. The result is
/// not verified.
inline CapSet read_cap(std::istream& in, std::optional<std::size_t> dimension = std::nullopt) {
    std::vector<F3Vector> elements;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        const std::string_view body(line.data() + first, last - first + 1);
        for (char ch : body)
            if (ch < '0' || ch > '2') throw ParseError(lineno, "expected digits 0, 1 or 2, got '" + std::string(body) + "'");
        if (!dimension) dimension = body.size();
        if (body.size() != *dimension)
            throw ParseError(lineno, "expected " + std::to_string(*dimension) + " digits, got " +
                                         std::to_string(body.size()));
        if (*dimension > kMaxDimension) throw ParseError(lineno, "dimension too large");
        elements.push_back(F3Vector::parse(body));
    }
    std::vector<F3Vector> sorted = elements;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
        throw ParseError(0, "duplicate element " + dup->to_string());
    return CapSet(dimension.value_or(0), std::move(elements));
}

/// read_cap followed by verify_cap.
inline CapSet load_cap(std::istream& in, std::optional<std::size_t> dimension = std::nullopt) {
    return verify_cap(read_cap(in, dimension));
}

inline void write_cap(std::ostream& out, const CapSet& s) {
    for (const auto& e : s.elements()) out << e.to_string() << '\n';
}

}  // namespace wicketlab
