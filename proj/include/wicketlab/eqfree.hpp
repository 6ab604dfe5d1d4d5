#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "wicketlab/eisenstein.hpp"

namespace wicketlab {

/// Default triviality rule: every variable receives the same value.
inline bool all_equal(std::span<const std::int64_t> values) {
    return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) == values.end();
}

/// sum_i coefficients[i] * x_i = 0, over the integers (modulus 0) or mod `modulus`.
struct EquationSpec {
    std::string name;
    std::vector<std::int64_t> coefficients;
    std::int64_t modulus = 0;
    std::function<bool(std::span<const std::int64_t>)> is_trivial = all_equal;

    /// 3x + y = 2z + 2w over the integers.
    static EquationSpec ruzsa() { return {"3x+y=2z+2w", {3, 1, -2, -2}, 0, all_equal}; }

    /// kx - (k-1)y = z mod k^2 - k + 1.
    static EquationSpec modular(std::int64_t k) {
        if (k < 2) throw std::invalid_argument("EquationSpec::modular: k must be at least 2");
        return {std::to_string(k) + "x-" + std::to_string(k - 1) + "y=z mod " + std::to_string(k * k - k + 1),
                {k, -(k - 1), -1},
                k * k - k + 1,
                all_equal};
    }

    std::size_t arity() const noexcept { return coefficients.size(); }

    std::int64_t reduce(std::int64_t x) const noexcept {
        if (modulus == 0) return x;
        const auto r = x % modulus;
        return r < 0 ? r + modulus : r;
    }

    /// Constant assignments solve the equation.
    bool balanced() const {
        return reduce(std::accumulate(coefficients.begin(), coefficients.end(), std::int64_t{0})) == 0;
    }

    bool holds(std::span<const std::int64_t> values) const {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < arity(); ++i) sum += coefficients[i] * values[i];
        return reduce(sum) == 0;
    }
};

namespace detail {

inline std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t g = m, x = 0, x1 = 1, r = ((a % m) + m) % m;
    while (r) {
        const std::int64_t q = g / r;
        std::tie(g, r) = std::make_pair(r, g - q * r);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) return std::nullopt;
    return ((x % m) + m) % m;
}

/// Calls visit(assignment) for every assignment of values to the variables
/// that satisfies e, until visit returns true. One variable is solved for
/// when its coefficient is invertible; the others are enumerated in order.
template <class Visit>
bool for_each_solution(std::span<const std::int64_t> values, const EquationSpec& e, Visit&& visit) {
    const std::size_t r = e.arity();
    if (r == 0 || values.empty()) return false;
    const std::unordered_set<std::int64_t> members(values.begin(), values.end());

    std::optional<std::size_t> solved;
    std::int64_t inverse = 0;
    for (std::size_t i = 0; i < r && !solved; ++i) {
        const auto c = e.coefficients[i];
        if (e.modulus == 0 && c != 0) solved = i;
        if (e.modulus > 0)
            if (auto inv = mod_inverse(c, e.modulus)) {
                solved = i;
                inverse = *inv;
            }
    }

    std::vector<std::size_t> idx(r, 0);
    std::vector<std::int64_t> assignment(r);
    while (true) {
        std::int64_t rest = 0;
        for (std::size_t i = 0; i < r; ++i) {
            if (solved && i == *solved) continue;
            assignment[i] = values[idx[i]];
            rest += e.coefficients[i] * assignment[i];
        }
        if (solved) {
            const auto c = e.coefficients[*solved];
            bool ok = true;
            std::int64_t x = 0;
            if (e.modulus == 0) {
                ok = rest % c == 0;
                x = -rest / c;
            } else {
                x = e.reduce(-e.reduce(rest) * inverse);
            }
            if (ok && members.count(x)) {
                assignment[*solved] = x;
                if (visit(std::span<const std::int64_t>(assignment))) return true;
            }
        } else if (e.reduce(rest) == 0) {
            if (visit(std::span<const std::int64_t>(assignment))) return true;
        }
        // odometer over the free variables, last variable fastest
        std::size_t i = r;
        while (i-- > 0) {
            if (solved && i == *solved) continue;
            if (++idx[i] < values.size()) break;
            idx[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1)) return false;
    }
}

}  // namespace detail

/// A non-trivial solution with all values drawn from S, if one exists.
inline std::optional<std::vector<std::int64_t>> has_solution(std::span<const std::int64_t> set, const EquationSpec& e) {
    std::vector<std::int64_t> values(set.begin(), set.end());
    std::sort(values.begin(), values.end());
    std::optional<std::vector<std::int64_t>> witness;
    detail::for_each_solution(values, e, [&](std::span<const std::int64_t> a) {
        if (e.is_trivial(a)) return false;
        witness.emplace(a.begin(), a.end());
        return true;
    });
    return witness;
}

/// Families of domain positions that may not all be chosen together.
class ConflictFamily {
public:
    explicit ConflictFamily(std::size_t domain_size) : through_(domain_size) {}

    void add(std::vector<std::uint32_t> pattern) {
        std::sort(pattern.begin(), pattern.end());
        pattern.erase(std::unique(pattern.begin(), pattern.end()), pattern.end());
        if (pattern.empty() || !seen_.insert(pattern).second) return;
        const auto id = static_cast<std::uint32_t>(patterns_.size());
        for (auto p : pattern) through_.at(p).push_back(id);
        patterns_.push_back(std::move(pattern));
    }

    std::size_t domain_size() const noexcept { return through_.size(); }
    const std::vector<std::vector<std::uint32_t>>& patterns() const noexcept { return patterns_; }
    std::span<const std::uint32_t> through(std::uint32_t element) const { return through_.at(element); }

    /// Some pattern through `candidate` has every other element chosen.
    bool completes(std::uint32_t candidate, const std::vector<char>& chosen) const {
        return blocking_pattern(candidate, chosen).has_value();
    }

    std::optional<std::uint32_t> blocking_pattern(std::uint32_t candidate, const std::vector<char>& chosen) const {
        for (auto id : through_.at(candidate)) {
            bool all = true;
            for (auto q : patterns_[id])
                if (q != candidate && !chosen[q]) {
                    all = false;
                    break;
                }
            if (all) return id;
        }
        return std::nullopt;
    }

    bool admissible(std::span<const std::uint32_t> positions) const {
        std::vector<char> chosen(domain_size(), 0);
        for (auto p : positions) chosen.at(p) = 1;
        for (const auto& pat : patterns_)
            if (std::all_of(pat.begin(), pat.end(), [&](std::uint32_t q) { return chosen[q]; })) return false;
        return true;
    }

private:
    std::vector<std::vector<std::uint32_t>> patterns_;
    std::vector<std::vector<std::uint32_t>> through_;
    std::set<std::vector<std::uint32_t>> seen_;
};

/// Supports of all non-trivial solutions of e over the domain, as positions.
inline ConflictFamily equation_conflicts(std::span<const std::int64_t> domain, const EquationSpec& e) {
    std::unordered_map<std::int64_t, std::uint32_t> position;
    for (std::uint32_t i = 0; i < domain.size(); ++i)
        if (!position.emplace(domain[i], i).second) throw std::invalid_argument("equation_conflicts: duplicate domain value");
    ConflictFamily family(domain.size());
    std::vector<std::uint32_t> support;
    detail::for_each_solution(domain, e, [&](std::span<const std::int64_t> a) {
        if (!e.is_trivial(a)) {
            support.clear();
            for (auto x : a) support.push_back(position.at(x));
            family.add(support);
        }
        return false;
    });
    return family;
}

/// Equilateral triples of the point list, as positions. Each triangle
/// traversed v -> w -> t with a 120 degree turn satisfies t = w + w(w - v).
inline ConflictFamily triangle_conflicts(std::span<const EisensteinPoint> points) {
    std::unordered_map<EisensteinPoint, std::uint32_t, EisensteinPointHash> position;
    for (std::uint32_t i = 0; i < points.size(); ++i) position.emplace(points[i], i);
    ConflictFamily family(points.size());
    for (std::uint32_t i = 0; i < points.size(); ++i)
        for (std::uint32_t j = 0; j < points.size(); ++j) {
            if (i == j) continue;
            const auto t = points[j] + times_omega(points[j] - points[i]);
            if (auto it = position.find(t); it != position.end()) family.add({i, j, it->second});
        }
    return family;
}

/// Largest domain accepted by the bitmask branch and bound.
inline constexpr std::size_t kMaxExactDomain = 64;
/// Default cap on exhaustive search when the caller does not choose one.
inline constexpr std::size_t kDefaultExhaustiveCap = 30;

namespace detail {

class MaskBranchAndBound {
public:
    explicit MaskBranchAndBound(const ConflictFamily& family) : n_(family.domain_size()), through_(n_) {
        if (n_ > kMaxExactDomain) throw std::invalid_argument("exact search: domain exceeds 64 elements");
        for (const auto& pat : family.patterns()) {
            std::uint64_t mask = 0;
            for (auto p : pat) mask |= bit(p);
            if (pat.size() == 1)
                excluded_ |= mask;
            else
                for (auto p : pat) through_[p].push_back(mask);
        }
        all_ = n_ == 64 ? ~std::uint64_t{0} : (bit(n_) - 1);
    }

    std::uint64_t run() {
        best_ = 0;
        best_size_ = 0;
        extend(0, 0, excluded_, 0);
        return best_;
    }

private:
    static std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

    void extend(std::uint64_t chosen, int size, std::uint64_t forbidden, std::size_t next) {
        if (size > best_size_) {
            best_size_ = size;
            best_ = chosen;
        }
        const std::uint64_t tail = next >= 64 ? 0 : (all_ & ~(bit(next) - 1));
        std::uint64_t candidates = tail & ~forbidden;
        while (candidates) {
            if (size + std::popcount(candidates) <= best_size_) return;
            const auto p = static_cast<std::size_t>(std::countr_zero(candidates));
            candidates &= candidates - 1;
            const std::uint64_t with = chosen | bit(p);
            std::uint64_t blocked = forbidden;
            for (auto mask : through_[p]) {
                const std::uint64_t rest = mask & ~with;
                if (std::popcount(rest) == 1) blocked |= rest;
            }
            extend(with, size + 1, blocked, p + 1);
        }
    }

    std::size_t n_;
    std::vector<std::vector<std::uint64_t>> through_;
    std::uint64_t excluded_ = 0;
    std::uint64_t all_ = 0;
    std::uint64_t best_ = 0;
    int best_size_ = 0;
};

inline std::vector<std::uint32_t> mask_positions(std::uint64_t mask) {
    std::vector<std::uint32_t> out;
    for (; mask; mask &= mask - 1) out.push_back(static_cast<std::uint32_t>(std::countr_zero(mask)));
    return out;
}

}  // namespace detail

/// Maximum admissible subset of positions (domain <= 64).
inline std::vector<std::uint32_t> exact_max_free(const ConflictFamily& family) {
    return detail::mask_positions(detail::MaskBranchAndBound(family).run());
}

/// Ascending greedy insertion.
inline std::vector<std::uint32_t> greedy_free(const ConflictFamily& family) {
    std::vector<char> chosen(family.domain_size(), 0);
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 0; d < family.domain_size(); ++d)
        if (!family.completes(d, chosen)) {
            chosen[d] = 1;
            out.push_back(d);
        }
    return out;
}

struct AnnealOptions {
    std::uint64_t seed = 0;
    std::size_t budget = 20000;  // proposals
    double initial_temperature = 2.0;
    double final_temperature = 0.05;
};

/// Simulated annealing over admissible sets with add / remove / swap moves
/// and geometric cooling, started from `start`. Returns the best set seen
/// (never smaller than `start`), ascending.
inline std::vector<std::uint32_t> anneal_free(const ConflictFamily& family, std::vector<std::uint32_t> start,
                                              const AnnealOptions& options = {}) {
    const std::size_t n = family.domain_size();
    std::sort(start.begin(), start.end());
    if (n == 0 || options.budget == 0) return start;

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    std::vector<char> chosen(n, 0);
    std::vector<std::uint32_t> members;
    std::vector<std::size_t> slot(n, 0);
    auto insert = [&](std::uint32_t d) {
        chosen[d] = 1;
        slot[d] = members.size();
        members.push_back(d);
    };
    auto erase = [&](std::uint32_t d) {
        chosen[d] = 0;
        const auto last = members.back();
        members[slot[d]] = last;
        slot[last] = slot[d];
        members.pop_back();
    };
    for (auto d : start) insert(d);

    std::vector<std::uint32_t> best = start;
    double temperature = options.initial_temperature;
    const double cooling =
        std::pow(options.final_temperature / options.initial_temperature, 1.0 / static_cast<double>(options.budget));

    for (std::size_t step = 0; step < options.budget; ++step, temperature *= cooling) {
        const auto d = pick(rng);
        if (chosen[d]) {
            if (unit(rng) < std::exp(-1.0 / temperature)) erase(d);
        } else if (auto blocker = family.blocking_pattern(d, chosen)) {
            const auto& pat = family.patterns()[*blocker];
            std::vector<std::uint32_t> others;
            for (auto q : pat)
                if (q != d) others.push_back(q);
            const auto victim = others[std::uniform_int_distribution<std::size_t>(0, others.size() - 1)(rng)];
            erase(victim);
            if (family.completes(d, chosen))
                insert(victim);
            else
                insert(d);
        } else {
            insert(d);
        }
        if (members.size() > best.size()) {
            best = members;
            std::sort(best.begin(), best.end());
        }
    }
    return best;
}

enum class SearchMethod { exhaustive, greedy, local };

inline const char* to_string(SearchMethod m) {
    switch (m) {
        case SearchMethod::exhaustive: return "exhaustive";
        case SearchMethod::greedy: return "greedy";
        case SearchMethod::local: return "local";
    }
    return "?";
}

template <class T>
struct SearchResult {
    std::vector<T> set;
    SearchMethod method = SearchMethod::exhaustive;
    bool verified = false;  // re-checked by a full scan of the returned set
    bool optimal = false;   // certified by complete search
    std::optional<std::size_t> greedy_size;

    std::size_t size() const noexcept { return set.size(); }
};

/// 1..n
inline std::vector<std::int64_t> integer_interval(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t i = 1; i <= n; ++i) out.push_back(i);
    return out;
}

/// 0..m-1
inline std::vector<std::int64_t> residues(std::int64_t m) {
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i < m; ++i) out.push_back(i);
    return out;
}

namespace detail {

template <class T>
std::vector<T> pick_values(std::span<const T> domain, const std::vector<std::uint32_t>& positions) {
    std::vector<T> out;
    out.reserve(positions.size());
    for (auto p : positions) out.push_back(domain[p]);
    return out;
}

}  // namespace detail

/// Largest subset of the domain without a non-trivial solution, by branch
/// and bound. Throws when the domain exceeds size_cap.
inline SearchResult<std::int64_t> max_free_exhaustive(std::span<const std::int64_t> domain, const EquationSpec& e,
                                                      std::size_t size_cap = kDefaultExhaustiveCap) {
    if (domain.size() > std::min(size_cap, kMaxExactDomain))
        throw std::invalid_argument("max_free_exhaustive: domain of " + std::to_string(domain.size()) +
                                    " elements exceeds the exhaustive cap of " +
                                    std::to_string(std::min(size_cap, kMaxExactDomain)) + "; use heuristic mode");
    const auto family = equation_conflicts(domain, e);
    SearchResult<std::int64_t> r;
    r.set = detail::pick_values(domain, exact_max_free(family));
    r.method = SearchMethod::exhaustive;
    r.verified = !has_solution(r.set, e).has_value();
    r.optimal = true;
    return r;
}

struct HeuristicOptions {
    SearchMethod method = SearchMethod::local;  // greedy or local
    AnnealOptions anneal;
};

/// Greedy ascending insertion, optionally improved by simulated annealing.
inline SearchResult<std::int64_t> max_free_heuristic(std::span<const std::int64_t> domain, const EquationSpec& e,
                                                     const HeuristicOptions& options = {}) {
    if (options.method == SearchMethod::exhaustive)
        throw std::invalid_argument("max_free_heuristic: method must be greedy or local");
    const auto family = equation_conflicts(domain, e);
    auto positions = greedy_free(family);
    const auto greedy_size = positions.size();
    if (options.method == SearchMethod::local) positions = anneal_free(family, positions, options.anneal);
    SearchResult<std::int64_t> r;
    r.set = detail::pick_values(domain, positions);
    r.method = options.method;
    r.verified = !has_solution(r.set, e).has_value();
    r.greedy_size = greedy_size;
    return r;
}

/// Three points of the set forming an equilateral triangle, if any.
inline std::optional<std::array<EisensteinPoint, 3>> find_equilateral_triple(std::span<const EisensteinPoint> set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            for (std::size_t k = j + 1; k < set.size(); ++k)
                if (is_equilateral(set[i], set[j], set[k])) return std::array{set[i], set[j], set[k]};
    return std::nullopt;
}

struct TriangleSearchOptions {
    /// Empty: exhaustive when the region has at most exhaustive_limit points, local search otherwise.
    std::optional<SearchMethod> method;
    std::size_t exhaustive_limit = 22;
    AnnealOptions anneal;
};

/// Largest subset of the region {norm <= bound} with no equilateral triangle.
inline SearchResult<EisensteinPoint> max_trianglefree(std::int64_t bound, NormMode mode,
                                                      const TriangleSearchOptions& options = {}) {
    const auto region = eisenstein_region(bound, mode);
    const auto family = triangle_conflicts(region);
    const auto method =
        options.method.value_or(region.size() <= options.exhaustive_limit ? SearchMethod::exhaustive : SearchMethod::local);
    SearchResult<EisensteinPoint> r;
    r.method = method;
    std::vector<std::uint32_t> positions;
    if (method == SearchMethod::exhaustive) {
        if (region.size() > kMaxExactDomain)
            throw std::invalid_argument("max_trianglefree: region of " + std::to_string(region.size()) +
                                        " points is too large for exhaustive search; use heuristic mode");
        positions = exact_max_free(family);
        r.optimal = true;
    } else {
        positions = greedy_free(family);
        r.greedy_size = positions.size();
        if (method == SearchMethod::local) positions = anneal_free(family, positions, options.anneal);
    }
    r.set = detail::pick_values<EisensteinPoint>(region, positions);
    r.verified = !find_equilateral_triple(r.set).has_value();
    return r;
}

}  // namespace wicketlab
