#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wicketlab/error.hpp"
#include "wicketlab/hypergraph.hpp"
#include "wicketlab/rsz_f3.hpp"

namespace wicketlab {

/// Smallest integer k >= 2 with k^4 >= 120 |S|.
constexpr std::size_t color_count_for(std::size_t cap_size) {
    const std::size_t target = 120 * cap_size;
    std::size_t k = 2;
    while (k * k * k * k < target) ++k;
    return k;
}

struct EdgeColoring {
    std::size_t k = 0;
    std::vector<std::uint32_t> assignment;  // edge id -> colour in [0, k)
    std::uint64_t seed = 0;                 // seed of the successful attempt
    std::size_t resample_count = 0;         // resamples in the successful attempt
    std::size_t attempts = 1;
};

struct ColoringResult {
    EdgeColoring coloring;
    std::uint32_t selected_color = 0;
    std::vector<EdgeId> selected_edges;  // ids in the input hypergraph, ascending
    TripartiteHypergraph selected;       // the colour class on the original vertex classes
};

struct ColoringOptions {
    std::uint64_t seed = 0;
    /// Resamples per attempt; default 100 * (#wickets + 1).
    std::optional<std::size_t> max_resamples;
    /// Attempt a uses seed + a.
    std::size_t max_attempts = 4;
};

namespace detail {

inline bool monochromatic(const std::array<EdgeId, 5>& edges, const std::vector<std::uint32_t>& colour) {
    for (int i = 1; i < 5; ++i)
        if (colour[edges[i]] != colour[edges[0]]) return false;
    return true;
}

}  // namespace detail

/// Colours the edges with k colours so that none of the given wickets is
/// monochromatic, by Moser-Tardos resampling: while some wicket is
/// monochromatic, redraw the colours of the lowest-indexed such wicket.
/// Returns the largest colour class (ties to the smaller colour), which is
/// re-checked with find_wickets.
inline ColoringResult color_edges(const TripartiteHypergraph& h, std::span<const WicketWitness> wickets, std::size_t k,
                                  const ColoringOptions& options = {}) {
    if (k < 2) throw std::invalid_argument("color_edges: need at least 2 colours");
    const std::size_t m = h.edge_count();
    std::vector<std::array<EdgeId, 5>> sets;
    sets.reserve(wickets.size());
    std::vector<std::vector<std::uint32_t>> through(m);
    for (std::uint32_t i = 0; i < wickets.size(); ++i) {
        sets.push_back(wickets[i].edge_set());
        for (EdgeId e : sets.back()) through.at(e).push_back(i);
    }
    const std::size_t budget = options.max_resamples.value_or(100 * (wickets.size() + 1));

    std::size_t last_resamples = 0, last_bad = 0;
    for (std::size_t attempt = 0; attempt < std::max<std::size_t>(1, options.max_attempts); ++attempt) {
        const std::uint64_t seed = options.seed + attempt;
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::uint32_t> draw(0, static_cast<std::uint32_t>(k - 1));
        std::vector<std::uint32_t> colour(m);
        for (auto& c : colour) c = draw(rng);

        std::set<std::uint32_t> bad;
        for (std::uint32_t i = 0; i < sets.size(); ++i)
            if (detail::monochromatic(sets[i], colour)) bad.insert(i);

        std::size_t resamples = 0;
        while (!bad.empty() && resamples < budget) {
            const auto& target = sets[*bad.begin()];
            for (EdgeId e : target) colour[e] = draw(rng);
            ++resamples;
            for (EdgeId e : target)
                for (std::uint32_t j : through[e]) {
                    if (detail::monochromatic(sets[j], colour))
                        bad.insert(j);
                    else
                        bad.erase(j);
                }
        }
        last_resamples = resamples;
        last_bad = bad.size();
        if (!bad.empty()) continue;

        std::vector<std::size_t> sizes(k, 0);
        for (auto c : colour) ++sizes[c];
        const auto selected = static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
        ColoringResult result;
        result.coloring = EdgeColoring{k, std::move(colour), seed, resamples, attempt + 1};
        result.selected_color = selected;
        for (EdgeId e = 0; e < m; ++e)
            if (result.coloring.assignment[e] == selected) result.selected_edges.push_back(e);
        result.selected = sub_hypergraph(h, result.selected_edges);
        if (!find_wickets(result.selected, 1).empty())
            throw VerificationError("color_edges: selected colour class contains a wicket");
        return result;
    }
    throw BudgetExceeded("color_edges: resample budget of " + std::to_string(budget) + " exhausted in each of " +
                         std::to_string(std::max<std::size_t>(1, options.max_attempts)) + " attempts (last attempt: " +
                         std::to_string(last_resamples) + " resamples, " + std::to_string(last_bad) +
                         " monochromatic wickets left)");
}

/// Colours an F_3 build with k = color_count_for(|S|), using the plane wickets.
inline ColoringResult color_edges(const RszF3Build& b, const ColoringOptions& options = {}) {
    const auto wickets = plane_wickets(b);
    return color_edges(b.graph(), wickets, color_count_for(b.cap().size()), options);
}

}  // namespace wicketlab
