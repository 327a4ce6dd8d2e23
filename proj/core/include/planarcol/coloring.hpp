#pragma once

// Exact d-edge-colouring: d perfect matchings covering every edge e exactly
// m(e) times. The search runs over matching multiplicities (how many times
// each perfect matching is used), so colour permutations never branch.

#include "planarcol/planar_core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace planarcol {

/// Sorted edge ids. Because edge ids follow the lexicographic order of
/// their end pairs, comparing matchings compares their sorted edge lists.
using Matching = std::vector<EdgeId>;

struct EdgeColouring {
    std::vector<Matching> matchings;  // the list F_1..F_d
    std::vector<int> coverage;        // per edge: number of matchings containing it

    /// Distinct matchings with how often each occurs, in first-seen order.
    auto weights() const -> std::vector<std::pair<Matching, int>>;
};

inline constexpr int default_matching_cap = 20;

/// All perfect matchings of the underlying simple graph, sorted.
/// Throws OddVertexCount, TooLarge.
auto perfect_matchings(const RotationGraph& g, int cap = default_matching_cap) -> std::vector<Matching>;
auto perfect_matchings(const DTarget& t, int cap = default_matching_cap) -> std::vector<Matching>;

/// First colouring in the deterministic search order, or nullopt once the
/// search is exhausted. Throws OddVertexCount, TooLarge.
auto edge_colour(const DTarget& t, int cap = default_matching_cap) -> std::optional<EdgeColouring>;

struct ColouringCheck {
    bool ok = false;
    std::string violation;  // first problem found, empty when ok
};

auto verify_colouring(const DTarget& t, const EdgeColouring& c) -> ColouringCheck;

/// Builds the list form from per-matching counts, recomputing coverage.
auto expand_colouring(const DTarget& t, const std::vector<std::pair<Matching, int>>& weights) -> EdgeColouring;

}  // namespace planarcol
