#pragma once

// Score sequences, the "smaller" order on d-targets, and the multiplicity
// switches used when reducing configurations.

#include "planarcol/planar_core.hpp"

#include <compare>
#include <variant>
#include <vector>

namespace planarcol {

/// counts[i] = number of edges with m(e) = i, for 0 <= i <= d.
struct ScoreSequence {
    std::vector<int> counts;

    auto d() const -> int { return static_cast<int>(counts.size()) - 1; }
    friend auto operator==(const ScoreSequence&, const ScoreSequence&) -> bool = default;
};

auto score_sequence(const DTarget& t) -> ScoreSequence;

/// True iff a target with `a_vertices` vertices and score `a` is smaller
/// than one with `b_vertices` vertices and score `b`:
///   fewer vertices; or the top-most differing n_i (1 <= i <= d) is larger
///   in a; or n_1..n_d agree and a has fewer zero-multiplicity edges.
/// Throws MismatchedD.
auto is_smaller(int a_vertices, const ScoreSequence& a, int b_vertices, const ScoreSequence& b) -> bool;
auto is_smaller(const DTarget& a, const DTarget& b) -> bool;

/// Switch on the 4-cycle u-v-w-x-u: uv and wx lose one, vw and xu gain one.
struct SquareMove {
    VertexId u, v, w, x;
};

/// Switch on the path x-u-v-y, closing it with a new zero edge xy if needed.
struct PathMove {
    VertexId x, u, v, y;
};

using Move = std::variant<SquareMove, PathMove>;

/// Throws NotAFourCycle, WouldGoNegative.
auto switch_square(const DTarget& t, SquareMove move) -> DTarget;

/// Adds xy with m(xy) = 0 inside the first region (by id) whose boundary
/// holds both x and y. Identity when x and y are already adjacent.
/// Throws NoCommonRegion, InvalidArgument (x == y).
auto add_zero_edge(const DTarget& t, VertexId x, VertexId y) -> DTarget;

/// Throws InvalidArgument (not a path), NoCommonRegion, WouldGoNegative.
auto switch_path(const DTarget& t, PathMove move) -> DTarget;

auto apply_move(const DTarget& t, const Move& move) -> DTarget;

/// True iff applying the move yields a smaller target.
auto is_switchable(const DTarget& t, const Move& move) -> bool;

/// Triangle regions whose multiplicity is at least d. A minimum
/// counterexample has none, so a non-empty result on such an object is a
/// contradiction.
auto heavy_triangles(const DTarget& t) -> std::vector<RegionId>;

}  // namespace planarcol
