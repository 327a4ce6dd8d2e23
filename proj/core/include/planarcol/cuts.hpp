#pragma once

// Odd-set cuts, the strengthened cut condition for minimum
// counterexamples, bond decomposition and dual cycles (cocycles).

#include "planarcol/coloring.hpp"
#include "planarcol/planar_core.hpp"
#include "planarcol/switching.hpp"

#include <optional>
#include <vector>

namespace planarcol {

/// Sorted, duplicate-free vertex list.
using VertexSet = std::vector<VertexId>;

struct CutWitness {
    VertexSet set;
    int value = 0;   // m(delta(set))
    int parity = 0;  // |set| mod 2
};

inline constexpr int default_cut_cap = 24;

/// m(delta(X)). Vertices outside [0, n) raise InvalidArgument.
auto cut_value(const DTarget& t, const VertexSet& set) -> int;

/// Edge ids of delta(X), ascending.
auto cut_edges(const RotationGraph& g, const VertexSet& set) -> std::vector<EdgeId>;

/// Minimum m(delta(X)) over odd X; ties go to the lexicographically
/// smallest X. Throws OddVertexCount, TooLarge.
auto min_odd_cut(const DTarget& t, int cap = default_cut_cap) -> CutWitness;

auto is_oddly_connected(const DTarget& t, int cap = default_cut_cap) -> bool;

/// nullopt when every odd X with |X|, |V \ X| != 1 has m(delta(X)) >= d + 2;
/// otherwise the smallest violating cut (value, then lexicographic).
auto strengthened_cut_check(const DTarget& t, int cap = default_cut_cap) -> std::optional<CutWitness>;

/// Sets X_1..X_k whose cuts are bonds partitioning delta(X). Each X_i
/// contains one component of G[X]. Sorted.
auto bond_decomposition(const DTarget& t, const VertexSet& set) -> std::vector<VertexSet>;

/// True iff X and its complement are non-empty and induce connected graphs.
auto is_bond(const RotationGraph& g, const VertexSet& set) -> bool;

struct Cocycle {
    std::vector<EdgeId> edges;      // cyclic order e_1..e_k
    std::vector<RegionId> regions;  // regions[i] lies between edges[i] and edges[i+1]
    VertexSet witness;
};

/// Orders delta(X) as a dual cycle, starting at its lowest edge id and
/// leaving X through the region on that edge's X-to-outside dart.
/// Throws NotABond.
auto cocycle_from(const DTarget& t, const VertexSet& set) -> Cocycle;

struct CocycleVerdict {
    bool others_meet_once = false;  // |F_j ∩ Q| = 1 for every j != i
    bool own_meets_five = false;    // |F_i ∩ Q| >= 5
    bool odd_cut = false;           // Q = delta(X) with |X| odd
    bool path_edges = false;        // uv, xy in Q; xu, vy not in Q

    auto all() const -> bool { return others_meet_once && own_meets_five && odd_cut && path_edges; }
};

/// `index` is 0-based into colouring.matchings. Throws BadColouring,
/// InvalidArgument (index out of range or path edge missing from tprime).
auto validate_guenin_cocycle(const DTarget& tprime, const EdgeColouring& colouring, int index, const Cocycle& q,
                             PathMove path) -> CocycleVerdict;

struct GueninEntry {
    int index = 0;          // 0-based matching index
    bool excluded = false;  // the index holding xy, dropped when xy was added by the switch
    std::optional<Cocycle> cocycle;
};

/// For each matching index, the first odd bond (by size, then
/// lexicographically) whose cut passes all four checks.
/// `xy_in_original` says whether xy was already an edge before switching.
/// Throws BadColouring, TooLarge, InvalidArgument.
auto find_guenin_cocycles(const DTarget& tprime, const EdgeColouring& colouring, PathMove path,
                          bool xy_in_original, int cap = default_cut_cap) -> std::vector<GueninEntry>;

}  // namespace planarcol
