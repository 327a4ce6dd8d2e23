#pragma once

// Desk-scale corpus: fixed embedded base graphs and every multiplicity
// assignment meeting the per-vertex degree equations.

#include "planarcol/planar_core.hpp"

#include <functional>
#include <string>
#include <vector>

namespace planarcol {

struct NamedBase {
    std::string name;
    RotationGraph graph;
};

/// k4, octahedron, prism, cube, pentagonal_prism, in that order.
auto standard_bases() -> std::vector<NamedBase>;
/// Throws InvalidArgument for an unknown name.
auto base_graph(const std::string& name) -> RotationGraph;

/// Outer k-cycle 0..k-1, inner k-cycle k..2k-1, spokes i -- i+k. k >= 3.
auto prism_graph(int k) -> RotationGraph;

// Worked examples.
auto k4_fixture() -> DTarget;                  // 01,23 -> 4; other edges 2
auto octahedron_uniform(int m = 2) -> DTarget; // d = 4m
auto prism_target(int triangle_mult, int vertical_mult) -> DTarget;

inline constexpr int max_enumeration_edges = 16;

/// Calls `visit` for every vector m >= min_mult with m(delta(v)) = d at all
/// vertices, in lexicographic order of the edge-indexed vector. Stops early
/// when `visit` returns false. Throws TooLarge above 16 edges.
void for_each_multiplicity(const RotationGraph& g, int d, const std::function<bool(const DTarget&)>& visit,
                           int min_mult = 0);
auto enumerate_multiplicities(const RotationGraph& g, int d, int min_mult = 0) -> std::vector<DTarget>;

struct CorpusSpec {
    std::vector<NamedBase> bases;
    int d = 8;
    int max_vertices = 24;
    int min_mult = 0;
    bool require_oddly_connected = true;
    bool require_valid = true;
};

/// All five standard bases, d = 8, oddly connected targets only.
auto default_corpus_spec() -> CorpusSpec;

struct CorpusEntry {
    std::string base;
    int ordinal = 0;  // position in the base's unfiltered enumeration
    DTarget target;
};

auto build_corpus(const CorpusSpec& spec) -> std::vector<CorpusEntry>;

}  // namespace planarcol
