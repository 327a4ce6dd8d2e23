#pragma once

// Embedded simple planar graphs with edge multiplicities (d-targets).
//
// A drawing is given as a rotation system: for every vertex, the clockwise
// cyclic order of its neighbours. Regions (faces) are traced from darts
// with a single fixed rule: after the dart (u,v) comes (v,w) where w is the
// neighbour preceding u in v's rotation. Euler's formula on the traced faces
// is the only planarity certificate.

#include "planarcol/error.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace planarcol {

using VertexId = int;
using EdgeId = int;
using RegionId = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    auto other(VertexId x) const -> VertexId { return x == u ? v : u; }
    auto has(VertexId x) const -> bool { return x == u || x == v; }
    friend auto operator==(const Edge&, const Edge&) -> bool = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

class RotationGraph {
public:
    RotationGraph() = default;

    /// Builds the graph and its edge table. Edge ids follow the
    /// lexicographic order of (u, v) with u < v.
    /// Throws AsymmetricRotation, DuplicateNeighbour (also for loops).
    static auto from_rotations(std::vector<std::vector<VertexId>> rotations) -> RotationGraph;

    /// Rotation system of a straight-line drawing: neighbours sorted
    /// clockwise by angle around each vertex.
    static auto from_coordinates(std::span<const std::pair<double, double>> points,
                                 std::span<const Edge> edges) -> RotationGraph;

    auto vertex_count() const -> int { return static_cast<int>(rotations_.size()); }
    auto edge_count() const -> int { return static_cast<int>(edges_.size()); }
    auto degree(VertexId v) const -> int { return static_cast<int>(rotations_[v].size()); }

    auto rotation(VertexId v) const -> std::span<const VertexId> { return rotations_[v]; }
    auto rotations() const -> const std::vector<std::vector<VertexId>>& { return rotations_; }
    auto edges() const -> std::span<const Edge> { return edges_; }
    auto edge(EdgeId e) const -> const Edge& { return edges_[e]; }

    /// Edge ids of v's incident edges, aligned with rotation(v).
    auto incident(VertexId v) const -> std::span<const EdgeId> { return incident_[v]; }

    auto edge_between(VertexId a, VertexId b) const -> std::optional<EdgeId>;
    auto adjacent(VertexId a, VertexId b) const -> bool { return edge_between(a, b).has_value(); }
    /// Throws InvalidArgument if a and b are not adjacent.
    auto edge_id(VertexId a, VertexId b) const -> EdgeId;

    /// Index of w in v's rotation; w must be a neighbour of v.
    auto position(VertexId v, VertexId w) const -> int;
    auto successor(VertexId v, VertexId w) const -> VertexId;
    auto predecessor(VertexId v, VertexId w) const -> VertexId;

    friend auto operator==(const RotationGraph& a, const RotationGraph& b) -> bool
    {
        return a.rotations_ == b.rotations_;
    }

private:
    std::vector<std::vector<VertexId>> rotations_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<Edge> edges_;
    std::vector<EdgeId> lookup_;  // n*n, -1 when absent
};

/// A region of the drawing: boundary walk starting at the region's lowest
/// dart. edges[i] joins vertices[i] and vertices[i+1] (cyclically).
struct Region {
    RegionId id = 0;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    auto length() const -> int { return static_cast<int>(edges.size()); }
    auto contains_edge(EdgeId e) const -> bool;
    auto contains_vertex(VertexId v) const -> bool;
    auto is_triangle() const -> bool { return length() == 3; }
};

/// Traced faces of a rotation graph plus the dart-to-face table.
class FaceStructure {
public:
    /// Throws EulerViolation when V - E + F != 2 (non-planar rotation
    /// system or disconnected graph).
    explicit FaceStructure(const RotationGraph& graph);

    auto regions() const -> std::span<const Region> { return regions_; }
    auto region(RegionId r) const -> const Region& { return regions_[r]; }
    auto region_count() const -> int { return static_cast<int>(regions_.size()); }

    /// Face containing the dart from -> to.
    auto face_of_dart(VertexId from, VertexId to) const -> RegionId;

    /// (face of dart u->v, face of dart v->u) for edge uv with u < v.
    auto faces_of_edge(EdgeId e) const -> std::pair<RegionId, RegionId> { return edge_faces_[e]; }

    /// True iff every edge borders two distinct faces.
    auto two_sided() const -> bool;

private:
    RotationGraph graph_;
    std::vector<Region> regions_;
    std::vector<std::pair<RegionId, RegionId>> edge_faces_;
};

/// Simple planar drawing with per-edge multiplicities m(e) and target
/// degree d. Only the structural part is checked on construction; the
/// d-target conditions are checked by validate() and the cuts module.
class DTarget {
public:
    DTarget() = default;
    /// mult is indexed by edge id. Throws NegativeMultiplicity, InvalidArgument.
    DTarget(RotationGraph graph, int d, std::vector<int> mult);

    auto graph() const -> const RotationGraph& { return graph_; }
    auto d() const -> int { return d_; }
    auto vertex_count() const -> int { return graph_.vertex_count(); }
    auto edge_count() const -> int { return graph_.edge_count(); }
    auto mult(EdgeId e) const -> int { return mult_[e]; }
    auto mult(VertexId a, VertexId b) const -> int { return mult_[graph_.edge_id(a, b)]; }
    auto mults() const -> std::span<const int> { return mult_; }

    /// m(delta(v)).
    auto load(VertexId v) const -> int;

    friend auto operator==(const DTarget& a, const DTarget& b) -> bool
    {
        return a.d_ == b.d_ && a.graph_ == b.graph_ && a.mult_ == b.mult_;
    }

private:
    RotationGraph graph_;
    int d_ = 0;
    std::vector<int> mult_;
};

/// Builds a target from rotations and a multiplicity per unordered pair;
/// pairs absent from `mult` raise MissingMultiplicity.
auto make_dtarget(int d, std::vector<std::vector<VertexId>> rotations,
                  const std::vector<std::pair<Edge, int>>& mult) -> DTarget;

auto parse_dtarget(std::string_view text) -> DTarget;
auto serialize_dtarget(const DTarget& t) -> std::string;

auto regions(const DTarget& t) -> std::vector<Region>;

/// The two distinct regions bordering e, lower id first.
/// Throws NotTwoConnected when e borders a single region on both sides.
auto region_pair(const DTarget& t, EdgeId e) -> std::pair<Region, Region>;

struct Violation {
    std::string kind;
    std::string location;
};

struct ValidationReport {
    bool degree_ok = false;
    bool euler_ok = false;
    int connectivity_level = 0;  // 0 disconnected, 1, 2, 3 meaning "3 or more"
    std::vector<Violation> violations;

    auto ok() const -> bool { return violations.empty(); }
};

auto validate(const DTarget& t) -> ValidationReport;

/// Vertex connectivity capped at 3 (complete graphs count as n - 1).
auto connectivity_level(const RotationGraph& g) -> int;

}  // namespace planarcol
