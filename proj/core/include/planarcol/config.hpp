#pragma once

// Region predicates (doors, big/small, heaviness, m-plus, toughness), the
// nineteen reducible configurations, and the primality verdict for 8-targets.

#include "planarcol/cuts.hpp"
#include "planarcol/planar_core.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace planarcol {

inline constexpr int config_d = 8;
inline constexpr int config_count = 19;

/// Precomputed faces, doors and big/small flags for one target.
/// Throws NotTwoConnected when some edge borders a single region twice.
class TargetContext {
public:
    explicit TargetContext(const DTarget& t);

    auto target() const -> const DTarget& { return target_; }
    auto faces() const -> const FaceStructure& { return faces_; }
    auto region(RegionId r) const -> const Region& { return faces_.region(r); }
    auto region_count() const -> int { return faces_.region_count(); }
    auto mult(EdgeId e) const -> int { return target_.mult(e); }
    auto edge(EdgeId e) const -> const Edge& { return target_.graph().edge(e); }
    auto degree(VertexId v) const -> int { return target_.graph().degree(v); }

    /// The region across e from r; r must border e.
    auto other_region(EdgeId e, RegionId r) const -> RegionId;
    auto borders(EdgeId e, RegionId r) const -> bool;

    auto is_door(EdgeId e, RegionId r) const -> bool;
    auto door_count(RegionId r) const -> int { return door_count_[r]; }
    auto is_big(RegionId r) const -> bool { return door_count_[r] >= 4; }
    auto is_small(RegionId r) const -> bool { return !is_big(r); }

    /// Exactly one region of e lies in the disc: returns the other one.
    auto second_region(EdgeId e, std::span<const RegionId> disc) const -> std::optional<RegionId>;
    /// Throws AmbiguousContext unless exactly one region of e is in the disc.
    auto m_plus(EdgeId e, std::span<const RegionId> disc) const -> int;
    auto try_m_plus(EdgeId e, std::span<const RegionId> disc) const -> std::optional<int>;

    auto is_heavy(EdgeId e, RegionId r, int level) const -> bool;
    /// Throws NotATriangle.
    auto triangle_multiplicity(RegionId r) const -> int;
    auto is_tough(RegionId r) const -> bool;

    /// Edges of C_r sharing no end with e.
    auto disjoint_edges(RegionId r, EdgeId e) const -> std::vector<EdgeId>;
    /// Edges of C_r meeting v, other than `skip`.
    auto boundary_edges_at(RegionId r, VertexId v, EdgeId skip) const -> std::vector<EdgeId>;

private:
    DTarget target_;
    FaceStructure faces_;
    std::vector<std::array<char, 2>> door_;  // per edge: door for (first face, second face)
    std::vector<int> door_count_;
};

// Free-function forms; each builds a context.
auto is_door(const DTarget& t, EdgeId e, RegionId r) -> bool;
auto is_big(const DTarget& t, RegionId r) -> bool;
auto is_heavy(const DTarget& t, EdgeId e, RegionId r, int level) -> bool;
auto m_plus(const DTarget& t, EdgeId e, const std::vector<RegionId>& disc) -> int;
auto triangle_multiplicity(const DTarget& t, RegionId r) -> int;
auto is_tough(const DTarget& t, RegionId r) -> bool;

/// A labelled occurrence. Vertex names per configuration:
///   1, 7, 8, 9, 16, 18: u v w      2, 3, 5: u v w x     4, 6: u v w x (square)
///   10, 11, 12: u v w x y          13: v1..v5 with e_i = v_i v_(i+1)
///   14, 15, 17, 19: a b, the ends of e (a < b)
/// Regions: 3, 5 [uvw, uwx]; 10-12 [square, triangle]; 16, 18 [r, triangle];
/// otherwise the single named region.
struct ConfigMatch {
    int conf = 0;
    std::vector<std::pair<std::string, VertexId>> vertices;
    std::vector<RegionId> regions;
    std::vector<std::string> satisfied;

    auto vertex_tuple() const -> std::vector<VertexId>;
    auto vertex(const std::string& name) const -> VertexId;
};

auto vertex_names(int conf) -> std::vector<std::string>;

/// Every occurrence of Conf(k), one per orbit of the configuration's own
/// symmetries, sorted by (vertex tuple, regions). Throws UnsupportedD,
/// InvalidArgument (k out of range), NotTwoConnected.
auto detect(const DTarget& t, int conf) -> std::vector<ConfigMatch>;
auto detect(const TargetContext& ctx, int conf) -> std::vector<ConfigMatch>;
auto detect_all(const DTarget& t) -> std::vector<ConfigMatch>;

/// Re-evaluates structure and inequalities for the named elements.
auto verify_match(const DTarget& t, const ConfigMatch& match) -> bool;
auto verify_match(const TargetContext& ctx, const ConfigMatch& match) -> bool;

struct ZeroMultEdge {
    EdgeId edge = 0;
};
struct TooFewVertices {
    int vertices = 0;
};
struct CutViolation {
    CutWitness cut;
};
struct NotThreeConnected {
    int level = 0;
};
struct MultiplicityOver6 {
    EdgeId edge = 0;
};

using PrimalityWitness =
    std::variant<ZeroMultEdge, TooFewVertices, CutViolation, NotThreeConnected, MultiplicityOver6, ConfigMatch>;

struct PrimalityVerdict {
    bool is_prime = false;
    std::optional<PrimalityWitness> witness;
};

auto witness_kind(const PrimalityWitness& w) -> std::string;

/// First failing condition in the fixed order: zero edge, fewer than six
/// vertices, small odd cut, connectivity, multiplicity above six, lowest
/// configuration. Throws UnsupportedD, TooLarge, OddVertexCount.
auto is_prime(const DTarget& t, int cut_cap = default_cut_cap) -> PrimalityVerdict;

/// Independently re-checks a non-prime witness against t.
auto recheck_witness(const DTarget& t, const PrimalityWitness& w) -> bool;

}  // namespace planarcol
