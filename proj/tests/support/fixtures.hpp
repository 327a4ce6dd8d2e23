#pragma once
// Hand-built targets for predicate and rule examples that the standard
// corpus does not reach.
#include "planarcol/coloring.hpp"
#include "planarcol/cuts.hpp"
#include "planarcol/planar_core.hpp"
#include "planarcol/switching.hpp"

#include <functional>
#include <string>

namespace fixtures {

using planarcol::DTarget;

/// Multiplicities from a rule over the edges of `g`.
auto with_mults(const planarcol::RotationGraph& g, int d, const std::function<int(planarcol::Edge)>& rule) -> DTarget;

/// Triangular prism, top 01=1 12=3 02=3, verticals 03=4 14=4 25=2,
/// bottom mirrored. The square 0-1-4-3 has two disjoint m=1 edges.
auto door_prism() -> DTarget;

/// 10-prism whose two 10-gons alternate 1,3 and whose spokes are 4.
auto alternating_ten_prism() -> DTarget;

/// 10-prism with outer cycle 1,3,1,3,1,3,1,4,3,3 (edge i joins i and
/// i+1), inner cycle the same, spokes filling each vertex up to 8.
auto beta_half_prism() -> DTarget;

/// Triangular prism, top 01=3 12=2 02=2, verticals 03=3 14=3 25=4,
/// bottom mirrored.
auto gamma_square_prism() -> DTarget;

/// Two 10-cycles sharing vertex 0, joined by nine spokes. Triangle 0-1-10
/// has mults 2 (0-1), 1 (1-10), 2 (0-10) and is not tough; both 10-gons are
/// big.
auto pinched_ring() -> DTarget;

/// Hexagonal prism, both hexagons 3, spokes 2.
auto hexagonal_prism() -> DTarget;

/// Pentagonal prism coloured by one all-spoke matching and seven matchings
/// with a single spoke each; the cut around the outer pentagon meets the
/// first matching five times and every other matching once.
struct CocycleInstance {
    DTarget target;
    planarcol::EdgeColouring colouring;
    planarcol::PathMove path;
    planarcol::VertexSet side;
};
auto spoke_cocycle_instance() -> CocycleInstance;

/// Reads data/fixtures/<name>.dtarget.
auto load_fixture(const std::string& name) -> DTarget;

}  // namespace fixtures
