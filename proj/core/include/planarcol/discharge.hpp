#pragma once

// Charges on regions of an 8-target: the initial charge alpha, the
// big-region transfer beta and the tough-triangle transfer gamma. Their
// totals over all regions are 16, 0 and 0.

#include "planarcol/config.hpp"
#include "planarcol/half.hpp"

#include <string>
#include <vector>

namespace planarcol {

/// 8 - 4|C_r| + m(C_r). Throws UnsupportedD.
auto alpha(const DTarget& t, RegionId r) -> Half;

/// Transfer across one edge. `first`/`second` are the edge's regions with
/// the lower id first; to_first == -to_second always.
struct EdgeTransfer {
    EdgeId edge = 0;
    RegionId first = 0;
    RegionId second = 0;
    Half to_first;
    Half to_second;
    int rule = 0;  // 0 when the gate closed before any numbered rule

    auto to(RegionId r) const -> Half { return r == first ? to_first : r == second ? to_second : Half{}; }
};

/// Beta rules 1-6, applied only when exactly one side is big.
auto beta_edge(const TargetContext& ctx, EdgeId e) -> EdgeTransfer;
auto beta_edge(const DTarget& t, EdgeId e) -> EdgeTransfer;

/// Gamma rules 1-7, applied only when neither side is big and exactly one
/// side is a tough triangle.
auto gamma_edge(const TargetContext& ctx, EdgeId e) -> EdgeTransfer;
auto gamma_edge(const DTarget& t, EdgeId e) -> EdgeTransfer;

enum class RegionClass { Big, TriangleNotTough, TriangleTough, SmallLenAtLeast4 };

auto to_string(RegionClass c) -> std::string;
auto classify_region(const TargetContext& ctx, RegionId r) -> RegionClass;

struct RegionCharge {
    RegionId region = 0;
    int length = 0;
    RegionClass kind = RegionClass::SmallLenAtLeast4;
    Half alpha;
    Half beta;
    Half gamma;

    auto total() const -> Half { return alpha + beta + gamma; }
};

struct ChargeReport {
    std::vector<RegionCharge> regions;
    std::vector<EdgeTransfer> beta;   // one per edge, by edge id
    std::vector<EdgeTransfer> gamma;  // one per edge, by edge id
    Half alpha_sum;
    Half beta_sum;
    Half gamma_sum;

    auto total_sum() const -> Half { return alpha_sum + beta_sum + gamma_sum; }
};

/// Full tables. Throws UnsupportedD, NotTwoConnected, and IdentityViolation
/// if a global identity or per-edge antisymmetry fails.
auto charge_report(const DTarget& t) -> ChargeReport;

struct PositiveRegion {
    RegionId region = 0;
    RegionClass kind = RegionClass::SmallLenAtLeast4;
    Half total;
};

auto positive_regions(const ChargeReport& report) -> std::vector<PositiveRegion>;
auto positive_regions(const DTarget& t) -> std::vector<PositiveRegion>;

}  // namespace planarcol
