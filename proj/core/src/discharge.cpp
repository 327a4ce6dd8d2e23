#include "planarcol/discharge.hpp"

#include <algorithm>
#include <array>

namespace planarcol {

namespace {

void require_d(const DTarget& t)
{
    if (t.d() != config_d)
        throw Error(ErrorCode::UnsupportedD, "charges are defined for d=8, got d=" + std::to_string(t.d()));
}

auto make_transfer(const TargetContext& ctx, EdgeId e, RegionId receiver, Half amount, int rule) -> EdgeTransfer
{
    auto [a, b] = ctx.faces().faces_of_edge(e);
    EdgeTransfer out;
    out.edge = e;
    out.first = std::min(a, b);
    out.second = std::max(a, b);
    out.rule = rule;
    if (receiver == out.first) {
        out.to_first = amount;
        out.to_second = -amount;
    } else {
        out.to_second = amount;
        out.to_first = -amount;
    }
    return out;
}

// The two edges of C_r adjacent to e.
auto neighbours_on(const TargetContext& ctx, RegionId r, EdgeId e) -> std::array<EdgeId, 2>
{
    const Region& reg = ctx.region(r);
    int len = reg.length();
    int at = static_cast<int>(std::find(reg.edges.begin(), reg.edges.end(), e) - reg.edges.begin());
    return {reg.edges[(at + len - 1) % len], reg.edges[(at + 1) % len]};
}

auto common_end(const Edge& a, const Edge& b) -> VertexId
{
    return b.has(a.u) ? a.u : a.v;
}

}  // namespace

auto alpha(const DTarget& t, RegionId r) -> Half
{
    require_d(t);
    FaceStructure faces(t.graph());
    const Region& reg = faces.region(r);
    int sum = 0;
    for (EdgeId e : reg.edges)
        sum += t.mult(e);
    return Half{8 - 4 * reg.length() + sum};
}

auto beta_edge(const TargetContext& ctx, EdgeId e) -> EdgeTransfer
{
    require_d(ctx.target());
    auto [a, b] = ctx.faces().faces_of_edge(e);
    if (ctx.is_big(a) == ctx.is_big(b))
        return make_transfer(ctx, e, a, Half{}, 0);
    RegionId big = ctx.is_big(a) ? a : b;

    if (ctx.is_door(e, big))
        return make_transfer(ctx, e, big, Half{}, 1);
    auto [f, g] = neighbours_on(ctx, big, e);
    std::array<RegionId, 1> disc{big};
    int mf = ctx.m_plus(f, disc);
    int mg = ctx.m_plus(g, disc);
    int me = ctx.mult(e);
    if (me == 2 && mf == 6 && mg == 6)
        return make_transfer(ctx, e, big, Half{}, 2);
    if (me == 2 && ((mf == 6 && mg == 5) || (mf == 5 && mg == 6)))
        return make_transfer(ctx, e, big, Half::from_twice(1), 3);
    if (me == 3 && mf == 5 && mg == 5)
        return make_transfer(ctx, e, big, Half{}, 4);
    if (me == 3 && (mf == 5) != (mg == 5))
        return make_transfer(ctx, e, big, Half::from_twice(1), 5);
    return make_transfer(ctx, e, big, Half{1}, 6);
}

auto gamma_edge(const TargetContext& ctx, EdgeId e) -> EdgeTransfer
{
    require_d(ctx.target());
    auto [a, b] = ctx.faces().faces_of_edge(e);
    if (ctx.is_big(a) || ctx.is_big(b) || ctx.is_tough(a) == ctx.is_tough(b))
        return make_transfer(ctx, e, a, Half{}, 0);
    RegionId tough = ctx.is_tough(a) ? a : b;
    RegionId r = tough == a ? b : a;

    std::array<EdgeId, 2> others{};
    int k = 0;
    for (EdgeId f : ctx.region(tough).edges)
        if (f != e)
            others[k++] = f;
    std::array<RegionId, 1> disc{tough};
    int me = ctx.mult(e);
    const Edge& ed = ctx.edge(e);

    // Rules 2, 3 and 5 name e_1 by a property; try both labellings.
    struct Labelled {
        EdgeId e1, e2;
        RegionId r1, r2;
    };
    std::array<Labelled, 2> labellings{
        Labelled{others[0], others[1], ctx.other_region(others[0], tough), ctx.other_region(others[1], tough)},
        Labelled{others[1], others[0], ctx.other_region(others[1], tough), ctx.other_region(others[0], tough)}};
    const Labelled& base = labellings[0];
    int m1 = ctx.mult(base.e1);
    int m2 = ctx.mult(base.e2);
    int plus_sum = ctx.m_plus(base.e1, disc) + ctx.m_plus(base.e2, disc);

    if (me == 1 && m1 >= 2 && m2 >= 2 && plus_sum >= 6)
        return make_transfer(ctx, e, r, Half{1}, 1);
    if (me == 1)
        for (const auto& l : labellings)
            if (ctx.m_plus(l.e1, disc) >= 4 && ctx.mult(l.e2) == 1 && ctx.is_small(l.r2))
                return make_transfer(ctx, e, r, Half::from_twice(1), 2);
    if (me == 1)
        for (const auto& l : labellings) {
            if (ctx.mult(l.e1) != 3 || ctx.mult(l.e2) != 1 || !ctx.is_small(l.r2))
                continue;
            VertexId z = common_end(ed, ctx.edge(l.e1));
            auto at = ctx.boundary_edges_at(r, z, e);
            if (at.size() == 1 && ctx.mult(at.front()) == 4)
                return make_transfer(ctx, e, r, Half::from_twice(1), 3);
        }
    if (me == 2 && m1 >= 2 && m2 >= 2 && plus_sum >= 5) {
        bool several_doors = ctx.door_count(r) > 1;
        bool far_door = false;
        for (EdgeId f : ctx.disjoint_edges(r, e))
            far_door = far_door || ctx.is_door(f, r);
        bool heavy_neighbour = false;
        for (EdgeId f : neighbours_on(ctx, r, e))
            heavy_neighbour = heavy_neighbour || ctx.mult(f) == 4;
        heavy_neighbour = heavy_neighbour && ctx.is_small(base.r1) && ctx.is_small(base.r2);
        if (several_doors || far_door || heavy_neighbour)
            return make_transfer(ctx, e, r, Half{1}, 4);
    }
    if (me == 2 && m1 == 2 && m2 == 2)
        for (VertexId end : {ed.u, ed.v}) {
            if (ctx.degree(end) != 3)
                continue;
            for (const auto& l : labellings)
                if (ctx.edge(l.e1).has(end) && ctx.is_small(l.r1) && ctx.is_big(l.r2))
                    return make_transfer(ctx, e, r, Half::from_twice(1), 5);
        }
    if (me == 3 && m1 == 2 && m2 == 2)
        return make_transfer(ctx, e, r, Half{1}, 6);
    return make_transfer(ctx, e, r, Half{}, 7);
}

auto beta_edge(const DTarget& t, EdgeId e) -> EdgeTransfer
{
    require_d(t);
    return beta_edge(TargetContext(t), e);
}

auto gamma_edge(const DTarget& t, EdgeId e) -> EdgeTransfer
{
    require_d(t);
    return gamma_edge(TargetContext(t), e);
}

auto to_string(RegionClass c) -> std::string
{
    switch (c) {
    case RegionClass::Big: return "Big";
    case RegionClass::TriangleNotTough: return "TriangleNotTough";
    case RegionClass::TriangleTough: return "TriangleTough";
    case RegionClass::SmallLenAtLeast4: return "SmallLenAtLeast4";
    }
    return "?";
}

auto classify_region(const TargetContext& ctx, RegionId r) -> RegionClass
{
    if (ctx.is_big(r))
        return RegionClass::Big;
    if (ctx.region(r).is_triangle())
        return ctx.is_tough(r) ? RegionClass::TriangleTough : RegionClass::TriangleNotTough;
    return RegionClass::SmallLenAtLeast4;
}

auto charge_report(const DTarget& t) -> ChargeReport
{
    require_d(t);
    TargetContext ctx(t);
    ChargeReport report;
    for (RegionId r = 0; r < ctx.region_count(); ++r) {
        RegionCharge c;
        c.region = r;
        c.length = ctx.region(r).length();
        c.kind = classify_region(ctx, r);
        int sum = 0;
        for (EdgeId e : ctx.region(r).edges)
            sum += t.mult(e);
        c.alpha = Half{8 - 4 * c.length + sum};
        report.regions.push_back(c);
    }
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        auto beta = beta_edge(ctx, e);
        auto gamma = gamma_edge(ctx, e);
        if (beta.to_first + beta.to_second != Half{} || gamma.to_first + gamma.to_second != Half{})
            throw Error(ErrorCode::IdentityViolation, "transfer across edge " + std::to_string(e) + " is not antisymmetric");
        for (RegionId r : {beta.first, beta.second}) {
            report.regions[r].beta += beta.to(r);
            report.regions[r].gamma += gamma.to(r);
        }
        report.beta.push_back(beta);
        report.gamma.push_back(gamma);
    }
    for (const auto& c : report.regions) {
        report.alpha_sum += c.alpha;
        report.beta_sum += c.beta;
        report.gamma_sum += c.gamma;
    }
    if (report.alpha_sum != Half{16} || report.beta_sum != Half{} || report.gamma_sum != Half{})
        throw Error(ErrorCode::IdentityViolation, "alpha sum " + report.alpha_sum.str() + ", beta sum " +
                                                      report.beta_sum.str() + ", gamma sum " + report.gamma_sum.str());
    return report;
}

auto positive_regions(const ChargeReport& report) -> std::vector<PositiveRegion>
{
    std::vector<PositiveRegion> out;
    for (const auto& c : report.regions)
        if (c.total() > Half{})
            out.push_back({c.region, c.kind, c.total()});
    return out;
}

auto positive_regions(const DTarget& t) -> std::vector<PositiveRegion>
{
    return positive_regions(charge_report(t));
}

}  // namespace planarcol
