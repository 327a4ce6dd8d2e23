#include "planarcol/config.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace planarcol {

// ---------------------------------------------------------------------------
// Predicates

TargetContext::TargetContext(const DTarget& t) : target_(t), faces_(t.graph())
{
    if (!faces_.two_sided())
        throw Error(ErrorCode::NotTwoConnected, "an edge borders the same region on both sides");
    int edges = t.edge_count();
    door_.assign(edges, {0, 0});
    door_count_.assign(faces_.region_count(), 0);
    for (EdgeId e = 0; e < edges; ++e) {
        if (t.mult(e) != 1)
            continue;
        auto [first, second] = faces_.faces_of_edge(e);
        const Edge& ed = edge(e);
        auto has_partner = [&](RegionId across) {
            for (EdgeId f : faces_.region(across).edges) {
                const Edge& fd = edge(f);
                if (f != e && t.mult(f) == 1 && !fd.has(ed.u) && !fd.has(ed.v))
                    return true;
            }
            return false;
        };
        door_[e][0] = has_partner(second) ? 1 : 0;
        door_[e][1] = has_partner(first) ? 1 : 0;
        door_count_[first] += door_[e][0];
        door_count_[second] += door_[e][1];
    }
}

auto TargetContext::borders(EdgeId e, RegionId r) const -> bool
{
    auto [a, b] = faces_.faces_of_edge(e);
    return a == r || b == r;
}

auto TargetContext::other_region(EdgeId e, RegionId r) const -> RegionId
{
    auto [a, b] = faces_.faces_of_edge(e);
    if (a == r)
        return b;
    if (b == r)
        return a;
    throw Error(ErrorCode::InvalidArgument,
                "edge " + std::to_string(e) + " does not border region " + std::to_string(r));
}

auto TargetContext::is_door(EdgeId e, RegionId r) const -> bool
{
    auto [a, b] = faces_.faces_of_edge(e);
    if (a == r)
        return door_[e][0] != 0;
    if (b == r)
        return door_[e][1] != 0;
    return false;
}

auto TargetContext::second_region(EdgeId e, std::span<const RegionId> disc) const -> std::optional<RegionId>
{
    auto [a, b] = faces_.faces_of_edge(e);
    bool in_a = std::find(disc.begin(), disc.end(), a) != disc.end();
    bool in_b = std::find(disc.begin(), disc.end(), b) != disc.end();
    if (in_a == in_b)
        return std::nullopt;
    return in_a ? b : a;
}

auto TargetContext::try_m_plus(EdgeId e, std::span<const RegionId> disc) const -> std::optional<int>
{
    auto second = second_region(e, disc);
    if (!second)
        return std::nullopt;
    return mult(e) + (is_small(*second) ? 1 : 0);
}

auto TargetContext::m_plus(EdgeId e, std::span<const RegionId> disc) const -> int
{
    auto value = try_m_plus(e, disc);
    if (!value)
        throw Error(ErrorCode::AmbiguousContext,
                    "edge " + std::to_string(e) + " is not on the boundary of the disc");
    return *value;
}

auto TargetContext::is_heavy(EdgeId e, RegionId r, int level) const -> bool
{
    if (mult(e) >= level)
        return true;
    const Region& across = region(other_region(e, r));
    if (!across.is_triangle())
        return false;
    int lightest = -1;
    for (EdgeId f : across.edges)
        if (f != e)
            lightest = lightest < 0 ? mult(f) : std::min(lightest, mult(f));
    return mult(e) + lightest >= level;
}

auto TargetContext::triangle_multiplicity(RegionId r) const -> int
{
    const Region& reg = region(r);
    if (!reg.is_triangle())
        throw Error(ErrorCode::NotATriangle, "region " + std::to_string(r) + " has length " + std::to_string(reg.length()));
    int sum = 0;
    for (EdgeId e : reg.edges)
        sum += mult(e);
    return sum;
}

auto TargetContext::is_tough(RegionId r) const -> bool
{
    const Region& reg = region(r);
    if (!reg.is_triangle() || triangle_multiplicity(r) < 5)
        return false;
    std::array<RegionId, 1> disc{r};
    for (int i = 0; i < 3; ++i) {
        EdgeId e = reg.edges[i];
        EdgeId f = reg.edges[(i + 1) % 3];
        EdgeId g = reg.edges[(i + 2) % 3];
        if (mult(e) == 1 && mult(f) == 2 && mult(g) == 2)
            return m_plus(f, disc) + m_plus(g, disc) >= 5;
    }
    return true;
}

auto TargetContext::disjoint_edges(RegionId r, EdgeId e) const -> std::vector<EdgeId>
{
    const Edge& ed = edge(e);
    std::vector<EdgeId> out;
    for (EdgeId f : region(r).edges)
        if (f != e && !edge(f).has(ed.u) && !edge(f).has(ed.v))
            out.push_back(f);
    return out;
}

auto TargetContext::boundary_edges_at(RegionId r, VertexId v, EdgeId skip) const -> std::vector<EdgeId>
{
    std::vector<EdgeId> out;
    for (EdgeId f : region(r).edges)
        if (f != skip && edge(f).has(v))
            out.push_back(f);
    return out;
}

auto is_door(const DTarget& t, EdgeId e, RegionId r) -> bool { return TargetContext(t).is_door(e, r); }
auto is_big(const DTarget& t, RegionId r) -> bool { return TargetContext(t).is_big(r); }
auto is_heavy(const DTarget& t, EdgeId e, RegionId r, int level) -> bool
{
    return TargetContext(t).is_heavy(e, r, level);
}
auto m_plus(const DTarget& t, EdgeId e, const std::vector<RegionId>& disc) -> int
{
    return TargetContext(t).m_plus(e, disc);
}
auto triangle_multiplicity(const DTarget& t, RegionId r) -> int { return TargetContext(t).triangle_multiplicity(r); }
auto is_tough(const DTarget& t, RegionId r) -> bool { return TargetContext(t).is_tough(r); }

// ---------------------------------------------------------------------------
// Configurations

namespace {

struct Placement {
    std::vector<VertexId> vertices;
    std::vector<RegionId> regions;

    friend auto operator<(const Placement& a, const Placement& b) -> bool
    {
        return std::tie(a.vertices, a.regions) < std::tie(b.vertices, b.regions);
    }
    friend auto operator==(const Placement&, const Placement&) -> bool = default;
};

auto cyclic_labellings(const Region& r) -> std::vector<std::vector<VertexId>>
{
    int len = r.length();
    std::vector<std::vector<VertexId>> out;
    for (int dir : {1, -1})
        for (int s = 0; s < len; ++s) {
            std::vector<VertexId> tuple;
            for (int i = 0; i < len; ++i)
                tuple.push_back(r.vertices[((s + dir * i) % len + len) % len]);
            out.push_back(std::move(tuple));
        }
    return out;
}

auto str(int value) -> std::string { return std::to_string(value); }

// Condition checks on one labelled placement. Each returns false as soon as
// the structure or an inequality fails; `facts` collects what held.
class Evaluator {
public:
    explicit Evaluator(const TargetContext& ctx) : ctx_(ctx), g_(ctx.target().graph()) {}

    auto run(int conf, const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        facts.clear();
        switch (conf) {
        case 1: return conf1(p, facts);
        case 2: return conf2(p, facts);
        case 3: return conf3(p, facts, false);
        case 4: return conf4(p, facts);
        case 5: return conf3(p, facts, true);
        case 6: return conf6(p, facts);
        case 7: return conf7(p, facts);
        case 8: return conf8(p, facts);
        case 9: return conf9(p, facts);
        case 10:
        case 11:
        case 12: return square_triangle(conf, p, facts);
        case 13: return conf13(p, facts);
        case 14: return conf14(p, facts);
        case 15: return conf15(p, facts);
        case 16: return conf16(p, facts);
        case 17: return conf17(p, facts);
        case 18: return conf18(p, facts);
        case 19: return conf19(p, facts);
        default: return false;
        }
    }

private:
    auto edge(VertexId a, VertexId b) const -> EdgeId
    {
        if (a < 0 || b < 0 || a >= g_.vertex_count() || b >= g_.vertex_count())
            return -1;
        return g_.edge_between(a, b).value_or(-1);
    }

    auto m(VertexId a, VertexId b) const -> int { return ctx_.mult(edge(a, b)); }

    auto valid_region(RegionId r) const -> bool { return r >= 0 && r < ctx_.region_count(); }

    auto is_triangle_on(RegionId r, std::initializer_list<VertexId> vs) const -> bool
    {
        if (!valid_region(r) || !ctx_.region(r).is_triangle())
            return false;
        std::set<VertexId> want(vs);
        std::set<VertexId> have(ctx_.region(r).vertices.begin(), ctx_.region(r).vertices.end());
        return want.size() == 3 && want == have;
    }

    auto is_labelling(RegionId r, const std::vector<VertexId>& tuple) const -> bool
    {
        if (!valid_region(r) || ctx_.region(r).length() != static_cast<int>(tuple.size()))
            return false;
        auto all = cyclic_labellings(ctx_.region(r));
        return std::find(all.begin(), all.end(), tuple) != all.end();
    }

    // Edge ab lies on C_r.
    auto on_boundary(RegionId r, VertexId a, VertexId b) const -> EdgeId
    {
        EdgeId e = edge(a, b);
        if (e < 0 || !valid_region(r) || !ctx_.region(r).contains_edge(e))
            return -1;
        return e;
    }

    auto mplus(EdgeId e, std::initializer_list<RegionId> disc) const -> std::optional<int>
    {
        std::vector<RegionId> d(disc);
        return ctx_.try_m_plus(e, d);
    }

    // Doors of `region` sharing no end with any of `avoid`.
    auto doors_avoiding(RegionId region, std::initializer_list<VertexId> avoid) const -> int
    {
        int count = 0;
        for (EdgeId f : ctx_.region(region).edges) {
            if (!ctx_.is_door(f, region))
                continue;
            const Edge& fd = ctx_.edge(f);
            bool touches = std::any_of(avoid.begin(), avoid.end(), [&](VertexId z) { return fd.has(z); });
            if (!touches)
                ++count;
        }
        return count;
    }

    auto conf1(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        if (p.vertices.size() != 3 || p.regions.size() != 1)
            return false;
        auto [u, v, w] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2]};
        if (!is_triangle_on(p.regions[0], {u, v, w}))
            return false;
        if (ctx_.degree(u) != 3 || ctx_.degree(v) != 3)
            return false;
        facts = {"deg(u) = 3", "deg(v) = 3"};
        return true;
    }

    auto conf2(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        if (p.vertices.size() != 4 || p.regions.size() != 1)
            return false;
        auto [u, v, w, x] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2], p.vertices[3]};
        if (!is_triangle_on(p.regions[0], {u, v, w}) || ctx_.degree(u) != 3)
            return false;
        if (x == v || x == w || edge(u, x) < 0)
            return false;
        int lhs = m(u, x);
        int rhs = m(u, w) + m(v, w);
        if (lhs >= rhs)
            return false;
        facts = {"deg(u) = 3", "m(ux) = " + str(lhs) + " < m(uw)+m(vw) = " + str(rhs)};
        return true;
    }

    // Conf(3) and, with `plus`, Conf(5).
    auto conf3(const Placement& p, std::vector<std::string>& facts, bool plus) const -> bool
    {
        if (p.vertices.size() != 4 || p.regions.size() != 2 || p.regions[0] == p.regions[1])
            return false;
        auto [u, v, w, x] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2], p.vertices[3]};
        RegionId t1 = p.regions[0];
        RegionId t2 = p.regions[1];
        if (!is_triangle_on(t1, {u, v, w}) || !is_triangle_on(t2, {u, w, x}))
            return false;
        if (!plus) {
            int sum = m(u, v) + m(u, w) + m(v, w) + m(u, x);
            if (sum < 8)
                return false;
            facts = {"m(uv)+m(uw)+m(vw)+m(ux) = " + str(sum) + " >= 8"};
            return true;
        }
        auto a = mplus(edge(u, v), {t1, t2});
        auto b = mplus(edge(w, x), {t1, t2});
        if (!a || !b)
            return false;
        int sum = *a + m(u, w) + *b;
        if (sum < 7)
            return false;
        facts = {"m+(uv)+m(uw)+m+(wx) = " + str(sum) + " >= 7"};
        return true;
    }

    auto conf4(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        if (p.vertices.size() != 4 || p.regions.size() != 1 || !is_labelling(p.regions[0], p.vertices))
            return false;
        auto [u, v, w, x] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2], p.vertices[3]};
        int sum = m(u, v) + m(v, w) + m(u, x);
        std::array<int, 4> tuple{m(u, v), m(v, w), m(w, x), m(u, x)};
        if (sum < 8 || tuple == std::array<int, 4>{4, 2, 1, 2})
            return false;
        facts = {"m(uv)+m(vw)+m(ux) = " + str(sum) + " >= 8", "(m(uv),m(vw),m(wx),m(ux)) = (" + str(tuple[0]) +
                                                                   "," + str(tuple[1]) + "," + str(tuple[2]) + "," +
                                                                   str(tuple[3]) + ") != (4,2,1,2)"};
        return true;
    }

    auto conf6(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        if (p.vertices.size() != 4 || p.regions.size() != 1 || !is_labelling(p.regions[0], p.vertices))
            return false;
        auto [u, v, w, x] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2], p.vertices[3]};
        RegionId s = p.regions[0];
        auto a = mplus(edge(u, v), {s});
        auto b = mplus(edge(w, x), {s});
        if (!a || !b || *a + *b < 7)
            return false;
        facts = {"m+(uv)+m+(wx) = " + str(*a + *b) + " >= 7"};
        return true;
    }

    auto conf7(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        if (p.vertices.size() != 3 || p.regions.size() != 1)
            return false;
        auto [u, v, w] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2]};
        RegionId t = p.regions[0];
        if (!is_triangle_on(t, {u, v, w}))
            return false;
        auto a = mplus(edge(u, v), {t});
        auto b = mplus(edge(u, w), {t});
        if (!a || !b || *a + *b < 7)
            return false;
        facts = {"m+(uv)+m+(uw) = " + str(*a + *b) + " >= 7"};
        return true;
    }

    auto conf8(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        if (p.vertices.size() != 3 || p.regions.size() != 1)
            return false;
        auto [u, v, w] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2]};
        RegionId t = p.regions[0];
        if (!is_triangle_on(t, {u, v, w}))
            return false;
        if (m(u, v) != 3 || m(u, w) != 2 || m(v, w) != 2)
            return false;
        std::array<std::pair<const char*, EdgeId>, 3> sides{
            {{"uv", edge(u, v)}, {"uw", edge(u, w)}, {"vw", edge(v, w)}}};
        for (auto [name, e] : sides) {
            std::array<RegionId, 1> disc{t};
            auto second = ctx_.second_region(e, disc);
            if (second && doors_avoiding(*second, {u, v, w}) == 0) {
                facts = {"m(uv) = 3", "m(uw) = 2", "m(vw) = 2",
                         std::string("second region of ") + name + " has no door disjoint from uvw"};
                return true;
            }
        }
        return false;
    }

    auto conf9(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        if (p.vertices.size() != 3 || p.regions.size() != 1)
            return false;
        auto [u, v, w] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2]};
        RegionId t = p.regions[0];
        if (!is_triangle_on(t, {u, v, w}))
            return false;
        if (m(u, v) != 2 || m(u, w) != 2 || m(v, w) != 2 || ctx_.degree(u) < 4)
            return false;
        std::array<RegionId, 1> disc{t};
        for (EdgeId e : {edge(u, v), edge(u, w)}) {
            auto second = ctx_.second_region(e, disc);
            if (!second || ctx_.door_count(*second) > 1 || doors_avoiding(*second, {u, v, w}) > 0)
                return false;
        }
        facts = {"m(uv) = m(uw) = m(vw) = 2", "deg(u) = " + str(ctx_.degree(u)) + " >= 4",
                 "second regions of uv, uw have at most one door and none disjoint from uvw"};
        return true;
    }

    auto square_triangle(int conf, const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        if (p.vertices.size() != 5 || p.regions.size() != 2 || p.regions[0] == p.regions[1])
            return false;
        auto [u, v, w, x, y] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2], p.vertices[3], p.vertices[4]};
        RegionId s = p.regions[0];
        RegionId t = p.regions[1];
        std::vector<VertexId> square{u, v, w, x};
        if (!is_labelling(s, square) || !is_triangle_on(t, {w, x, y}))
            return false;
        if (conf == 10) {
            if (m(u, v) != 2 || m(w, x) != 2 || m(x, y) != 2 || m(v, w) != 4)
                return false;
            facts = {"m(uv) = m(wx) = m(xy) = 2", "m(vw) = 4"};
            return true;
        }
        auto xy = mplus(edge(x, y), {s, t});
        if (!xy || *xy < 3 || m(u, x) > 3)
            return false;
        if (conf == 11) {
            if (m(u, v) < 3 || m(w, y) < 3 || m(w, x) != 1)
                return false;
            facts = {"m(uv) = " + str(m(u, v)) + " >= 3", "m(wy) = " + str(m(w, y)) + " >= 3", "m(wx) = 1",
                     "m(ux) = " + str(m(u, x)) + " <= 3", "m+(xy) = " + str(*xy) + " >= 3"};
            return true;
        }
        auto uv = mplus(edge(u, v), {s, t});
        if (!uv || *uv < 2 || m(v, w) < 2 || m(w, x) != 2 || m(w, y) != 2)
            return false;
        facts = {"m+(uv) = " + str(*uv) + " >= 2", "m(vw) = " + str(m(v, w)) + " >= 2", "m(wx) = m(wy) = 2",
                 "m(ux) = " + str(m(u, x)) + " <= 3", "m+(xy) = " + str(*xy) + " >= 3"};
        return true;
    }

    auto conf13(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        if (p.vertices.size() != 5 || p.regions.size() != 1 || !is_labelling(p.regions[0], p.vertices))
            return false;
        RegionId r = p.regions[0];
        std::array<EdgeId, 5> e{};
        for (int i = 0; i < 5; ++i)
            e[i] = edge(p.vertices[i], p.vertices[(i + 1) % 5]);
        int m1 = ctx_.mult(e[0]);
        if (m1 < std::max(ctx_.mult(e[1]), ctx_.mult(e[4])))
            return false;
        int run = m1 + ctx_.mult(e[1]) + ctx_.mult(e[2]);
        if (run < 8)
            return false;
        auto a = mplus(e[0], {r});
        auto b = mplus(e[3], {r});
        if (!a || !b || *a + *b < 7)
            return false;
        facts = {"m(e1) = " + str(m1) + " >= max(m(e2), m(e5))", "m(e1)+m(e2)+m(e3) = " + str(run) + " >= 8",
                 "m+(e1)+m+(e4) = " + str(*a + *b) + " >= 7"};
        return true;
    }

    // Region r and edge ab of C_r, for the edge-anchored configurations.
    auto anchored(const Placement& p, RegionId& r, EdgeId& e) const -> bool
    {
        if (p.vertices.size() != 2 || p.regions.size() != 1)
            return false;
        r = p.regions[0];
        e = on_boundary(r, p.vertices[0], p.vertices[1]);
        return e >= 0;
    }

    auto conf14(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        RegionId r = 0;
        EdgeId e = 0;
        if (!anchored(p, r, e))
            return false;
        auto a = mplus(e, {r});
        if (!a || *a < 6)
            return false;
        int doors = 0;
        for (EdgeId f : ctx_.disjoint_edges(r, e))
            doors += ctx_.is_door(f, r) ? 1 : 0;
        if (doors > 6)
            return false;
        facts = {"m+(e) = " + str(*a) + " >= 6", str(doors) + " doors disjoint from e (at most 6)"};
        return true;
    }

    auto conf15(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        RegionId r = 0;
        EdgeId e = 0;
        if (!anchored(p, r, e) || ctx_.region(r).length() < 4)
            return false;
        auto a = mplus(e, {r});
        if (!a || *a < 4)
            return false;
        for (EdgeId f : ctx_.disjoint_edges(r, e))
            if (!ctx_.is_heavy(f, r, 3))
                return false;
        facts = {"length " + str(ctx_.region(r).length()) + " >= 4", "m+(e) = " + str(*a) + " >= 4",
                 "every edge disjoint from e is 3-heavy"};
        return true;
    }

    auto conf17(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        RegionId r = 0;
        EdgeId e = 0;
        if (!anchored(p, r, e) || ctx_.region(r).length() < 5)
            return false;
        auto a = mplus(e, {r});
        if (!a || *a < 5)
            return false;
        int light = 0;
        for (EdgeId f : ctx_.disjoint_edges(r, e)) {
            auto mf = mplus(f, {r});
            if (!mf || *mf < 2)
                return false;
            light += ctx_.is_heavy(f, r, 3) ? 0 : 1;
        }
        if (light > 1)
            return false;
        facts = {"length " + str(ctx_.region(r).length()) + " >= 5", "m+(e) = " + str(*a) + " >= 5",
                 "every edge disjoint from e has m+ >= 2", str(light) + " of them not 3-heavy (at most 1)"};
        return true;
    }

    auto conf19(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        RegionId r = 0;
        EdgeId e = 0;
        if (!anchored(p, r, e) || ctx_.region(r).length() < 5)
            return false;
        auto a = mplus(e, {r});
        if (!a || *a < 5)
            return false;
        int light = 0;
        for (EdgeId f : ctx_.disjoint_edges(r, e)) {
            if (!ctx_.is_heavy(f, r, 2))
                return false;
            light += ctx_.is_heavy(f, r, 3) ? 0 : 1;
        }
        if (light > 2)
            return false;
        facts = {"length " + str(ctx_.region(r).length()) + " >= 5", "m+(e) = " + str(*a) + " >= 5",
                 "every edge disjoint from e is 2-heavy", str(light) + " of them not 3-heavy (at most 2)"};
        return true;
    }

    // Region r, edge uv of C_r, triangle uvw across it. Fills the edge of
    // C_r at u other than uv.
    auto region_triangle(const Placement& p, RegionId& r, RegionId& t, EdgeId& uv, EdgeId& side) const -> bool
    {
        if (p.vertices.size() != 3 || p.regions.size() != 2 || p.regions[0] == p.regions[1])
            return false;
        auto [u, v, w] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2]};
        r = p.regions[0];
        t = p.regions[1];
        uv = on_boundary(r, u, v);
        if (uv < 0 || !is_triangle_on(t, {u, v, w}))
            return false;
        auto at_u = ctx_.boundary_edges_at(r, u, uv);
        if (at_u.size() != 1)
            return false;
        side = at_u.front();
        return true;
    }

    auto conf16(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        RegionId r = 0;
        RegionId t = 0;
        EdgeId uv = 0;
        EdgeId side = 0;
        if (!region_triangle(p, r, t, uv, side))
            return false;
        auto [u, v, w] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2]};
        auto uw = mplus(edge(u, w), {r, t});
        if (!uw || ctx_.mult(uv) + *uw < 4)
            return false;
        if (m(v, w) > m(u, w) || ctx_.mult(side) > m(u, w))
            return false;
        for (EdgeId f : ctx_.region(r).edges)
            if (!ctx_.edge(f).has(u) && !ctx_.is_heavy(f, r, 3))
                return false;
        facts = {"m(uv)+m+(uw) = " + str(ctx_.mult(uv) + *uw) + " >= 4",
                 "m(vw) = " + str(m(v, w)) + " <= m(uw) = " + str(m(u, w)),
                 "other edge of C_r at u has m = " + str(ctx_.mult(side)) + " <= m(uw)",
                 "every edge of C_r not incident with u is 3-heavy"};
        return true;
    }

    auto conf18(const Placement& p, std::vector<std::string>& facts) const -> bool
    {
        RegionId r = 0;
        RegionId t = 0;
        EdgeId uv = 0;
        EdgeId side = 0;
        if (!region_triangle(p, r, t, uv, side) || ctx_.region(r).length() < 4)
            return false;
        auto [u, v, w] = std::tuple{p.vertices[0], p.vertices[1], p.vertices[2]};
        auto uw = mplus(edge(u, w), {r, t});
        if (!uw || *uw + ctx_.mult(uv) < 5)
            return false;
        if (m(v, w) > m(u, w) || ctx_.mult(side) > m(u, w))
            return false;

        // Both branches: every listed edge has m+ >= 2 and at most one is not 3-heavy.
        auto branch_holds = [&](const std::vector<EdgeId>& edges) {
            int light = 0;
            for (EdgeId f : edges) {
                auto mf = mplus(f, {r, t});
                if (!mf || *mf < 2)
                    return false;
                light += ctx_.is_heavy(f, r, 3) ? 0 : 1;
            }
            return light <= 1;
        };
        bool a = ctx_.mult(uv) == 3 && ctx_.is_heavy(uv, r, 5) && branch_holds(ctx_.disjoint_edges(r, uv));
        std::vector<EdgeId> away_from_u;
        for (EdgeId f : ctx_.region(r).edges)
            if (!ctx_.edge(f).has(u))
                away_from_u.push_back(f);
        bool b = branch_holds(away_from_u);
        if (!a && !b)
            return false;
        facts = {"length " + str(ctx_.region(r).length()) + " >= 4", "m+(uw)+m(uv) = " + str(*uw + ctx_.mult(uv)) + " >= 5",
                 "m(vw) = " + str(m(v, w)) + " <= m(uw) = " + str(m(u, w)),
                 "other edge of C_r at u has m = " + str(ctx_.mult(side)) + " <= m(uw)",
                 std::string("branch ") + (a && b ? "A+B" : a ? "A" : "B")};
        return true;
    }

    const TargetContext& ctx_;
    const RotationGraph& g_;
};

// Position permutations generating each configuration's own symmetries.
// Conf(5)'s symmetry also swaps its two regions.
auto symmetries(int conf) -> std::vector<std::vector<int>>
{
    switch (conf) {
    case 1:
    case 8: return {{1, 0, 2}};
    case 7:
    case 9: return {{0, 2, 1}};
    case 4: return {{1, 0, 3, 2}};
    case 5: return {{2, 3, 0, 1}};
    case 6: return {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    default: return {};
    }
}

auto canonical(int conf, const Placement& p) -> Placement
{
    Placement best = p;
    for (const auto& perm : symmetries(conf)) {
        Placement q;
        for (int i : perm)
            q.vertices.push_back(p.vertices[i]);
        q.regions = p.regions;
        if (conf == 5)
            std::swap(q.regions[0], q.regions[1]);
        if (q < best)
            best = q;
    }
    return best;
}

auto candidates(const TargetContext& ctx, int conf) -> std::vector<Placement>
{
    const auto& g = ctx.target().graph();
    std::vector<Placement> out;
    auto regions_of_length = [&](auto pred, auto&& emit) {
        for (RegionId r = 0; r < ctx.region_count(); ++r)
            if (pred(ctx.region(r).length()))
                emit(r);
    };
    auto triangle_labellings = [&](auto&& emit) {
        regions_of_length([](int len) { return len == 3; }, [&](RegionId r) {
            for (auto& lab : cyclic_labellings(ctx.region(r)))
                emit(r, lab);
        });
    };

    switch (conf) {
    case 1:
    case 7:
    case 8:
    case 9:
        triangle_labellings([&](RegionId r, const std::vector<VertexId>& lab) { out.push_back({lab, {r}}); });
        break;
    case 2:
        triangle_labellings([&](RegionId r, const std::vector<VertexId>& lab) {
            for (VertexId x : g.rotation(lab[0]))
                if (x != lab[1] && x != lab[2])
                    out.push_back({{lab[0], lab[1], lab[2], x}, {r}});
        });
        break;
    case 3:
    case 5:
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [f1, f2] = ctx.faces().faces_of_edge(e);
            if (!ctx.region(f1).is_triangle() || !ctx.region(f2).is_triangle())
                continue;
            auto third = [&](RegionId r) {
                for (VertexId z : ctx.region(r).vertices)
                    if (!ctx.edge(e).has(z))
                        return z;
                return VertexId{-1};
            };
            for (auto [u, w] : {std::pair{ctx.edge(e).u, ctx.edge(e).v}, std::pair{ctx.edge(e).v, ctx.edge(e).u}})
                for (auto [t1, t2] : {std::pair{f1, f2}, std::pair{f2, f1}})
                    out.push_back({{u, third(t1), w, third(t2)}, {t1, t2}});
        }
        break;
    case 4:
    case 6:
        regions_of_length([](int len) { return len == 4; }, [&](RegionId r) {
            for (auto& lab : cyclic_labellings(ctx.region(r)))
                out.push_back({lab, {r}});
        });
        break;
    case 10:
    case 11:
    case 12:
        regions_of_length([](int len) { return len == 4; }, [&](RegionId s) {
            for (auto& lab : cyclic_labellings(ctx.region(s))) {
                EdgeId wx = g.edge_id(lab[2], lab[3]);
                RegionId t = ctx.other_region(wx, s);
                if (!ctx.region(t).is_triangle())
                    continue;
                for (VertexId y : ctx.region(t).vertices)
                    if (y != lab[2] && y != lab[3])
                        out.push_back({{lab[0], lab[1], lab[2], lab[3], y}, {s, t}});
            }
        });
        break;
    case 13:
        regions_of_length([](int len) { return len == 5; }, [&](RegionId r) {
            for (auto& lab : cyclic_labellings(ctx.region(r)))
                out.push_back({lab, {r}});
        });
        break;
    case 14:
    case 15:
    case 17:
    case 19:
        for (RegionId r = 0; r < ctx.region_count(); ++r)
            for (EdgeId e : ctx.region(r).edges)
                out.push_back({{ctx.edge(e).u, ctx.edge(e).v}, {r}});
        break;
    case 16:
    case 18:
        for (RegionId r = 0; r < ctx.region_count(); ++r)
            for (EdgeId e : ctx.region(r).edges) {
                RegionId t = ctx.other_region(e, r);
                if (!ctx.region(t).is_triangle())
                    continue;
                VertexId w = -1;
                for (VertexId z : ctx.region(t).vertices)
                    if (!ctx.edge(e).has(z))
                        w = z;
                out.push_back({{ctx.edge(e).u, ctx.edge(e).v, w}, {r, t}});
                out.push_back({{ctx.edge(e).v, ctx.edge(e).u, w}, {r, t}});
            }
        break;
    default:
        break;
    }
    return out;
}

void require_d(const DTarget& t)
{
    if (t.d() != config_d)
        throw Error(ErrorCode::UnsupportedD, "configurations are defined for d=8, got d=" + std::to_string(t.d()));
}

void require_conf(int conf)
{
    if (conf < 1 || conf > config_count)
        throw Error(ErrorCode::InvalidArgument, "configuration index " + std::to_string(conf) + " out of range");
}

auto placement_of(const ConfigMatch& match) -> std::optional<Placement>
{
    auto names = vertex_names(match.conf);
    if (names.size() != match.vertices.size())
        return std::nullopt;
    Placement p;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (match.vertices[i].first != names[i])
            return std::nullopt;
        p.vertices.push_back(match.vertices[i].second);
    }
    p.regions = match.regions;
    return p;
}

}  // namespace

auto vertex_names(int conf) -> std::vector<std::string>
{
    require_conf(conf);
    switch (conf) {
    case 1:
    case 7:
    case 8:
    case 9:
    case 16:
    case 18: return {"u", "v", "w"};
    case 2:
    case 3:
    case 4:
    case 5:
    case 6: return {"u", "v", "w", "x"};
    case 10:
    case 11:
    case 12: return {"u", "v", "w", "x", "y"};
    case 13: return {"v1", "v2", "v3", "v4", "v5"};
    default: return {"a", "b"};
    }
}

auto ConfigMatch::vertex_tuple() const -> std::vector<VertexId>
{
    std::vector<VertexId> out;
    for (const auto& [name, v] : vertices)
        out.push_back(v);
    return out;
}

auto ConfigMatch::vertex(const std::string& name) const -> VertexId
{
    for (const auto& [n, v] : vertices)
        if (n == name)
            return v;
    throw Error(ErrorCode::InvalidArgument, "no vertex named " + name);
}

auto detect(const TargetContext& ctx, int conf) -> std::vector<ConfigMatch>
{
    require_d(ctx.target());
    require_conf(conf);
    Evaluator eval(ctx);
    std::map<Placement, std::vector<std::string>> found;
    std::vector<std::string> facts;
    for (const auto& p : candidates(ctx, conf)) {
        if (!eval.run(conf, p, facts))
            continue;
        auto rep = canonical(conf, p);
        if (found.contains(rep))
            continue;
        if (rep == p) {
            found.emplace(rep, facts);
        } else {
            std::vector<std::string> rep_facts;
            eval.run(conf, rep, rep_facts);
            found.emplace(rep, std::move(rep_facts));
        }
    }
    auto names = vertex_names(conf);
    std::vector<ConfigMatch> out;
    for (auto& [p, f] : found) {
        ConfigMatch match;
        match.conf = conf;
        for (std::size_t i = 0; i < names.size(); ++i)
            match.vertices.emplace_back(names[i], p.vertices[i]);
        match.regions = p.regions;
        match.satisfied = std::move(f);
        out.push_back(std::move(match));
    }
    return out;
}

auto detect(const DTarget& t, int conf) -> std::vector<ConfigMatch>
{
    require_d(t);
    return detect(TargetContext(t), conf);
}

auto detect_all(const DTarget& t) -> std::vector<ConfigMatch>
{
    require_d(t);
    TargetContext ctx(t);
    std::vector<ConfigMatch> out;
    for (int k = 1; k <= config_count; ++k) {
        auto found = detect(ctx, k);
        out.insert(out.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
    return out;
}

auto verify_match(const TargetContext& ctx, const ConfigMatch& match) -> bool
{
    if (match.conf < 1 || match.conf > config_count)
        return false;
    auto p = placement_of(match);
    if (!p)
        return false;
    std::vector<std::string> facts;
    return Evaluator(ctx).run(match.conf, *p, facts);
}

auto verify_match(const DTarget& t, const ConfigMatch& match) -> bool
{
    require_d(t);
    return verify_match(TargetContext(t), match);
}

// ---------------------------------------------------------------------------
// Primality

auto witness_kind(const PrimalityWitness& w) -> std::string
{
    struct Namer {
        auto operator()(const ZeroMultEdge&) const -> std::string { return "ZeroMultEdge"; }
        auto operator()(const TooFewVertices&) const -> std::string { return "TooFewVertices"; }
        auto operator()(const CutViolation&) const -> std::string { return "CutViolation"; }
        auto operator()(const NotThreeConnected&) const -> std::string { return "NotThreeConnected"; }
        auto operator()(const MultiplicityOver6&) const -> std::string { return "MultiplicityOver6"; }
        auto operator()(const ConfigMatch& m) const -> std::string { return "Conf(" + std::to_string(m.conf) + ")"; }
    };
    return std::visit(Namer{}, w);
}

auto is_prime(const DTarget& t, int cut_cap) -> PrimalityVerdict
{
    require_d(t);
    for (EdgeId e = 0; e < t.edge_count(); ++e)
        if (t.mult(e) == 0)
            return {false, ZeroMultEdge{e}};
    if (t.vertex_count() < 6)
        return {false, TooFewVertices{t.vertex_count()}};
    if (auto cut = strengthened_cut_check(t, cut_cap))
        return {false, CutViolation{*cut}};
    if (int level = connectivity_level(t.graph()); level < 3)
        return {false, NotThreeConnected{level}};
    for (EdgeId e = 0; e < t.edge_count(); ++e)
        if (t.mult(e) > 6)
            return {false, MultiplicityOver6{e}};
    TargetContext ctx(t);
    for (int k = 1; k <= config_count; ++k) {
        auto found = detect(ctx, k);
        if (!found.empty())
            return {false, std::move(found.front())};
    }
    return {true, std::nullopt};
}

auto recheck_witness(const DTarget& t, const PrimalityWitness& w) -> bool
{
    struct Checker {
        const DTarget& t;
        auto operator()(const ZeroMultEdge& z) const -> bool
        {
            return z.edge >= 0 && z.edge < t.edge_count() && t.mult(z.edge) == 0;
        }
        auto operator()(const TooFewVertices& f) const -> bool
        {
            return f.vertices == t.vertex_count() && t.vertex_count() < 6;
        }
        auto operator()(const CutViolation& c) const -> bool
        {
            int n = t.vertex_count();
            int size = static_cast<int>(c.cut.set.size());
            return size % 2 == 1 && size != 1 && n - size != 1 && cut_value(t, c.cut.set) == c.cut.value &&
                   c.cut.value < config_d + 2;
        }
        auto operator()(const NotThreeConnected& c) const -> bool
        {
            return connectivity_level(t.graph()) == c.level && c.level < 3;
        }
        auto operator()(const MultiplicityOver6& m) const -> bool
        {
            return m.edge >= 0 && m.edge < t.edge_count() && t.mult(m.edge) > 6;
        }
        auto operator()(const ConfigMatch& m) const -> bool { return verify_match(t, m); }
    };
    return std::visit(Checker{t}, w);
}

}  // namespace planarcol
