#include "planarcol/switching.hpp"

#include <algorithm>
#include <map>

namespace planarcol {

namespace {

auto mult_table(const DTarget& t) -> std::vector<std::pair<Edge, int>>
{
    std::vector<std::pair<Edge, int>> out;
    for (EdgeId e = 0; e < t.edge_count(); ++e)
        out.emplace_back(t.graph().edge(e), t.mult(e));
    return out;
}

auto edge_name(VertexId a, VertexId b) -> std::string
{
    return std::to_string(a) + "-" + std::to_string(b);
}

}  // namespace

auto score_sequence(const DTarget& t) -> ScoreSequence
{
    ScoreSequence s;
    s.counts.assign(t.d() + 1, 0);
    for (int m : t.mults()) {
        if (m > t.d())
            throw Error(ErrorCode::InvalidArgument, "multiplicity " + std::to_string(m) + " exceeds d");
        ++s.counts[m];
    }
    return s;
}

auto is_smaller(int a_vertices, const ScoreSequence& a, int b_vertices, const ScoreSequence& b) -> bool
{
    if (a.d() != b.d())
        throw Error(ErrorCode::MismatchedD, "d=" + std::to_string(a.d()) + " vs d=" + std::to_string(b.d()));
    if (a_vertices != b_vertices)
        return a_vertices < b_vertices;
    for (int i = a.d(); i >= 1; --i)
        if (a.counts[i] != b.counts[i])
            return a.counts[i] > b.counts[i];
    return a.counts[0] < b.counts[0];
}

auto is_smaller(const DTarget& a, const DTarget& b) -> bool
{
    if (a.d() != b.d())
        throw Error(ErrorCode::MismatchedD, "d=" + std::to_string(a.d()) + " vs d=" + std::to_string(b.d()));
    return is_smaller(a.vertex_count(), score_sequence(a), b.vertex_count(), score_sequence(b));
}

auto switch_square(const DTarget& t, SquareMove mv) -> DTarget
{
    const auto& g = t.graph();
    std::vector<VertexId> cyc{mv.u, mv.v, mv.w, mv.x};
    auto sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::NotAFourCycle, "repeated vertex");
    for (VertexId v : cyc)
        if (v < 0 || v >= t.vertex_count())
            throw Error(ErrorCode::NotAFourCycle, "unknown vertex " + std::to_string(v));
    for (int i = 0; i < 4; ++i)
        if (!g.adjacent(cyc[i], cyc[(i + 1) % 4]))
            throw Error(ErrorCode::NotAFourCycle, edge_name(cyc[i], cyc[(i + 1) % 4]) + " is not an edge");

    EdgeId uv = g.edge_id(mv.u, mv.v);
    EdgeId vw = g.edge_id(mv.v, mv.w);
    EdgeId wx = g.edge_id(mv.w, mv.x);
    EdgeId xu = g.edge_id(mv.x, mv.u);
    if (t.mult(uv) < 1 || t.mult(wx) < 1)
        throw Error(ErrorCode::WouldGoNegative, "m(" + edge_name(mv.u, mv.v) + ") = " + std::to_string(t.mult(uv)) +
                                                    ", m(" + edge_name(mv.w, mv.x) + ") = " + std::to_string(t.mult(wx)));
    std::vector<int> m(t.mults().begin(), t.mults().end());
    --m[uv];
    ++m[vw];
    --m[wx];
    ++m[xu];
    return DTarget(g, t.d(), std::move(m));
}

auto add_zero_edge(const DTarget& t, VertexId x, VertexId y) -> DTarget
{
    const auto& g = t.graph();
    if (x == y || x < 0 || y < 0 || x >= t.vertex_count() || y >= t.vertex_count())
        throw Error(ErrorCode::InvalidArgument, "need two distinct vertices");
    if (g.adjacent(x, y))
        return t;

    FaceStructure faces(g);
    for (const Region& r : faces.regions()) {
        auto len = static_cast<std::size_t>(r.length());
        auto at = [&](VertexId z) -> std::size_t {
            return static_cast<std::size_t>(std::find(r.vertices.begin(), r.vertices.end(), z) - r.vertices.begin());
        };
        std::size_t ix = at(x);
        std::size_t iy = at(y);
        if (ix == len || iy == len)
            continue;
        // Boundary predecessor of z on r is p with the dart (p, z) in r; the
        // region occupies the angle at z just before p in clockwise order,
        // so the new neighbour goes in front of p.
        auto rotations = g.rotations();
        auto insert = [&](VertexId z, std::size_t iz, VertexId other) {
            VertexId p = r.vertices[(iz + len - 1) % len];
            auto& rot = rotations[z];
            auto it = std::find(rot.begin(), rot.end(), p);
            rot.insert(it, other);
        };
        insert(x, ix, y);
        insert(y, iy, x);
        auto table = mult_table(t);
        table.push_back({Edge{std::min(x, y), std::max(x, y)}, 0});
        return make_dtarget(t.d(), std::move(rotations), table);
    }
    throw Error(ErrorCode::NoCommonRegion, std::to_string(x) + " and " + std::to_string(y) + " share no region");
}

auto switch_path(const DTarget& t, PathMove mv) -> DTarget
{
    const auto& g = t.graph();
    std::vector<VertexId> path{mv.x, mv.u, mv.v, mv.y};
    auto sorted = path;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error(ErrorCode::InvalidArgument, "path vertices must be distinct");
    for (int i = 0; i < 3; ++i)
        if (!g.adjacent(path[i], path[i + 1]))
            throw Error(ErrorCode::InvalidArgument, edge_name(path[i], path[i + 1]) + " is not an edge");
    if (t.mult(mv.x, mv.u) < 1 || t.mult(mv.v, mv.y) < 1)
        throw Error(ErrorCode::WouldGoNegative, "m(" + edge_name(mv.x, mv.u) + ") = " + std::to_string(t.mult(mv.x, mv.u)) +
                                                    ", m(" + edge_name(mv.v, mv.y) + ") = " +
                                                    std::to_string(t.mult(mv.v, mv.y)));
    auto closed = add_zero_edge(t, mv.x, mv.y);
    return switch_square(closed, SquareMove{mv.x, mv.u, mv.v, mv.y});
}

auto apply_move(const DTarget& t, const Move& move) -> DTarget
{
    return std::visit(
        [&](const auto& mv) -> DTarget {
            if constexpr (std::is_same_v<std::decay_t<decltype(mv)>, SquareMove>)
                return switch_square(t, mv);
            else
                return switch_path(t, mv);
        },
        move);
}

auto is_switchable(const DTarget& t, const Move& move) -> bool
{
    return is_smaller(apply_move(t, move), t);
}

auto heavy_triangles(const DTarget& t) -> std::vector<RegionId>
{
    std::vector<RegionId> out;
    FaceStructure faces(t.graph());
    for (const Region& r : faces.regions()) {
        if (!r.is_triangle())
            continue;
        int sum = 0;
        for (EdgeId e : r.edges)
            sum += t.mult(e);
        if (sum >= t.d())
            out.push_back(r.id);
    }
    return out;
}

}  // namespace planarcol
