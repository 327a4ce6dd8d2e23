#include "planarcol/planar_core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <queue>
#include <sstream>

namespace planarcol {

namespace {

auto parse_int(std::string_view token, int line_no) -> int
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw Error(ErrorCode::SyntaxError,
                    "line " + std::to_string(line_no) + ": expected integer, got '" + std::string(token) + "'");
    return value;
}

auto split_ws(std::string_view s) -> std::vector<std::string_view>
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

auto connected_without(const RotationGraph& g, std::uint64_t removed) -> bool
{
    int n = g.vertex_count();
    int start = -1;
    int remaining = 0;
    for (int v = 0; v < n; ++v)
        if (!((removed >> v) & 1U)) {
            ++remaining;
            if (start < 0)
                start = v;
        }
    if (remaining <= 1)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.rotation(v))
            if (!seen[w] && !((removed >> w) & 1U)) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == remaining;
}

}  // namespace

// ---------------------------------------------------------------- RotationGraph

auto RotationGraph::from_rotations(std::vector<std::vector<VertexId>> rotations) -> RotationGraph
{
    RotationGraph g;
    int n = static_cast<int>(rotations.size());
    g.lookup_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int v = 0; v < n; ++v) {
        for (VertexId w : rotations[v]) {
            if (w < 0 || w >= n)
                throw Error(ErrorCode::InvalidArgument,
                            "vertex " + std::to_string(v) + " lists unknown neighbour " + std::to_string(w));
            if (w == v)
                throw Error(ErrorCode::DuplicateNeighbour, "loop at vertex " + std::to_string(v));
            auto& slot = g.lookup_[static_cast<std::size_t>(v) * n + w];
            if (slot != -1)
                throw Error(ErrorCode::DuplicateNeighbour,
                            "vertex " + std::to_string(v) + " lists " + std::to_string(w) + " twice");
            slot = 0;
        }
    }
    for (int v = 0; v < n; ++v)
        for (VertexId w : rotations[v])
            if (g.lookup_[static_cast<std::size_t>(w) * n + v] == -1)
                throw Error(ErrorCode::AsymmetricRotation,
                            "vertex " + std::to_string(v) + " lists " + std::to_string(w) + " but not vice versa");

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.lookup_[static_cast<std::size_t>(u) * n + v] != -1) {
                auto id = static_cast<EdgeId>(g.edges_.size());
                g.edges_.push_back({u, v});
                g.lookup_[static_cast<std::size_t>(u) * n + v] = id;
                g.lookup_[static_cast<std::size_t>(v) * n + u] = id;
            }

    g.incident_.resize(n);
    for (int v = 0; v < n; ++v)
        for (VertexId w : rotations[v])
            g.incident_[v].push_back(g.lookup_[static_cast<std::size_t>(v) * n + w]);
    g.rotations_ = std::move(rotations);
    return g;
}

auto RotationGraph::from_coordinates(std::span<const std::pair<double, double>> points,
                                     std::span<const Edge> edges) -> RotationGraph
{
    int n = static_cast<int>(points.size());
    std::vector<std::vector<std::pair<double, VertexId>>> around(n);
    for (const auto& e : edges) {
        auto [ux, uy] = points[e.u];
        auto [vx, vy] = points[e.v];
        around[e.u].push_back({std::atan2(vy - uy, vx - ux), e.v});
        around[e.v].push_back({std::atan2(uy - vy, ux - vx), e.u});
    }
    std::vector<std::vector<VertexId>> rotations(n);
    for (int v = 0; v < n; ++v) {
        // decreasing angle is clockwise
        std::sort(around[v].begin(), around[v].end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        for (const auto& [angle, w] : around[v])
            rotations[v].push_back(w);
        auto lowest = std::min_element(rotations[v].begin(), rotations[v].end());
        std::rotate(rotations[v].begin(), lowest, rotations[v].end());
    }
    return from_rotations(std::move(rotations));
}

auto RotationGraph::edge_between(VertexId a, VertexId b) const -> std::optional<EdgeId>
{
    int n = vertex_count();
    if (a < 0 || b < 0 || a >= n || b >= n)
        return std::nullopt;
    EdgeId id = lookup_[static_cast<std::size_t>(a) * n + b];
    if (id < 0)
        return std::nullopt;
    return id;
}

auto RotationGraph::edge_id(VertexId a, VertexId b) const -> EdgeId
{
    auto id = edge_between(a, b);
    if (!id)
        throw Error(ErrorCode::InvalidArgument, std::to_string(a) + " and " + std::to_string(b) + " are not adjacent");
    return *id;
}

auto RotationGraph::position(VertexId v, VertexId w) const -> int
{
    const auto& rot = rotations_[v];
    auto it = std::find(rot.begin(), rot.end(), w);
    if (it == rot.end())
        throw Error(ErrorCode::InvalidArgument, std::to_string(w) + " is not a neighbour of " + std::to_string(v));
    return static_cast<int>(it - rot.begin());
}

auto RotationGraph::successor(VertexId v, VertexId w) const -> VertexId
{
    const auto& rot = rotations_[v];
    return rot[(position(v, w) + 1) % rot.size()];
}

auto RotationGraph::predecessor(VertexId v, VertexId w) const -> VertexId
{
    const auto& rot = rotations_[v];
    return rot[(position(v, w) + rot.size() - 1) % rot.size()];
}

// ---------------------------------------------------------------- Region / faces

auto Region::contains_edge(EdgeId e) const -> bool
{
    return std::find(edges.begin(), edges.end(), e) != edges.end();
}

auto Region::contains_vertex(VertexId v) const -> bool
{
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

FaceStructure::FaceStructure(const RotationGraph& graph) : graph_(graph)
{
    int n = graph_.vertex_count();
    // dart (v, rotation index) -> face
    std::vector<std::vector<RegionId>> dart_face(n);
    for (int v = 0; v < n; ++v)
        dart_face[v].assign(graph_.rotation(v).size(), -1);

    // Darts in lexicographic order (from, to), so every face starts at its
    // lowest dart and face ids are independent of rotation start points.
    std::vector<std::pair<VertexId, VertexId>> darts;
    for (int v = 0; v < n; ++v)
        for (VertexId w : graph_.rotation(v))
            darts.emplace_back(v, w);
    std::sort(darts.begin(), darts.end());

    for (auto [a, b] : darts) {
        if (dart_face[a][graph_.position(a, b)] != -1)
            continue;
        Region region;
        region.id = static_cast<RegionId>(regions_.size());
        VertexId from = a;
        VertexId to = b;
        while (dart_face[from][graph_.position(from, to)] == -1) {
            dart_face[from][graph_.position(from, to)] = region.id;
            region.vertices.push_back(from);
            region.edges.push_back(graph_.edge_id(from, to));
            VertexId next = graph_.predecessor(to, from);
            from = to;
            to = next;
        }
        regions_.push_back(std::move(region));
    }

    int euler = n - graph_.edge_count() + region_count();
    if (n == 0 || euler != 2)
        throw Error(ErrorCode::EulerViolation,
                    "V - E + F = " + std::to_string(euler) + " (V=" + std::to_string(n) +
                        ", E=" + std::to_string(graph_.edge_count()) + ", F=" + std::to_string(region_count()) + ")");

    edge_faces_.resize(graph_.edge_count());
    for (EdgeId e = 0; e < graph_.edge_count(); ++e) {
        const Edge& ed = graph_.edge(e);
        edge_faces_[e] = {dart_face[ed.u][graph_.position(ed.u, ed.v)], dart_face[ed.v][graph_.position(ed.v, ed.u)]};
    }
}

auto FaceStructure::face_of_dart(VertexId from, VertexId to) const -> RegionId
{
    EdgeId e = graph_.edge_id(from, to);
    return from < to ? edge_faces_[e].first : edge_faces_[e].second;
}

auto FaceStructure::two_sided() const -> bool
{
    return std::all_of(edge_faces_.begin(), edge_faces_.end(), [](const auto& p) { return p.first != p.second; });
}

// ---------------------------------------------------------------- DTarget

DTarget::DTarget(RotationGraph graph, int d, std::vector<int> mult)
    : graph_(std::move(graph)), d_(d), mult_(std::move(mult))
{
    if (static_cast<int>(mult_.size()) != graph_.edge_count())
        throw Error(ErrorCode::InvalidArgument, "multiplicity vector size does not match edge count");
    if (d_ <= 0)
        throw Error(ErrorCode::InvalidArgument, "d must be positive");
    for (EdgeId e = 0; e < graph_.edge_count(); ++e)
        if (mult_[e] < 0)
            throw Error(ErrorCode::NegativeMultiplicity,
                        "edge " + std::to_string(graph_.edge(e).u) + "-" + std::to_string(graph_.edge(e).v));
}

auto DTarget::load(VertexId v) const -> int
{
    int sum = 0;
    for (EdgeId e : graph_.incident(v))
        sum += mult_[e];
    return sum;
}

auto make_dtarget(int d, std::vector<std::vector<VertexId>> rotations,
                  const std::vector<std::pair<Edge, int>>& mult) -> DTarget
{
    auto graph = RotationGraph::from_rotations(std::move(rotations));
    std::vector<int> m(graph.edge_count(), -1);
    for (const auto& [edge, value] : mult) {
        auto id = graph.edge_between(edge.u, edge.v);
        if (!id)
            throw Error(ErrorCode::InvalidArgument,
                        "multiplicity given for non-edge " + std::to_string(edge.u) + "-" + std::to_string(edge.v));
        if (value < 0)
            throw Error(ErrorCode::NegativeMultiplicity,
                        "edge " + std::to_string(edge.u) + "-" + std::to_string(edge.v));
        m[*id] = value;
    }
    for (EdgeId e = 0; e < graph.edge_count(); ++e)
        if (m[e] < 0)
            throw Error(ErrorCode::MissingMultiplicity,
                        "edge " + std::to_string(graph.edge(e).u) + "-" + std::to_string(graph.edge(e).v));
    return DTarget(std::move(graph), d, std::move(m));
}

// ---------------------------------------------------------------- text format

auto parse_dtarget(std::string_view text) -> DTarget
{
    std::optional<int> d;
    std::map<int, std::vector<VertexId>> vertex_lines;
    std::map<std::pair<int, int>, std::pair<int, int>> mult_lines;  // pair -> (value, line)

    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty())
            continue;
        auto where = "line " + std::to_string(line_no);

        if (!d) {
            if (tokens.size() != 2 || tokens[0] != "dtarget" || !tokens[1].starts_with("d="))
                throw Error(ErrorCode::SyntaxError, where + ": expected header 'dtarget d=<int>'");
            d = parse_int(tokens[1].substr(2), line_no);
            if (*d <= 0)
                throw Error(ErrorCode::SyntaxError, where + ": d must be positive");
            continue;
        }
        if (tokens[0] == "vertex") {
            if (tokens.size() < 2 || !tokens[1].ends_with(':'))
                throw Error(ErrorCode::SyntaxError, where + ": expected 'vertex <id>: <neighbours>'");
            int id = parse_int(tokens[1].substr(0, tokens[1].size() - 1), line_no);
            if (id < 0)
                throw Error(ErrorCode::SyntaxError, where + ": negative vertex id");
            if (vertex_lines.contains(id))
                throw Error(ErrorCode::SyntaxError, where + ": vertex " + std::to_string(id) + " declared twice");
            std::vector<VertexId> rot;
            for (std::size_t i = 2; i < tokens.size(); ++i)
                rot.push_back(parse_int(tokens[i], line_no));
            vertex_lines.emplace(id, std::move(rot));
        } else if (tokens[0] == "mult") {
            if (tokens.size() != 4)
                throw Error(ErrorCode::SyntaxError, where + ": expected 'mult <u> <v> <m>'");
            int u = parse_int(tokens[1], line_no);
            int v = parse_int(tokens[2], line_no);
            int m = parse_int(tokens[3], line_no);
            if (m < 0)
                throw Error(ErrorCode::NegativeMultiplicity, where + ": edge " + std::to_string(u) + "-" + std::to_string(v));
            auto key = std::minmax(u, v);
            if (!mult_lines.emplace(std::pair{key.first, key.second}, std::pair{m, line_no}).second)
                throw Error(ErrorCode::SyntaxError, where + ": duplicate mult line for " + std::to_string(u) + "-" + std::to_string(v));
        } else {
            throw Error(ErrorCode::SyntaxError, where + ": unknown directive '" + std::string(tokens[0]) + "'");
        }
    }
    if (!d)
        throw Error(ErrorCode::SyntaxError, "missing header");
    if (vertex_lines.empty())
        throw Error(ErrorCode::SyntaxError, "no vertices");

    int n = static_cast<int>(vertex_lines.size());
    std::vector<std::vector<VertexId>> rotations(n);
    for (auto& [id, rot] : vertex_lines) {
        if (id >= n)
            throw Error(ErrorCode::SyntaxError, "vertex ids must be 0.." + std::to_string(n - 1));
        for (VertexId w : rot)
            if (w < 0 || w >= n)
                throw Error(ErrorCode::SyntaxError,
                            "vertex " + std::to_string(id) + " lists unknown neighbour " + std::to_string(w));
        rotations[id] = std::move(rot);
    }
    auto graph = RotationGraph::from_rotations(std::move(rotations));

    std::vector<int> mult(graph.edge_count(), -1);
    for (const auto& [key, entry] : mult_lines) {
        auto id = graph.edge_between(key.first, key.second);
        if (!id)
            throw Error(ErrorCode::SyntaxError, "line " + std::to_string(entry.second) + ": " +
                                                    std::to_string(key.first) + "-" + std::to_string(key.second) +
                                                    " is not an edge");
        mult[*id] = entry.first;
    }
    for (EdgeId e = 0; e < graph.edge_count(); ++e)
        if (mult[e] < 0)
            throw Error(ErrorCode::MissingMultiplicity,
                        "edge " + std::to_string(graph.edge(e).u) + "-" + std::to_string(graph.edge(e).v));
    return DTarget(std::move(graph), *d, std::move(mult));
}

auto serialize_dtarget(const DTarget& t) -> std::string
{
    std::ostringstream out;
    out << "dtarget d=" << t.d() << '\n';
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        out << "vertex " << v << ':';
        for (VertexId w : t.graph().rotation(v))
            out << ' ' << w;
        out << '\n';
    }
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        const Edge& ed = t.graph().edge(e);
        out << "mult " << ed.u << ' ' << ed.v << ' ' << t.mult(e) << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------- queries

auto regions(const DTarget& t) -> std::vector<Region>
{
    FaceStructure faces(t.graph());
    return {faces.regions().begin(), faces.regions().end()};
}

auto region_pair(const DTarget& t, EdgeId e) -> std::pair<Region, Region>
{
    FaceStructure faces(t.graph());
    auto [a, b] = faces.faces_of_edge(e);
    if (a == b)
        throw Error(ErrorCode::NotTwoConnected,
                    "edge " + std::to_string(t.graph().edge(e).u) + "-" + std::to_string(t.graph().edge(e).v) +
                        " borders region " + std::to_string(a) + " on both sides");
    if (a > b)
        std::swap(a, b);
    return {faces.region(a), faces.region(b)};
}

auto connectivity_level(const RotationGraph& g) -> int
{
    int n = g.vertex_count();
    if (n > 64)
        throw Error(ErrorCode::TooLarge, "connectivity check is limited to 64 vertices");
    if (!connected_without(g, 0))
        return 0;
    // Removing k vertices must leave at least two for a separation to count.
    for (int v = 0; v < n; ++v)
        if (n - 1 >= 2 && !connected_without(g, std::uint64_t{1} << v))
            return 1;
    if (n <= 2)
        return n - 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (n - 2 >= 2 && !connected_without(g, (std::uint64_t{1} << a) | (std::uint64_t{1} << b)))
                return 2;
    return n <= 3 ? n - 1 : 3;
}

auto validate(const DTarget& t) -> ValidationReport
{
    ValidationReport report;
    report.degree_ok = true;
    for (VertexId v = 0; v < t.vertex_count(); ++v) {
        int load = t.load(v);
        if (load != t.d()) {
            report.degree_ok = false;
            report.violations.push_back(
                {"degree", "vertex " + std::to_string(v) + ": m(delta(v)) = " + std::to_string(load) +
                               " != " + std::to_string(t.d())});
        }
    }
    try {
        FaceStructure faces(t.graph());
        report.euler_ok = true;
    } catch (const Error& err) {
        report.euler_ok = false;
        report.violations.push_back({"euler", err.what()});
    }
    report.connectivity_level = connectivity_level(t.graph());
    return report;
}

}  // namespace planarcol
