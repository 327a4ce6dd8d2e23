#include "fixtures.hpp"

#include "planarcol/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#ifndef PLANARCOL_FIXTURE_DIR
#error "PLANARCOL_FIXTURE_DIR must point at data/fixtures"
#endif

namespace fixtures {

using planarcol::Edge;
using planarcol::RotationGraph;

auto with_mults(const RotationGraph& g, int d, const std::function<int(Edge)>& rule) -> DTarget
{
    std::vector<int> m;
    for (const Edge& e : g.edges())
        m.push_back(rule(e));
    DTarget t(g, d, m);
    // A fixture that is not a valid d-target would silently test nothing.
    if (auto v = validate(t); !v.ok())
        throw std::logic_error("invalid fixture: " + v.violations.front().kind + " at " +
                               v.violations.front().location);
    return t;
}

namespace {

// Triangular prism with the same rule on both triangles.
auto mirrored_prism(int m01, int m12, int m02, int v0, int v1, int v2) -> DTarget
{
    return with_mults(planarcol::prism_graph(3), 8, [&](Edge e) {
        int a = e.u % 3;
        int b = e.v % 3;
        if (e.v - e.u == 3)
            return a == 0 ? v0 : a == 1 ? v1 : v2;
        if (std::min(a, b) == 0 && std::max(a, b) == 1)
            return m01;
        if (std::min(a, b) == 1 && std::max(a, b) == 2)
            return m12;
        return m02;
    });
}

// Edge index along a k-cycle: i for the edge joining i and i+1.
auto ring_index(int a, int b, int k) -> int
{
    return (b - a + k) % k == 1 ? a : b;
}

// 10-prism: ring[i] on both cycles, spoke i filling vertex i to 8.
auto ring_prism(const std::vector<int>& ring) -> DTarget
{
    int k = static_cast<int>(ring.size());
    return with_mults(planarcol::prism_graph(k), 8, [&](Edge e) {
        if (e.v - e.u == k) {
            int i = e.u;
            return 8 - ring[(i + k - 1) % k] - ring[i];
        }
        return ring[ring_index(e.u % k, e.v % k, k)];
    });
}

}  // namespace

auto door_prism() -> DTarget
{
    return mirrored_prism(1, 3, 3, 4, 4, 2);
}

auto alternating_ten_prism() -> DTarget
{
    return ring_prism({1, 3, 1, 3, 1, 3, 1, 3, 1, 3});
}

auto beta_half_prism() -> DTarget
{
    return ring_prism({1, 3, 1, 3, 1, 3, 1, 4, 3, 3});
}

auto gamma_square_prism() -> DTarget
{
    return mirrored_prism(3, 2, 2, 3, 3, 4);
}

auto pinched_ring() -> DTarget
{
    // Vertex 0 is the pinch, 1..9 lie on the outer circle and 10..18 on a
    // concentric inner circle. The inner ring also runs through vertex 0, so
    // it is star-shaped about the origin and the radial spokes stay planar.
    std::vector<std::pair<double, double>> pts(19);
    auto at = [](double cx, double cy, double r, int i) {
        double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * i / 10.0;
        return std::pair{cx + r * std::cos(angle), cy + r * std::sin(angle)};
    };
    pts[0] = {0.0, -3.0};
    for (int i = 1; i <= 9; ++i) {
        pts[i] = at(0, 0, 3, i);
        pts[9 + i] = at(0, 0, 1.5, i);
    }
    auto outer = [](int i) { return i % 10; };
    auto inner = [](int i) { return i % 10 == 0 ? 0 : 9 + i % 10; };
    std::vector<Edge> edges;
    auto add = [&](int a, int b) { edges.push_back({std::min(a, b), std::max(a, b)}); };
    for (int i = 0; i < 10; ++i) {
        add(outer(i), outer(i + 1));
        add(inner(i), inner(i + 1));
    }
    for (int i = 1; i <= 9; ++i)
        add(outer(i), inner(i));
    auto g = RotationGraph::from_coordinates(pts, edges);

    // Ring edge i -- i+1 carries ring[i] on both circles, spoke i carries
    // spoke[i]. Every vertex sums to 8; the rings hold four 1-edges each,
    // facing 1-edges across their squares, so both 10-gons have four doors.
    const int ring[10] = {2, 5, 1, 4, 1, 4, 1, 4, 1, 2};
    const int spoke[10] = {0, 1, 2, 3, 3, 3, 3, 3, 3, 5};
    return with_mults(g, 8, [&](Edge e) {
        for (int i = 0; i < 10; ++i)
            if (e == Edge{std::min(outer(i), outer(i + 1)), std::max(outer(i), outer(i + 1))} ||
                e == Edge{std::min(inner(i), inner(i + 1)), std::max(inner(i), inner(i + 1))})
                return ring[i];
        for (int i = 1; i <= 9; ++i)
            if (e == Edge{outer(i), inner(i)})
                return spoke[i];
        return -1;
    });
}

auto hexagonal_prism() -> DTarget
{
    return with_mults(planarcol::prism_graph(6), 8, [](Edge e) { return e.v - e.u == 6 ? 2 : 3; });
}

auto spoke_cocycle_instance() -> CocycleInstance
{
    const int k = 5;
    auto g = planarcol::prism_graph(k);
    auto id = [&](int a, int b) { return g.edge_id(a, b); };

    planarcol::Matching spokes;
    for (int i = 0; i < k; ++i)
        spokes.push_back(id(i, i + k));
    auto single = [&](int i) {
        planarcol::Matching m{id(i, i + k)};
        for (int step : {1, 3}) {
            int a = (i + step) % k;
            int b = (i + step + 1) % k;
            m.push_back(id(a, b));
            m.push_back(id(a + k, b + k));
        }
        std::sort(m.begin(), m.end());
        return m;
    };
    std::sort(spokes.begin(), spokes.end());

    planarcol::EdgeColouring c;
    c.matchings = {spokes, single(0), single(1), single(2), single(3), single(4), single(0), single(1)};
    c.coverage.assign(g.edge_count(), 0);
    for (const auto& m : c.matchings)
        for (auto e : m)
            ++c.coverage[e];
    DTarget t(g, 8, c.coverage);
    // uv = 0-5 and xy = 1-6 are spokes; xu = 0-1 and vy = 5-6 are ring edges.
    return {t, c, {1, 0, 5, 6}, {0, 1, 2, 3, 4}};
}

auto load_fixture(const std::string& name) -> DTarget
{
    std::ifstream in(std::string(PLANARCOL_FIXTURE_DIR) + "/" + name + ".dtarget");
    if (!in)
        throw std::runtime_error("missing fixture " + name);
    std::stringstream buf;
    buf << in.rdbuf();
    return planarcol::parse_dtarget(buf.str());
}

}  // namespace fixtures
