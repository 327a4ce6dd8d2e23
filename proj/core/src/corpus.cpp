#include "planarcol/corpus.hpp"

#include "planarcol/cuts.hpp"

#include <cmath>
#include <numbers>

namespace planarcol {

namespace {

using Rotations = std::vector<std::vector<VertexId>>;

const Rotations k4_rotations{{1, 3, 2}, {0, 2, 3}, {0, 3, 1}, {0, 1, 2}};

const Rotations octahedron_rotations{{1, 4, 3, 2}, {0, 2, 5, 4}, {0, 3, 5, 1},
                                     {0, 4, 5, 2}, {0, 1, 5, 3}, {1, 2, 3, 4}};

const Rotations prism_rotations{{1, 3, 2}, {0, 2, 4}, {0, 5, 1}, {0, 4, 5}, {1, 5, 3}, {2, 3, 4}};

const Rotations cube_rotations{{1, 4, 2}, {0, 3, 5}, {0, 6, 3}, {1, 2, 7},
                               {0, 5, 6}, {1, 7, 4}, {2, 4, 7}, {3, 6, 5}};

const Rotations pentagonal_prism_rotations{{1, 5, 4}, {0, 2, 6}, {1, 3, 7}, {2, 4, 8}, {0, 9, 3},
                                           {0, 6, 9}, {1, 7, 5}, {2, 8, 6}, {3, 9, 7}, {4, 5, 8}};

auto uniform(const RotationGraph& g, int d, const std::function<int(const Edge&)>& pick) -> DTarget
{
    std::vector<int> m;
    for (const Edge& e : g.edges())
        m.push_back(pick(e));
    return DTarget(g, d, std::move(m));
}

class Enumerator {
public:
    Enumerator(const RotationGraph& g, int d, int min_mult, const std::function<bool(const DTarget&)>& visit)
        : g_(g), d_(d), min_(min_mult), visit_(visit), residual_(g.vertex_count(), d), mult_(g.edge_count(), 0),
          last_(g.vertex_count(), -1)
    {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            last_[g.edge(e).u] = e;
            last_[g.edge(e).v] = e;
        }
    }

    void run()
    {
        // A vertex with no edges can never reach its target.
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            if (last_[v] < 0 && d_ != 0)
                return;
        step(0);
    }

private:
    auto step(EdgeId e) -> bool
    {
        if (e == g_.edge_count())
            return visit_(DTarget(g_, d_, mult_));
        const Edge& ed = g_.edge(e);
        int lo = min_;
        int hi = std::min(residual_[ed.u], residual_[ed.v]);
        // The last edge at a vertex must absorb all of its remaining demand.
        if (last_[ed.u] == e)
            lo = std::max(lo, residual_[ed.u]);
        if (last_[ed.v] == e)
            lo = std::max(lo, residual_[ed.v]);
        if (last_[ed.u] == e)
            hi = std::min(hi, residual_[ed.u]);
        if (last_[ed.v] == e)
            hi = std::min(hi, residual_[ed.v]);
        for (int value = lo; value <= hi; ++value) {
            mult_[e] = value;
            residual_[ed.u] -= value;
            residual_[ed.v] -= value;
            bool go_on = step(e + 1);
            residual_[ed.u] += value;
            residual_[ed.v] += value;
            if (!go_on)
                return false;
        }
        mult_[e] = 0;
        return true;
    }

    const RotationGraph& g_;
    int d_;
    int min_;
    const std::function<bool(const DTarget&)>& visit_;
    std::vector<int> residual_;
    std::vector<int> mult_;
    std::vector<EdgeId> last_;
};

}  // namespace

auto standard_bases() -> std::vector<NamedBase>
{
    return {
        {"k4", RotationGraph::from_rotations(k4_rotations)},
        {"octahedron", RotationGraph::from_rotations(octahedron_rotations)},
        {"prism", RotationGraph::from_rotations(prism_rotations)},
        {"cube", RotationGraph::from_rotations(cube_rotations)},
        {"pentagonal_prism", RotationGraph::from_rotations(pentagonal_prism_rotations)},
    };
}

auto base_graph(const std::string& name) -> RotationGraph
{
    for (auto& base : standard_bases())
        if (base.name == name)
            return base.graph;
    throw Error(ErrorCode::InvalidArgument, "unknown base graph '" + name + "'");
}

auto prism_graph(int k) -> RotationGraph
{
    if (k < 3)
        throw Error(ErrorCode::InvalidArgument, "prism needs k >= 3");
    std::vector<std::pair<double, double>> points;
    for (int ring = 0; ring < 2; ++ring) {
        double radius = ring == 0 ? 2.0 : 1.0;
        for (int i = 0; i < k; ++i) {
            double angle = 2.0 * std::numbers::pi * i / k;
            points.emplace_back(radius * std::cos(angle), radius * std::sin(angle));
        }
    }
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        int j = (i + 1) % k;
        edges.push_back({std::min(i, j), std::max(i, j)});
        edges.push_back({std::min(i, j) + k, std::max(i, j) + k});
        edges.push_back({i, i + k});
    }
    return RotationGraph::from_coordinates(points, edges);
}

auto k4_fixture() -> DTarget
{
    return uniform(base_graph("k4"), 8, [](const Edge& e) {
        bool heavy = (e.u == 0 && e.v == 1) || (e.u == 2 && e.v == 3);
        return heavy ? 4 : 2;
    });
}

auto octahedron_uniform(int m) -> DTarget
{
    return uniform(base_graph("octahedron"), 4 * m, [m](const Edge&) { return m; });
}

auto prism_target(int triangle_mult, int vertical_mult) -> DTarget
{
    return uniform(base_graph("prism"), 2 * triangle_mult + vertical_mult, [&](const Edge& e) {
        return e.v - e.u == 3 ? vertical_mult : triangle_mult;
    });
}

void for_each_multiplicity(const RotationGraph& g, int d, const std::function<bool(const DTarget&)>& visit,
                           int min_mult)
{
    if (g.edge_count() > max_enumeration_edges)
        throw Error(ErrorCode::TooLarge, std::to_string(g.edge_count()) + " edges exceeds enumeration cap " +
                                             std::to_string(max_enumeration_edges));
    if (d < 0 || min_mult < 0)
        throw Error(ErrorCode::InvalidArgument, "d and min_mult must be non-negative");
    Enumerator(g, d, min_mult, visit).run();
}

auto enumerate_multiplicities(const RotationGraph& g, int d, int min_mult) -> std::vector<DTarget>
{
    std::vector<DTarget> out;
    for_each_multiplicity(
        g, d,
        [&](const DTarget& t) {
            out.push_back(t);
            return true;
        },
        min_mult);
    return out;
}

auto default_corpus_spec() -> CorpusSpec
{
    CorpusSpec spec;
    spec.bases = standard_bases();
    return spec;
}

auto build_corpus(const CorpusSpec& spec) -> std::vector<CorpusEntry>
{
    std::vector<CorpusEntry> out;
    for (const auto& base : spec.bases) {
        if (base.graph.vertex_count() > spec.max_vertices)
            continue;
        int ordinal = 0;
        for_each_multiplicity(
            base.graph, spec.d,
            [&](const DTarget& t) {
                int index = ordinal++;
                if (spec.require_valid && !validate(t).ok())
                    return true;
                if (spec.require_oddly_connected &&
                    (t.vertex_count() % 2 != 0 || !is_oddly_connected(t, std::max(default_cut_cap, t.vertex_count()))))
                    return true;
                out.push_back({base.name, index, t});
                return true;
            },
            spec.min_mult);
    }
    return out;
}

}  // namespace planarcol
