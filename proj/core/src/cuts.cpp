#include "planarcol/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace planarcol {

namespace {

using Mask = std::uint64_t;

struct WeightedEdge {
    int u, v, m;
};

auto weighted_edges(const DTarget& t) -> std::vector<WeightedEdge>
{
    std::vector<WeightedEdge> out;
    for (EdgeId e = 0; e < t.edge_count(); ++e)
        out.push_back({t.graph().edge(e).u, t.graph().edge(e).v, t.mult(e)});
    return out;
}

auto mask_cut(const std::vector<WeightedEdge>& edges, Mask x) -> int
{
    int total = 0;
    for (const auto& e : edges)
        if (((x >> e.u) & 1U) != ((x >> e.v) & 1U))
            total += e.m;
    return total;
}

// Lexicographic order of the sorted vertex lists.
auto mask_less(Mask a, Mask b) -> bool
{
    if (a == b)
        return false;
    int low = std::countr_zero(a ^ b);
    if ((a >> low) & 1U)
        return (b >> (low + 1)) != 0;
    return (a >> (low + 1)) == 0;
}

auto to_set(Mask x, int n) -> VertexSet
{
    VertexSet s;
    for (int v = 0; v < n; ++v)
        if ((x >> v) & 1U)
            s.push_back(v);
    return s;
}

void check_cut_preconditions(const DTarget& t, int cap)
{
    int n = t.vertex_count();
    if (n % 2 != 0)
        throw Error(ErrorCode::OddVertexCount, std::to_string(n) + " vertices");
    if (n > cap || n > 62)
        throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds cut cap " + std::to_string(cap));
}

auto membership(int n, const VertexSet& set) -> std::vector<char>
{
    std::vector<char> in(n, 0);
    for (VertexId v : set) {
        if (v < 0 || v >= n)
            throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
        in[v] = 1;
    }
    return in;
}

// Components of the subgraph induced by vertices with in[v] == side.
auto side_components(const RotationGraph& g, const std::vector<char>& in, char side, std::vector<int>& comp)
    -> int
{
    int count = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        if (in[s] != side || comp[s] >= 0)
            continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId a = stack.back();
            stack.pop_back();
            for (VertexId b : g.rotation(a))
                if (in[b] == side && comp[b] < 0) {
                    comp[b] = count;
                    stack.push_back(b);
                }
        }
        ++count;
    }
    return count;
}

auto normalise(VertexSet set) -> VertexSet
{
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

}  // namespace

auto cut_value(const DTarget& t, const VertexSet& set) -> int
{
    auto in = membership(t.vertex_count(), set);
    int total = 0;
    for (EdgeId e = 0; e < t.edge_count(); ++e) {
        const Edge& ed = t.graph().edge(e);
        if (in[ed.u] != in[ed.v])
            total += t.mult(e);
    }
    return total;
}

auto cut_edges(const RotationGraph& g, const VertexSet& set) -> std::vector<EdgeId>
{
    auto in = membership(g.vertex_count(), set);
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (in[g.edge(e).u] != in[g.edge(e).v])
            out.push_back(e);
    return out;
}

auto min_odd_cut(const DTarget& t, int cap) -> CutWitness
{
    check_cut_preconditions(t, cap);
    int n = t.vertex_count();
    auto edges = weighted_edges(t);
    // X and its complement have the same cut; the one holding vertex 0 is
    // lexicographically smaller, so only those are enumerated.
    Mask best = 1;
    int best_value = mask_cut(edges, best);
    for (Mask rest = 1; rest < (Mask{1} << (n - 1)); ++rest) {
        Mask x = (rest << 1) | 1U;
        if (std::popcount(x) % 2 == 0)
            continue;
        int value = mask_cut(edges, x);
        if (value < best_value || (value == best_value && mask_less(x, best))) {
            best = x;
            best_value = value;
        }
    }
    return {to_set(best, n), best_value, 1};
}

auto is_oddly_connected(const DTarget& t, int cap) -> bool
{
    return min_odd_cut(t, cap).value >= t.d();
}

auto strengthened_cut_check(const DTarget& t, int cap) -> std::optional<CutWitness>
{
    check_cut_preconditions(t, cap);
    int n = t.vertex_count();
    auto edges = weighted_edges(t);
    std::optional<Mask> best;
    int best_value = 0;
    for (Mask rest = 0; rest < (Mask{1} << (n - 1)); ++rest) {
        Mask x = (rest << 1) | 1U;
        int size = std::popcount(x);
        if (size % 2 == 0 || size == 1 || size == n - 1)
            continue;
        int value = mask_cut(edges, x);
        if (value >= t.d() + 2)
            continue;
        if (!best || value < best_value || (value == best_value && mask_less(x, *best))) {
            best = x;
            best_value = value;
        }
    }
    if (!best)
        return std::nullopt;
    return CutWitness{to_set(*best, n), best_value, 1};
}

auto is_bond(const RotationGraph& g, const VertexSet& set) -> bool
{
    int n = g.vertex_count();
    auto in = membership(n, set);
    int inside = static_cast<int>(std::count(in.begin(), in.end(), 1));
    if (inside == 0 || inside == n)
        return false;
    std::vector<int> comp(n, -1);
    return side_components(g, in, 1, comp) == 1 && side_components(g, in, 0, comp) == 1;
}

auto bond_decomposition(const DTarget& t, const VertexSet& set) -> std::vector<VertexSet>
{
    const auto& g = t.graph();
    int n = g.vertex_count();
    auto in = membership(n, set);
    std::vector<int> comp(n, -1);
    int inner = side_components(g, in, 1, comp);
    std::vector<int> outer_comp(n, -1);
    int outer = side_components(g, in, 0, outer_comp);
    if (inner == 0 || outer == 0)
        return {};

    // Bipartite component graph: nodes 0..inner-1 are components of G[X],
    // inner..inner+outer-1 those of G[V \ X].
    int nodes = inner + outer;
    auto node_of = [&](VertexId v) { return in[v] ? comp[v] : inner + outer_comp[v]; };
    std::vector<std::set<int>> adj(nodes);
    for (const Edge& e : g.edges()) {
        if (in[e.u] == in[e.v])
            continue;
        adj[node_of(e.u)].insert(node_of(e.v));
        adj[node_of(e.v)].insert(node_of(e.u));
    }

    std::vector<VertexSet> out;
    for (int c = 0; c < inner; ++c) {
        std::vector<int> label(nodes, -1);
        label[c] = -2;
        for (int s = 0; s < nodes; ++s) {
            if (label[s] != -1)
                continue;
            std::vector<int> members{s};
            label[s] = s;
            for (std::size_t k = 0; k < members.size(); ++k)
                for (int b : adj[members[k]])
                    if (label[b] == -1) {
                        label[b] = s;
                        members.push_back(b);
                    }
            bool touches = std::any_of(members.begin(), members.end(), [&](int m) { return adj[m].contains(c); });
            if (!touches)
                continue;
            VertexSet part;
            for (VertexId v = 0; v < n; ++v)
                if (label[node_of(v)] != s)
                    part.push_back(v);
            out.push_back(std::move(part));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

auto cocycle_from(const DTarget& t, const VertexSet& raw) -> Cocycle
{
    const auto& g = t.graph();
    VertexSet set = normalise(raw);
    if (!is_bond(g, set))
        throw Error(ErrorCode::NotABond, "both sides of the cut must be non-empty and connected");
    auto in = membership(g.vertex_count(), set);
    auto cut = cut_edges(g, set);
    FaceStructure faces(g);

    Cocycle q;
    q.witness = set;
    EdgeId start = cut.front();
    EdgeId current = start;
    do {
        const Edge& ed = g.edge(current);
        VertexId a = in[ed.u] ? ed.u : ed.v;
        VertexId b = ed.other(a);
        RegionId f = faces.face_of_dart(a, b);
        const Region& r = faces.region(f);
        int len = r.length();
        int at = 0;
        while (!(r.vertices[at] == a && r.vertices[(at + 1) % len] == b))
            ++at;
        q.edges.push_back(current);
        q.regions.push_back(f);
        EdgeId next = -1;
        for (int step = 1; step < len; ++step) {
            int p = (at + step) % len;
            VertexId from = r.vertices[p];
            VertexId to = r.vertices[(p + 1) % len];
            if (!in[from] && in[to]) {
                next = r.edges[p];
                break;
            }
        }
        if (next < 0 || q.edges.size() > cut.size())
            throw Error(ErrorCode::NotABond, "dual walk did not close");
        current = next;
    } while (current != start);

    auto sorted_regions = q.regions;
    std::sort(sorted_regions.begin(), sorted_regions.end());
    auto sorted_edges = q.edges;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    if (std::adjacent_find(sorted_regions.begin(), sorted_regions.end()) != sorted_regions.end() ||
        sorted_edges != cut)
        throw Error(ErrorCode::NotABond, "cut is not a single dual cycle");
    return q;
}

auto validate_guenin_cocycle(const DTarget& tprime, const EdgeColouring& colouring, int index, const Cocycle& q,
                             PathMove path) -> CocycleVerdict
{
    auto check = verify_colouring(tprime, colouring);
    if (!check.ok)
        throw Error(ErrorCode::BadColouring, check.violation);
    if (index < 0 || index >= static_cast<int>(colouring.matchings.size()))
        throw Error(ErrorCode::InvalidArgument, "matching index " + std::to_string(index) + " out of range");
    const auto& g = tprime.graph();
    auto need = [&](VertexId a, VertexId b) {
        auto e = g.edge_between(a, b);
        if (!e)
            throw Error(ErrorCode::InvalidArgument,
                        std::to_string(a) + "-" + std::to_string(b) + " is not an edge of the switched target");
        return *e;
    };
    EdgeId uv = need(path.u, path.v);
    EdgeId xy = need(path.x, path.y);
    EdgeId xu = need(path.x, path.u);
    EdgeId vy = need(path.v, path.y);

    std::vector<char> in_q(tprime.edge_count(), 0);
    for (EdgeId e : q.edges)
        if (e >= 0 && e < tprime.edge_count())
            in_q[e] = 1;
    auto meet = [&](const Matching& m) {
        return static_cast<int>(std::count_if(m.begin(), m.end(), [&](EdgeId e) { return in_q[e] != 0; }));
    };

    CocycleVerdict verdict;
    verdict.others_meet_once = true;
    for (int j = 0; j < static_cast<int>(colouring.matchings.size()); ++j)
        if (j != index && meet(colouring.matchings[j]) != 1)
            verdict.others_meet_once = false;
    verdict.own_meets_five = meet(colouring.matchings[index]) >= 5;

    auto witness = normalise(q.witness);
    auto q_sorted = q.edges;
    std::sort(q_sorted.begin(), q_sorted.end());
    bool in_range = std::all_of(witness.begin(), witness.end(),
                                [&](VertexId v) { return v >= 0 && v < tprime.vertex_count(); });
    verdict.odd_cut = in_range && witness.size() % 2 == 1 && cut_edges(g, witness) == q_sorted;
    verdict.path_edges = in_q[uv] && in_q[xy] && !in_q[xu] && !in_q[vy];
    return verdict;
}

auto find_guenin_cocycles(const DTarget& tprime, const EdgeColouring& colouring, PathMove path,
                          bool xy_in_original, int cap) -> std::vector<GueninEntry>
{
    auto check = verify_colouring(tprime, colouring);
    if (!check.ok)
        throw Error(ErrorCode::BadColouring, check.violation);
    int n = tprime.vertex_count();
    if (n > cap || n > 62)
        throw Error(ErrorCode::TooLarge, std::to_string(n) + " vertices exceeds cut cap " + std::to_string(cap));
    const auto& g = tprime.graph();
    auto xy = g.edge_between(path.x, path.y);
    if (!xy)
        throw Error(ErrorCode::InvalidArgument, "xy is not an edge of the switched target");

    int holder = -1;
    for (int j = 0; j < static_cast<int>(colouring.matchings.size()) && holder < 0; ++j)
        if (std::binary_search(colouring.matchings[j].begin(), colouring.matchings[j].end(), *xy))
            holder = j;

    // Odd bonds by size, then lexicographically.
    std::vector<Cocycle> candidates;
    for (int size = 1; size < n; size += 2) {
        std::vector<char> pick(n, 0);
        std::fill(pick.begin(), pick.begin() + size, 1);
        do {
            VertexSet set;
            for (int v = 0; v < n; ++v)
                if (pick[v])
                    set.push_back(v);
            if (is_bond(g, set))
                candidates.push_back(cocycle_from(tprime, set));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }

    std::vector<GueninEntry> out;
    for (int i = 0; i < static_cast<int>(colouring.matchings.size()); ++i) {
        GueninEntry entry;
        entry.index = i;
        entry.excluded = !xy_in_original && i == holder;
        if (!entry.excluded)
            for (const auto& q : candidates)
                if (validate_guenin_cocycle(tprime, colouring, i, q, path).all()) {
                    entry.cocycle = q;
                    break;
                }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace planarcol
