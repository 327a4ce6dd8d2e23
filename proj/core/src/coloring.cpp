#include "planarcol/coloring.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace planarcol {

namespace {

void check_matching_preconditions(const RotationGraph& g, int cap)
{
    if (g.vertex_count() % 2 != 0)
        throw Error(ErrorCode::OddVertexCount, std::to_string(g.vertex_count()) + " vertices");
    if (g.vertex_count() > cap)
        throw Error(ErrorCode::TooLarge,
                    std::to_string(g.vertex_count()) + " vertices exceeds matching cap " + std::to_string(cap));
}

void extend_matching(const RotationGraph& g, std::vector<char>& matched, Matching& current,
                     std::vector<Matching>& out)
{
    int n = g.vertex_count();
    VertexId v = 0;
    while (v < n && matched[v])
        ++v;
    if (v == n) {
        Matching m = current;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
        return;
    }
    matched[v] = 1;
    auto rot = g.rotation(v);
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < rot.size(); ++i) {
        VertexId w = rot[i];
        if (matched[w])
            continue;
        matched[w] = 1;
        current.push_back(inc[i]);
        extend_matching(g, matched, current, out);
        current.pop_back();
        matched[w] = 0;
    }
    matched[v] = 0;
}

class ColouringSearch {
public:
    ColouringSearch(const DTarget& t, std::vector<Matching> matchings)
        : target_(t), matchings_(std::move(matchings)), residual_(t.mults().begin(), t.mults().end()),
          containing_(t.edge_count()), counts_(matchings_.size(), 0)
    {
        for (std::size_t i = 0; i < matchings_.size(); ++i)
            for (EdgeId e : matchings_[i])
                containing_[e].push_back(static_cast<int>(i));
    }

    auto run() -> bool { return search(target_.d()); }
    auto counts() const -> const std::vector<int>& { return counts_; }
    auto matchings() const -> const std::vector<Matching>& { return matchings_; }

private:
    auto key() const -> std::string { return {residual_.begin(), residual_.end()}; }

    auto fits(const Matching& m) const -> bool
    {
        return std::all_of(m.begin(), m.end(), [&](EdgeId e) { return residual_[e] >= 1; });
    }

    auto search(int budget) -> bool
    {
        // Largest residual demand first; lowest edge id on ties.
        EdgeId pick = -1;
        for (EdgeId e = 0; e < static_cast<EdgeId>(residual_.size()); ++e)
            if (residual_[e] > 0 && (pick < 0 || residual_[e] > residual_[pick]))
                pick = e;
        if (pick < 0)
            return budget == 0;
        if (budget == 0 || residual_[pick] > budget)
            return false;
        auto k = key();
        if (failed_.contains(k))
            return false;

        for (int idx : containing_[pick]) {
            const Matching& m = matchings_[idx];
            if (!fits(m))
                continue;
            for (EdgeId e : m)
                --residual_[e];
            ++counts_[idx];
            if (search(budget - 1))
                return true;
            --counts_[idx];
            for (EdgeId e : m)
                ++residual_[e];
        }
        failed_.insert(std::move(k));
        return false;
    }

    const DTarget& target_;
    std::vector<Matching> matchings_;
    std::vector<char> residual_;
    std::vector<std::vector<int>> containing_;
    std::vector<int> counts_;
    std::unordered_set<std::string> failed_;
};

}  // namespace

auto EdgeColouring::weights() const -> std::vector<std::pair<Matching, int>>
{
    std::vector<std::pair<Matching, int>> out;
    for (const auto& m : matchings) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& p) { return p.first == m; });
        if (it == out.end())
            out.emplace_back(m, 1);
        else
            ++it->second;
    }
    return out;
}

auto perfect_matchings(const RotationGraph& g, int cap) -> std::vector<Matching>
{
    check_matching_preconditions(g, cap);
    std::vector<Matching> out;
    std::vector<char> matched(g.vertex_count(), 0);
    Matching current;
    extend_matching(g, matched, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

auto perfect_matchings(const DTarget& t, int cap) -> std::vector<Matching>
{
    return perfect_matchings(t.graph(), cap);
}

auto expand_colouring(const DTarget& t, const std::vector<std::pair<Matching, int>>& weights) -> EdgeColouring
{
    EdgeColouring c;
    c.coverage.assign(t.edge_count(), 0);
    for (const auto& [m, count] : weights)
        for (int k = 0; k < count; ++k) {
            c.matchings.push_back(m);
            for (EdgeId e : m)
                ++c.coverage[e];
        }
    return c;
}

auto edge_colour(const DTarget& t, int cap) -> std::optional<EdgeColouring>
{
    auto all = perfect_matchings(t, cap);
    for (VertexId v = 0; v < t.vertex_count(); ++v)
        if (t.load(v) != t.d())
            return std::nullopt;

    // Zero-multiplicity edges may not appear in any chosen matching.
    std::vector<Matching> usable;
    for (auto& m : all)
        if (std::all_of(m.begin(), m.end(), [&](EdgeId e) { return t.mult(e) > 0; }))
            usable.push_back(std::move(m));

    ColouringSearch search(t, std::move(usable));
    if (!search.run())
        return std::nullopt;

    std::vector<std::pair<Matching, int>> weights;
    for (std::size_t i = 0; i < search.matchings().size(); ++i)
        if (search.counts()[i] > 0)
            weights.emplace_back(search.matchings()[i], search.counts()[i]);
    return expand_colouring(t, weights);
}

auto verify_colouring(const DTarget& t, const EdgeColouring& c) -> ColouringCheck
{
    if (static_cast<int>(c.matchings.size()) != t.d())
        return {false, "list has " + std::to_string(c.matchings.size()) + " matchings, expected " + std::to_string(t.d())};

    std::vector<int> coverage(t.edge_count(), 0);
    for (std::size_t i = 0; i < c.matchings.size(); ++i) {
        std::vector<int> hits(t.vertex_count(), 0);
        for (EdgeId e : c.matchings[i]) {
            if (e < 0 || e >= t.edge_count())
                return {false, "matching " + std::to_string(i) + " uses unknown edge " + std::to_string(e)};
            const Edge& ed = t.graph().edge(e);
            ++hits[ed.u];
            ++hits[ed.v];
            ++coverage[e];
        }
        for (VertexId v = 0; v < t.vertex_count(); ++v)
            if (hits[v] != 1)
                return {false, "matching " + std::to_string(i) + " covers vertex " + std::to_string(v) + " " +
                                   std::to_string(hits[v]) + " times"};
    }
    for (EdgeId e = 0; e < t.edge_count(); ++e)
        if (coverage[e] != t.mult(e)) {
            const Edge& ed = t.graph().edge(e);
            return {false, "edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v) + " covered " +
                               std::to_string(coverage[e]) + " times, m(e) = " + std::to_string(t.mult(e))};
        }
    return {true, {}};
}

}  // namespace planarcol
