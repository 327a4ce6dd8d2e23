#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

namespace oracle {

auto trace_faces(const RotationGraph& g) -> std::vector<std::vector<int>>
{
    int n = g.vertex_count();
    std::map<std::pair<int, int>, bool> seen;
    std::vector<std::pair<int, int>> darts;
    for (int a = 0; a < n; ++a)
        for (int b : g.rotation(a))
            darts.emplace_back(a, b);
    std::sort(darts.begin(), darts.end());

    auto before = [&](int at, int from) {
        auto rot = g.rotation(at);
        int k = static_cast<int>(rot.size());
        for (int i = 0; i < k; ++i)
            if (rot[i] == from)
                return rot[(i + k - 1) % k];
        return -1;
    };

    std::vector<std::vector<int>> out;
    for (auto start : darts) {
        if (seen[start])
            continue;
        std::vector<int> cycle;
        auto cur = start;
        while (!seen[cur]) {
            seen[cur] = true;
            cycle.push_back(cur.first);
            cur = {cur.second, before(cur.second, cur.first)};
        }
        out.push_back(cycle);
    }
    return out;
}

View::View(const DTarget& t) : n(t.vertex_count()), d(t.d()), mult(n, std::vector<int>(n, -1))
{
    const auto& g = t.graph();
    for (int a = 0; a < n; ++a)
        for (int b : g.rotation(a))
            mult[a][b] = t.mult(a, b);
    faces = trace_faces(g);
    for (const auto& c : faces) {
        std::vector<std::pair<int, int>> ds;
        for (size_t i = 0; i < c.size(); ++i)
            ds.emplace_back(c[i], c[(i + 1) % c.size()]);
        darts_.push_back(ds);
    }
}

auto View::deg(int v) const -> int
{
    return static_cast<int>(std::count_if(mult[v].begin(), mult[v].end(), [](int x) { return x >= 0; }));
}

auto View::face_edges(int f) const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> out;
    for (auto [a, b] : darts_[f])
        out.emplace_back(std::min(a, b), std::max(a, b));
    return out;
}

auto View::on_face(int f, int a, int b) const -> bool
{
    for (auto [p, q] : darts_[f])
        if ((p == a && q == b) || (p == b && q == a))
            return true;
    return false;
}

auto View::has_vertex(int f, int v) const -> bool
{
    return std::find(faces[f].begin(), faces[f].end(), v) != faces[f].end();
}

auto View::faces_of(int a, int b) const -> std::pair<int, int>
{
    int first = -1;
    int second = -1;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        for (auto [p, q] : darts_[f]) {
            if (p == a && q == b)
                first = f;
            if (p == b && q == a)
                second = f;
        }
    return {first, second};
}

auto View::across(int a, int b, int f) const -> int
{
    auto [p, q] = faces_of(a, b);
    return p == f ? q : p;
}

auto View::door(int a, int b, int f) const -> bool
{
    if (m(a, b) != 1)
        return false;
    int other = across(a, b, f);
    for (auto [p, q] : face_edges(other))
        if (p != a && p != b && q != a && q != b && m(p, q) == 1)
            return true;
    return false;
}

auto View::door_count(int f) const -> int
{
    int count = 0;
    for (auto [a, b] : face_edges(f))
        count += door(a, b, f) ? 1 : 0;
    return count;
}

auto View::mplus(int a, int b, const std::vector<int>& disc) const -> std::optional<int>
{
    auto [p, q] = faces_of(a, b);
    bool in_p = std::find(disc.begin(), disc.end(), p) != disc.end();
    bool in_q = std::find(disc.begin(), disc.end(), q) != disc.end();
    if (in_p == in_q)
        return std::nullopt;
    int outside = in_p ? q : p;
    return m(a, b) + (big(outside) ? 0 : 1);
}

auto View::heavy(int a, int b, int f, int level) const -> bool
{
    if (m(a, b) >= level)
        return true;
    int other = across(a, b, f);
    if (length(other) != 3)
        return false;
    int c = -1;
    for (int z : faces[other])
        if (z != a && z != b)
            c = z;
    return m(a, b) + std::min(m(a, c), m(b, c)) >= level;
}

auto View::tough(int f) const -> bool
{
    if (length(f) != 3)
        return false;
    const auto& c = faces[f];
    int total = m(c[0], c[1]) + m(c[1], c[2]) + m(c[2], c[0]);
    if (total < 5)
        return false;
    for (int i = 0; i < 3; ++i) {
        int a = c[i];
        int b = c[(i + 1) % 3];
        int z = c[(i + 2) % 3];
        if (m(a, b) == 1 && m(a, z) == 2 && m(b, z) == 2) {
            auto p = mplus(a, z, {f});
            auto q = mplus(b, z, {f});
            return p && q && *p + *q >= 5;
        }
    }
    return true;
}

namespace {

auto same_set(std::vector<int> a, std::vector<int> b) -> bool
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Every way to read a face cycle starting anywhere, in either direction.
auto readings(const std::vector<int>& cycle) -> std::vector<std::vector<int>>
{
    std::vector<std::vector<int>> out;
    int k = static_cast<int>(cycle.size());
    for (int s = 0; s < k; ++s)
        for (int dir : {1, -1}) {
            std::vector<int> r;
            for (int i = 0; i < k; ++i)
                r.push_back(cycle[((s + dir * i) % k + k) % k]);
            out.push_back(r);
        }
    return out;
}

// Other boundary neighbour of u on the face cycle, apart from v.
auto cycle_neighbour(const std::vector<int>& cycle, int u, int v) -> int
{
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i)
        if (cycle[i] == u) {
            int prev = cycle[(i + k - 1) % k];
            int next = cycle[(i + 1) % k];
            return prev == v ? next : prev;
        }
    return -1;
}

auto disjoint(std::pair<int, int> e, std::pair<int, int> f) -> bool
{
    return e.first != f.first && e.first != f.second && e.second != f.first && e.second != f.second;
}

auto triangle_occurrences(const View& w, int conf, std::set<Labelled>& out)
{
    int faces = static_cast<int>(w.faces.size());
    for (int t = 0; t < faces; ++t) {
        if (w.length(t) != 3)
            continue;
        for (const auto& r : readings(w.faces[t])) {
            int u = r[0], v = r[1], x3 = r[2];
            int wv = x3;
            switch (conf) {
            case 1:
                if (w.deg(u) == 3 && w.deg(v) == 3)
                    out.insert({{u, v, wv}, {t}});
                break;
            case 2:
                if (w.deg(u) != 3)
                    break;
                for (int x = 0; x < w.n; ++x)
                    if (x != v && x != wv && w.adjacent(u, x) && w.m(u, x) < w.m(u, wv) + w.m(v, wv))
                        out.insert({{u, v, wv, x}, {t}});
                break;
            case 7: {
                auto a = w.mplus(u, v, {t});
                auto b = w.mplus(u, wv, {t});
                if (a && b && *a + *b >= 7)
                    out.insert({{u, v, wv}, {t}});
                break;
            }
            case 8: {
                if (w.m(u, v) != 3 || w.m(u, wv) != 2 || w.m(v, wv) != 2)
                    break;
                bool hit = false;
                for (auto [a, b] : std::array<std::pair<int, int>, 3>{{{u, v}, {u, wv}, {v, wv}}}) {
                    int s = w.across(a, b, t);
                    int free_doors = 0;
                    for (auto [p, q] : w.face_edges(s))
                        if (w.door(p, q, s) && p != u && p != v && p != wv && q != u && q != v && q != wv)
                            ++free_doors;
                    hit = hit || free_doors == 0;
                }
                if (hit)
                    out.insert({{u, v, wv}, {t}});
                break;
            }
            case 9: {
                if (w.m(u, v) != 2 || w.m(u, wv) != 2 || w.m(v, wv) != 2 || w.deg(u) < 4)
                    break;
                bool ok = true;
                for (auto [a, b] : std::array<std::pair<int, int>, 2>{{{u, v}, {u, wv}}}) {
                    int s = w.across(a, b, t);
                    if (w.door_count(s) > 1)
                        ok = false;
                    for (auto [p, q] : w.face_edges(s))
                        if (w.door(p, q, s) && p != u && p != v && p != wv && q != u && q != v && q != wv)
                            ok = false;
                }
                if (ok)
                    out.insert({{u, v, wv}, {t}});
                break;
            }
            case 3:
            case 5:
                for (int t2 = 0; t2 < faces; ++t2) {
                    if (t2 == t || w.length(t2) != 3 || !w.has_vertex(t2, u) || !w.has_vertex(t2, wv))
                        continue;
                    int x = -1;
                    for (int z : w.faces[t2])
                        if (z != u && z != wv)
                            x = z;
                    if (!same_set(w.faces[t2], {u, wv, x}))
                        continue;
                    if (conf == 3) {
                        if (w.m(u, v) + w.m(u, wv) + w.m(v, wv) + w.m(u, x) >= 8)
                            out.insert({{u, v, wv, x}, {t, t2}});
                    } else {
                        auto a = w.mplus(u, v, {t, t2});
                        auto b = w.mplus(wv, x, {t, t2});
                        if (a && b && *a + w.m(u, wv) + *b >= 7)
                            out.insert({{u, v, wv, x}, {t, t2}});
                    }
                }
                break;
            default: break;
            }
        }
    }
}

auto square_occurrences(const View& w, int conf, std::set<Labelled>& out)
{
    int faces = static_cast<int>(w.faces.size());
    for (int s = 0; s < faces; ++s) {
        if (w.length(s) != 4)
            continue;
        for (const auto& r : readings(w.faces[s])) {
            int u = r[0], v = r[1], wv = r[2], x = r[3];
            if (conf == 4) {
                bool excluded = w.m(u, v) == 4 && w.m(v, wv) == 2 && w.m(wv, x) == 1 && w.m(u, x) == 2;
                if (w.m(u, v) + w.m(v, wv) + w.m(u, x) >= 8 && !excluded)
                    out.insert({{u, v, wv, x}, {s}});
                continue;
            }
            if (conf == 6) {
                auto a = w.mplus(u, v, {s});
                auto b = w.mplus(wv, x, {s});
                if (a && b && *a + *b >= 7)
                    out.insert({{u, v, wv, x}, {s}});
                continue;
            }
            for (int t = 0; t < faces; ++t) {
                if (t == s || w.length(t) != 3 || !w.has_vertex(t, wv) || !w.has_vertex(t, x))
                    continue;
                int y = -1;
                for (int z : w.faces[t])
                    if (z != wv && z != x)
                        y = z;
                bool ok = false;
                if (conf == 10) {
                    ok = w.m(u, v) == 2 && w.m(wv, x) == 2 && w.m(x, y) == 2 && w.m(v, wv) == 4;
                } else if (conf == 11) {
                    auto xy = w.mplus(x, y, {s, t});
                    ok = w.m(u, v) >= 3 && w.m(wv, y) >= 3 && w.m(wv, x) == 1 && w.m(u, x) <= 3 && xy && *xy >= 3;
                } else if (conf == 12) {
                    auto uv = w.mplus(u, v, {s, t});
                    auto xy = w.mplus(x, y, {s, t});
                    ok = uv && *uv >= 2 && w.m(v, wv) >= 2 && w.m(wv, x) == 2 && w.m(wv, y) == 2 && w.m(u, x) <= 3 &&
                         xy && *xy >= 3;
                }
                if (ok)
                    out.insert({{u, v, wv, x, y}, {s, t}});
            }
        }
    }
}

auto pentagon_occurrences(const View& w, std::set<Labelled>& out)
{
    for (int f = 0; f < static_cast<int>(w.faces.size()); ++f) {
        if (w.length(f) != 5)
            continue;
        for (const auto& r : readings(w.faces[f])) {
            std::array<int, 5> mm{};
            for (int i = 0; i < 5; ++i)
                mm[i] = w.m(r[i], r[(i + 1) % 5]);
            if (mm[0] < std::max(mm[1], mm[4]) || mm[0] + mm[1] + mm[2] < 8)
                continue;
            auto a = w.mplus(r[0], r[1], {f});
            auto b = w.mplus(r[3], r[4], {f});
            if (a && b && *a + *b >= 7)
                out.insert({r, {f}});
        }
    }
}

auto edge_occurrences(const View& w, int conf, std::set<Labelled>& out)
{
    for (int f = 0; f < static_cast<int>(w.faces.size()); ++f) {
        auto edges = w.face_edges(f);
        for (auto e : edges) {
            auto me = w.mplus(e.first, e.second, {f});
            if (!me)
                continue;
            std::vector<std::pair<int, int>> far;
            for (auto g : edges)
                if (disjoint(e, g))
                    far.push_back(g);
            bool ok = false;
            if (conf == 14) {
                int doors = 0;
                for (auto g : far)
                    doors += w.door(g.first, g.second, f) ? 1 : 0;
                ok = *me >= 6 && doors <= 6;
            } else if (conf == 15) {
                ok = w.length(f) >= 4 && *me >= 4;
                for (auto g : far)
                    ok = ok && w.heavy(g.first, g.second, f, 3);
            } else if (conf == 17) {
                ok = w.length(f) >= 5 && *me >= 5;
                int light = 0;
                for (auto g : far) {
                    auto mg = w.mplus(g.first, g.second, {f});
                    ok = ok && mg && *mg >= 2;
                    light += w.heavy(g.first, g.second, f, 3) ? 0 : 1;
                }
                ok = ok && light <= 1;
            } else if (conf == 19) {
                ok = w.length(f) >= 5 && *me >= 5;
                int light = 0;
                for (auto g : far) {
                    ok = ok && w.heavy(g.first, g.second, f, 2);
                    light += w.heavy(g.first, g.second, f, 3) ? 0 : 1;
                }
                ok = ok && light <= 2;
            }
            if (ok)
                out.insert({{e.first, e.second}, {f}});
        }
    }
}

auto region_triangle_occurrences(const View& w, int conf, std::set<Labelled>& out)
{
    int faces = static_cast<int>(w.faces.size());
    for (int r = 0; r < faces; ++r) {
        if (conf == 18 && w.length(r) < 4)
            continue;
        auto edges = w.face_edges(r);
        for (auto [p, q] : edges)
            for (auto [u, v] : std::array<std::pair<int, int>, 2>{{{p, q}, {q, p}}})
                for (int t = 0; t < faces; ++t) {
                    if (t == r || w.length(t) != 3 || !w.has_vertex(t, u) || !w.has_vertex(t, v))
                        continue;
                    int x = -1;
                    for (int z : w.faces[t])
                        if (z != u && z != v)
                            x = z;
                    int side = cycle_neighbour(w.faces[r], u, v);
                    auto uw = w.mplus(u, x, {r, t});
                    if (!uw || w.m(v, x) > w.m(u, x) || w.m(u, side) > w.m(u, x))
                        continue;
                    std::vector<std::pair<int, int>> away;
                    for (auto g : edges)
                        if (g.first != u && g.second != u)
                            away.push_back(g);
                    bool ok = false;
                    if (conf == 16) {
                        ok = w.m(u, v) + *uw >= 4;
                        for (auto g : away)
                            ok = ok && w.heavy(g.first, g.second, r, 3);
                    } else {
                        auto mostly_heavy = [&](const std::vector<std::pair<int, int>>& list) {
                            int light = 0;
                            for (auto g : list) {
                                auto mg = w.mplus(g.first, g.second, {r, t});
                                if (!mg || *mg < 2)
                                    return false;
                                light += w.heavy(g.first, g.second, r, 3) ? 0 : 1;
                            }
                            return light <= 1;
                        };
                        std::vector<std::pair<int, int>> off_uv;
                        for (auto g : edges)
                            if (disjoint(g, {std::min(u, v), std::max(u, v)}))
                                off_uv.push_back(g);
                        bool first = w.m(u, v) == 3 && w.heavy(u, v, r, 5) && mostly_heavy(off_uv);
                        bool second = mostly_heavy(away);
                        ok = *uw + w.m(u, v) >= 5 && (first || second);
                    }
                    if (ok)
                        out.insert({{u, v, x}, {r, t}});
                }
    }
}

struct Relabel {
    std::vector<int> vertex_from;  // new position i takes old position vertex_from[i]
    bool swap_regions = false;
};

// The non-identity automorphisms of each pattern.
auto automorphisms(int conf) -> std::vector<Relabel>
{
    switch (conf) {
    case 1:
    case 8: return {{{1, 0, 2}, false}};
    case 7:
    case 9: return {{{0, 2, 1}, false}};
    case 4: return {{{1, 0, 3, 2}, false}};
    case 5: return {{{2, 3, 0, 1}, true}};
    case 6: return {{{1, 0, 3, 2}, false}, {{2, 3, 0, 1}, false}, {{3, 2, 1, 0}, false}};
    default: return {};
    }
}

}  // namespace

auto all_occurrences(const View& view, int conf) -> std::set<Labelled>
{
    std::set<Labelled> out;
    switch (conf) {
    case 1:
    case 2:
    case 3:
    case 5:
    case 7:
    case 8:
    case 9: triangle_occurrences(view, conf, out); break;
    case 4:
    case 6:
    case 10:
    case 11:
    case 12: square_occurrences(view, conf, out); break;
    case 13: pentagon_occurrences(view, out); break;
    case 14:
    case 15:
    case 17:
    case 19: edge_occurrences(view, conf, out); break;
    case 16:
    case 18: region_triangle_occurrences(view, conf, out); break;
    default: break;
    }
    return out;
}

auto canonical(int conf, const Labelled& x) -> Labelled
{
    Labelled best = x;
    for (const auto& g : automorphisms(conf)) {
        Labelled y;
        for (int from : g.vertex_from)
            y.vertices.push_back(x.vertices[from]);
        y.regions = x.regions;
        if (g.swap_regions)
            std::reverse(y.regions.begin(), y.regions.end());
        best = std::min(best, y);
    }
    return best;
}

namespace {

auto show(const Labelled& x) -> std::string
{
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < x.vertices.size(); ++i)
        out << (i ? "," : "") << x.vertices[i];
    out << " | ";
    for (size_t i = 0; i < x.regions.size(); ++i)
        out << (i ? "," : "") << x.regions[i];
    out << ")";
    return out.str();
}

}  // namespace

auto compare_detector(const DTarget& t, int conf, const std::vector<planarcol::ConfigMatch>& found) -> std::string
{
    View view(t);
    auto every = all_occurrences(view, conf);
    std::set<Labelled> reps;
    for (const auto& x : every)
        reps.insert(canonical(conf, x));

    std::set<Labelled> got;
    for (const auto& m : found) {
        Labelled x{m.vertex_tuple(), m.regions};
        if (m.conf != conf)
            return "Conf(" + std::to_string(conf) + "): match tagged Conf(" + std::to_string(m.conf) + ")";
        if (!got.insert(x).second)
            return "Conf(" + std::to_string(conf) + "): duplicate " + show(x);
        if (!every.count(x))
            return "Conf(" + std::to_string(conf) + "): detector-only " + show(x);
        if (canonical(conf, x) != x)
            return "Conf(" + std::to_string(conf) + "): non-canonical " + show(x);
    }
    for (const auto& x : reps)
        if (!got.count(x))
            return "Conf(" + std::to_string(conf) + "): oracle-only " + show(x);
    return {};
}

auto cut_value(const DTarget& t, unsigned mask) -> int
{
    int total = 0;
    for (auto e : t.graph().edges()) {
        bool a = (mask >> e.u) & 1U;
        bool b = (mask >> e.v) & 1U;
        if (a != b)
            total += t.mult(e.u, e.v);
    }
    return total;
}

auto min_odd_cut(const DTarget& t) -> OddCut
{
    int n = t.vertex_count();
    std::optional<OddCut> best;
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
        if (__builtin_popcount(mask) % 2 == 0)
            continue;
        OddCut c;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U)
                c.set.push_back(v);
        c.value = cut_value(t, mask);
        if (!best || c.value < best->value || (c.value == best->value && c.set < best->set))
            best = c;
    }
    return best.value_or(OddCut{});
}

namespace {

// Neighbours of edge ab along face f: the face edges through a and through
// b other than ab itself.
auto flanks(const View& view, int f, int a, int b) -> std::pair<std::pair<int, int>, std::pair<int, int>>
{
    const auto& c = view.faces[f];
    int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
        int p = c[i];
        int q = c[(i + 1) % k];
        if ((p == a && q == b) || (p == b && q == a)) {
            std::pair<int, int> before{c[(i + k - 1) % k], p};
            std::pair<int, int> after{q, c[(i + 2) % k]};
            return p == a ? std::pair{before, after} : std::pair{after, before};
        }
    }
    return {{-1, -1}, {-1, -1}};
}

auto is(const std::optional<int>& x, int value) -> bool
{
    return x && *x == value;
}

// Twice beta_e toward the big side, or 0.
auto beta_twice(const View& view, int a, int b, int big) -> int
{
    if (view.door(a, b, big))
        return 0;
    auto [fa, fb] = flanks(view, big, a, b);
    auto p = view.mplus(fa.first, fa.second, {big});
    auto q = view.mplus(fb.first, fb.second, {big});
    int m = view.m(a, b);
    if (m == 2 && is(p, 6) && is(q, 6))
        return 0;
    if (m == 2 && p && q && ((*p == 6 && *q == 5) || (*p == 5 && *q == 6)))
        return 1;
    if (m == 3 && is(p, 5) && is(q, 5))
        return 0;
    if (m == 3 && p && q && (*p == 5) != (*q == 5))
        return 1;
    return 2;
}

// Twice gamma_e toward the non-tough side r, from the tough triangle t.
auto gamma_twice(const View& view, int a, int b, int r, int t) -> int
{
    int c = -1;
    for (int z : view.faces[t])
        if (z != a && z != b)
            c = z;
    int m = view.m(a, b);
    auto mp = [&](int x, int y) { return view.mplus(x, y, {t}); };
    auto small = [&](int x, int y) { return !view.big(view.across(x, y, t)); };
    // Labelling (e1, e2) = (wc, zc) with w the end of e on e1.
    struct Side {
        int w, z;
    };
    std::array<Side, 2> labels{Side{a, b}, Side{b, a}};
    auto m1 = [&](Side s) { return view.m(s.w, c); };
    auto m2 = [&](Side s) { return view.m(s.z, c); };

    if (m == 1) {
        auto p = mp(a, c);
        auto q = mp(b, c);
        if (view.m(a, c) >= 2 && view.m(b, c) >= 2 && p && q && *p + *q >= 6)
            return 2;
        for (Side s : labels) {
            auto p1 = mp(s.w, c);
            if (p1 && *p1 >= 4 && m2(s) == 1 && small(s.z, c))
                return 1;
        }
        for (Side s : labels) {
            if (m1(s) != 3 || m2(s) != 1 || !small(s.z, c))
                continue;
            auto [fa, fb] = flanks(view, r, a, b);
            auto f = s.w == a ? fa : fb;
            if (view.m(f.first, f.second) == 4)
                return 1;
        }
        return 0;
    }
    if (m == 2) {
        auto p = mp(a, c);
        auto q = mp(b, c);
        if (view.m(a, c) >= 2 && view.m(b, c) >= 2 && p && q && *p + *q >= 5) {
            bool remote_door = false;
            for (auto [x, y] : view.face_edges(r))
                if (view.door(x, y, r) && x != a && x != b && y != a && y != b)
                    remote_door = true;
            auto [fa, fb] = flanks(view, r, a, b);
            bool four = view.m(fa.first, fa.second) == 4 || view.m(fb.first, fb.second) == 4;
            if (view.door_count(r) > 1 || remote_door || (four && small(a, c) && small(b, c)))
                return 2;
        }
        for (Side s : labels)
            if (m1(s) == 2 && m2(s) == 2 && view.deg(s.w) == 3 && small(s.w, c) && !small(s.z, c))
                return 1;
        return 0;
    }
    if (m == 3 && view.m(a, c) == 2 && view.m(b, c) == 2)
        return 2;
    return 0;
}

}  // namespace

auto charges(const View& view) -> Charges
{
    int faces = static_cast<int>(view.faces.size());
    Charges out{std::vector<int>(faces), std::vector<int>(faces), std::vector<int>(faces)};
    for (int f = 0; f < faces; ++f) {
        int sum = 0;
        for (auto [a, b] : view.face_edges(f))
            sum += view.m(a, b);
        out.alpha[f] = 2 * (8 - 4 * view.length(f) + sum);
    }
    for (int a = 0; a < view.n; ++a)
        for (int b = a + 1; b < view.n; ++b) {
            if (!view.adjacent(a, b))
                continue;
            auto [p, q] = view.faces_of(a, b);
            if (view.big(p) != view.big(q)) {
                int big = view.big(p) ? p : q;
                int small = big == p ? q : p;
                int x = beta_twice(view, a, b, big);
                out.beta[big] += x;
                out.beta[small] -= x;
            }
            if (!view.big(p) && !view.big(q) && view.tough(p) != view.tough(q)) {
                int t = view.tough(p) ? p : q;
                int r = t == p ? q : p;
                int x = gamma_twice(view, a, b, r, t);
                out.gamma[r] += x;
                out.gamma[t] -= x;
            }
        }
    return out;
}

auto perfect_matchings(const RotationGraph& g) -> std::vector<std::vector<std::pair<int, int>>>
{
    int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(n, false);
    std::function<void()> grow = [&] {
        int v = 0;
        while (v < n && used[v])
            ++v;
        if (v == n) {
            auto sorted = cur;
            std::sort(sorted.begin(), sorted.end());
            out.push_back(sorted);
            return;
        }
        used[v] = true;
        for (int w : g.rotation(v)) {
            if (used[w])
                continue;
            used[w] = true;
            cur.emplace_back(std::min(v, w), std::max(v, w));
            grow();
            cur.pop_back();
            used[w] = false;
        }
        used[v] = false;
    };
    grow();
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
