#include "planarcol_cli/commands.hpp"

#include "planarcol/coloring.hpp"
#include "planarcol/config.hpp"
#include "planarcol/corpus.hpp"
#include "planarcol/cuts.hpp"
#include "planarcol/discharge.hpp"
#include "planarcol/switching.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

namespace planarcol::cli {

using json = nlohmann::ordered_json;

namespace {

auto join(const std::vector<std::string>& parts, const std::string& sep) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        out += (i ? sep : "") + parts[i];
    return out;
}

auto edge_label(const RotationGraph& g, EdgeId e) -> std::string
{
    return std::to_string(g.edge(e).u) + "-" + std::to_string(g.edge(e).v);
}

auto edge_json(const RotationGraph& g, EdgeId e) -> json
{
    return json::array({g.edge(e).u, g.edge(e).v});
}

auto set_label(const VertexSet& s) -> std::string
{
    std::vector<std::string> parts;
    for (VertexId v : s)
        parts.push_back(std::to_string(v));
    return "{" + join(parts, ",") + "}";
}

auto score_json(const ScoreSequence& s) -> json { return json(s.counts); }

auto score_label(const ScoreSequence& s) -> std::string
{
    std::vector<std::string> parts;
    for (int c : s.counts)
        parts.push_back(std::to_string(c));
    return "(" + join(parts, ",") + ")";
}

auto match_json(const ConfigMatch& m) -> json
{
    json vertices = json::object();
    for (const auto& [name, v] : m.vertices)
        vertices[name] = v;
    return json{{"conf", m.conf}, {"vertices", vertices}, {"regions", m.regions}, {"satisfied", m.satisfied}};
}

auto match_label(const ConfigMatch& m) -> std::string
{
    std::vector<std::string> parts;
    for (const auto& [name, v] : m.vertices)
        parts.push_back(name + "=" + std::to_string(v));
    std::vector<std::string> regs;
    for (RegionId r : m.regions)
        regs.push_back(std::to_string(r));
    return "Conf(" + std::to_string(m.conf) + ") at " + join(parts, " ") + " regions [" + join(regs, ",") + "]";
}

auto witness_json(const DTarget& t, const PrimalityWitness& w) -> json
{
    json out{{"kind", witness_kind(w)}};
    const auto& g = t.graph();
    std::visit(
        [&](const auto& x) {
            using W = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<W, ZeroMultEdge> || std::is_same_v<W, MultiplicityOver6>) {
                out["edge"] = edge_json(g, x.edge);
                out["mult"] = t.mult(x.edge);
            } else if constexpr (std::is_same_v<W, TooFewVertices>) {
                out["vertices"] = x.vertices;
            } else if constexpr (std::is_same_v<W, CutViolation>) {
                out["set"] = x.cut.set;
                out["value"] = x.cut.value;
            } else if constexpr (std::is_same_v<W, NotThreeConnected>) {
                out["connectivity_level"] = x.level;
            } else {
                out["match"] = match_json(x);
            }
        },
        w);
    return out;
}

auto witness_label(const DTarget& t, const PrimalityWitness& w) -> std::string
{
    const auto& g = t.graph();
    return std::visit(
        [&](const auto& x) -> std::string {
            using W = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<W, ZeroMultEdge>)
                return "edge " + edge_label(g, x.edge) + " has m = 0";
            else if constexpr (std::is_same_v<W, MultiplicityOver6>)
                return "edge " + edge_label(g, x.edge) + " has m = " + std::to_string(t.mult(x.edge)) + " > 6";
            else if constexpr (std::is_same_v<W, TooFewVertices>)
                return std::to_string(x.vertices) + " vertices < 6";
            else if constexpr (std::is_same_v<W, CutViolation>)
                return "m(delta(" + set_label(x.cut.set) + ")) = " + std::to_string(x.cut.value) + " < 10";
            else if constexpr (std::is_same_v<W, NotThreeConnected>)
                return "connectivity level " + std::to_string(x.level) + " < 3";
            else
                return match_label(x);
        },
        w);
}

auto parse_target(const Input& in, const CommonOptions& opt) -> DTarget
{
    DTarget t = parse_dtarget(in.content);
    if (opt.d && *opt.d != t.d())
        throw Error(ErrorCode::MismatchedD,
                    "--d " + std::to_string(*opt.d) + " does not match file header d=" + std::to_string(t.d()));
    return t;
}

auto start(const std::string& command, const Input& in) -> Report
{
    Report r;
    r.command = command;
    r.input_digest = sha256_hex(in.content);
    return r;
}

// Library errors become input errors, except a failed identity, which is
// an internal contradiction.
auto guarded(Report report, const std::function<void(Report&)>& body) -> Report
{
    try {
        body(report);
    } catch (const Error& e) {
        bool identity = e.code() == ErrorCode::IdentityViolation;
        report.exit_code = identity ? exit_contradiction : exit_input_error;
        report.verdict = std::string(identity ? "identity violation: " : "input error: ") + e.what();
        report.details = json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
        report.lines.clear();
    }
    return report;
}

void require_valid(const DTarget& t)
{
    auto v = validate(t);
    if (!v.ok()) {
        const auto& first = v.violations.front();
        throw Error(ErrorCode::InvalidArgument, "not a d-target: " + first.kind + " at " + first.location);
    }
}

}  // namespace

auto sha256_hex(const std::string& bytes) -> std::string
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        return {};
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < length; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

auto load_input(const std::string& path) -> Input
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
    std::ostringstream buf;
    buf << file.rdbuf();
    return {path, buf.str()};
}

auto render(const Report& report, Format format) -> std::string
{
    if (format == Format::Machine) {
        json out{{"command", report.command},
                 {"input_digest", report.input_digest},
                 {"verdict", report.verdict},
                 {"exit_code", report.exit_code},
                 {"details", report.details}};
        return out.dump(2) + "\n";
    }
    std::string out = report.command + ": " + report.verdict + "\n";
    for (const auto& line : report.lines)
        out += "  " + line + "\n";
    return out;
}

auto cmd_check(const Input& in, const CommonOptions& opt) -> Report
{
    return guarded(start("check", in), [&](Report& r) {
        DTarget t = parse_target(in, opt);
        auto v = validate(t);
        json violations = json::array();
        for (const auto& x : v.violations)
            violations.push_back({{"kind", x.kind}, {"location", x.location}});
        r.details = {{"vertices", t.vertex_count()},
                     {"edges", t.edge_count()},
                     {"d", t.d()},
                     {"degree_ok", v.degree_ok},
                     {"euler_ok", v.euler_ok},
                     {"connectivity_level", v.connectivity_level},
                     {"violations", violations}};
        r.lines.push_back(std::to_string(t.vertex_count()) + " vertices, " + std::to_string(t.edge_count()) +
                          " edges, d=" + std::to_string(t.d()));
        r.lines.push_back(std::string("degree sums ") + (v.degree_ok ? "ok" : "FAIL") + ", Euler " +
                          (v.euler_ok ? "ok" : "FAIL") + ", connectivity level " +
                          std::to_string(v.connectivity_level) + (v.connectivity_level >= 3 ? "+" : ""));
        for (const auto& x : v.violations)
            r.lines.push_back("violation: " + x.kind + " at " + x.location);

        bool oddly = false;
        if (t.vertex_count() % 2 != 0) {
            r.details["odd_cut"] = {{"oddly_connected", false}, {"reason", "odd vertex count"}};
            r.lines.push_back("odd vertex count: V itself is an odd set with empty cut");
        } else {
            auto cut = min_odd_cut(t, opt.cap);
            oddly = cut.value >= t.d();
            r.details["odd_cut"] = {{"oddly_connected", oddly}, {"min_set", cut.set}, {"min_value", cut.value}};
            r.lines.push_back("min odd cut m(delta(" + set_label(cut.set) + ")) = " + std::to_string(cut.value) +
                              (oddly ? " >= " : " < ") + std::to_string(t.d()));
        }
        bool ok = v.ok() && oddly;
        r.verdict = ok ? "valid d-target" : "not a d-target";
        r.exit_code = ok ? exit_ok : exit_negative;
    });
}

auto cmd_classify(const Input& in, const CommonOptions& opt) -> Report
{
    return guarded(start("classify", in), [&](Report& r) {
        DTarget t = parse_target(in, opt);
        require_valid(t);
        auto verdict = is_prime(t, opt.cap);
        if (verdict.is_prime) {
            r.verdict = "prime: contradicts the unavoidability theorem";
            r.exit_code = exit_contradiction;
            r.details = {{"is_prime", true}};
            r.lines.push_back("no structural condition fails and no configuration matches");
            return;
        }
        const auto& w = *verdict.witness;
        bool rechecked = recheck_witness(t, w);
        r.verdict = "not prime: " + witness_kind(w);
        r.exit_code = rechecked ? exit_negative : exit_contradiction;
        r.details = {{"is_prime", false}, {"witness", witness_json(t, w)}, {"witness_rechecked", rechecked}};
        r.lines.push_back("witness: " + witness_label(t, w));
        if (const auto* m = std::get_if<ConfigMatch>(&w))
            for (const auto& s : m->satisfied)
                r.lines.push_back("  " + s);
        r.lines.push_back(std::string("witness re-check: ") + (rechecked ? "ok" : "FAILED"));
    });
}

auto cmd_discharge(const Input& in, const CommonOptions& opt) -> Report
{
    return guarded(start("discharge", in), [&](Report& r) {
        DTarget t = parse_target(in, opt);
        require_valid(t);
        auto report = charge_report(t);
        FaceStructure faces(t.graph());
        const auto& g = t.graph();

        json regions = json::array();
        r.lines.push_back("region  len  class               alpha   beta  gamma  total");
        for (const auto& c : report.regions) {
            regions.push_back({{"id", c.region},
                               {"length", c.length},
                               {"vertices", faces.region(c.region).vertices},
                               {"class", to_string(c.kind)},
                               {"alpha", c.alpha.over_two()},
                               {"beta", c.beta.over_two()},
                               {"gamma", c.gamma.over_two()},
                               {"total", c.total().over_two()}});
            char line[128];
            std::snprintf(line, sizeof line, "%6d  %3d  %-18s %6s %6s %6s %6s", c.region, c.length,
                          to_string(c.kind).c_str(), c.alpha.str().c_str(), c.beta.str().c_str(),
                          c.gamma.str().c_str(), c.total().str().c_str());
            r.lines.emplace_back(line);
        }
        json edges = json::array();
        for (EdgeId e = 0; e < t.edge_count(); ++e) {
            const auto& b = report.beta[e];
            const auto& gm = report.gamma[e];
            edges.push_back({{"edge", edge_json(g, e)},
                             {"mult", t.mult(e)},
                             {"regions", json::array({b.first, b.second})},
                             {"beta", {{"rule", b.rule}, {"to", json::array({b.to_first.over_two(), b.to_second.over_two()})}}},
                             {"gamma", {{"rule", gm.rule}, {"to", json::array({gm.to_first.over_two(), gm.to_second.over_two()})}}}});
            for (const auto* x : {&b, &gm}) {
                if (x->to_first == Half{})
                    continue;
                RegionId gets = x->to_first > Half{} ? x->first : x->second;
                RegionId gives = gets == x->first ? x->second : x->first;
                Half amount = x->to_first > Half{} ? x->to_first : x->to_second;
                r.lines.push_back(std::string(x == &b ? "beta" : "gamma") + " rule " + std::to_string(x->rule) +
                                  " on " + edge_label(g, e) + ": " + amount.str() + " from region " +
                                  std::to_string(gives) + " to region " + std::to_string(gets));
            }
        }
        json positive = json::array();
        std::vector<std::string> pos_labels;
        for (const auto& p : positive_regions(report)) {
            positive.push_back({{"region", p.region}, {"class", to_string(p.kind)}, {"total", p.total.over_two()}});
            pos_labels.push_back(std::to_string(p.region) + " (" + to_string(p.kind) + ", " + p.total.str() + ")");
        }
        r.details = {{"regions", regions},
                     {"edges", edges},
                     {"sums",
                      {{"alpha", report.alpha_sum.over_two()},
                       {"beta", report.beta_sum.over_two()},
                       {"gamma", report.gamma_sum.over_two()},
                       {"total", report.total_sum().over_two()}}},
                     {"positive_regions", positive}};
        r.lines.push_back("sums: alpha " + report.alpha_sum.str() + ", beta " + report.beta_sum.str() + ", gamma " +
                          report.gamma_sum.str() + ", total " + report.total_sum().str());
        r.lines.push_back("positive regions: " + (pos_labels.empty() ? std::string("none") : join(pos_labels, "; ")));
        r.verdict = "identities hold (alpha sum 16, beta sum 0, gamma sum 0)";
        r.exit_code = exit_ok;
    });
}

auto cmd_colour(const Input& in, const CommonOptions& opt) -> Report
{
    return guarded(start("colour", in), [&](Report& r) {
        DTarget t = parse_target(in, opt);
        auto colouring = edge_colour(t, opt.cap);
        const auto& g = t.graph();
        if (!colouring) {
            r.verdict = "infeasible: no " + std::to_string(t.d()) + "-edge-colouring";
            r.exit_code = exit_negative;
            r.details = {{"colourable", false}};
            return;
        }
        auto check = verify_colouring(t, *colouring);
        auto matching_json = [&](const Matching& m) {
            json out = json::array();
            for (EdgeId e : m)
                out.push_back(edge_json(g, e));
            return out;
        };
        auto matching_label = [&](const Matching& m) {
            std::vector<std::string> parts;
            for (EdgeId e : m)
                parts.push_back(edge_label(g, e));
            return "{" + join(parts, " ") + "}";
        };
        json matchings = json::array();
        for (std::size_t i = 0; i < colouring->matchings.size(); ++i) {
            matchings.push_back(matching_json(colouring->matchings[i]));
            r.lines.push_back("F" + std::to_string(i + 1) + " = " + matching_label(colouring->matchings[i]));
        }
        json weights = json::array();
        for (const auto& [m, count] : colouring->weights())
            weights.push_back({{"matching", matching_json(m)}, {"count", count}});
        r.details = {{"colourable", true}, {"verified", check.ok}, {"matchings", matchings}, {"weights", weights}};
        r.lines.push_back(std::string("verification: ") + (check.ok ? "ok" : "FAILED " + check.violation));
        r.verdict = std::to_string(colouring->matchings.size()) + " perfect matchings";
        r.exit_code = check.ok ? exit_ok : exit_contradiction;
    });
}

auto cmd_switch(const Input& in, const CommonOptions& opt, const SwitchOptions& sw) -> Report
{
    return guarded(start("switch", in), [&](Report& r) {
        DTarget t = parse_target(in, opt);
        if (sw.square.empty() == sw.path.empty())
            throw Error(ErrorCode::InvalidArgument, "give exactly one of --square or --path");
        const auto& seq = sw.square.empty() ? sw.path : sw.square;
        if (seq.size() != 4)
            throw Error(ErrorCode::InvalidArgument, "a move names exactly four vertices");
        Move move = sw.square.empty() ? Move{PathMove{seq[0], seq[1], seq[2], seq[3]}}
                                      : Move{SquareMove{seq[0], seq[1], seq[2], seq[3]}};
        DTarget result = apply_move(t, move);
        auto before = score_sequence(t);
        auto after = score_sequence(result);
        bool smaller = is_smaller(result, t);
        std::string kind = sw.square.empty() ? "path" : "square";
        r.details = {{"move", {{"kind", kind}, {"vertices", seq}}},
                     {"before", {{"vertices", t.vertex_count()}, {"edges", t.edge_count()}, {"score", score_json(before)}}},
                     {"after", {{"vertices", result.vertex_count()}, {"edges", result.edge_count()}, {"score", score_json(after)}}},
                     {"smaller", smaller}};
        r.lines.push_back("score before " + score_label(before));
        r.lines.push_back("score after  " + score_label(after));
        r.lines.push_back(std::string("result is ") + (smaller ? "" : "not ") + "smaller");
        std::string text = serialize_dtarget(result);
        if (sw.out) {
            std::ofstream file(*sw.out, std::ios::binary);
            if (!file || !(file << text))
                throw Error(ErrorCode::InvalidArgument, "cannot write " + *sw.out);
            r.details["output"] = *sw.out;
            r.lines.push_back("wrote " + *sw.out);
        } else {
            r.details["output_target"] = text;
            r.lines.push_back("resulting target:");
            std::istringstream lines(text);
            for (std::string line; std::getline(lines, line);)
                r.lines.push_back("  " + line);
        }
        r.verdict = "switched on " + kind + " " + std::to_string(seq[0]) + "-" + std::to_string(seq[1]) + "-" +
                    std::to_string(seq[2]) + "-" + std::to_string(seq[3]);
        r.exit_code = exit_ok;
    });
}

auto cmd_scan(const CommonOptions& opt, const ScanOptions& scan) -> Report
{
    int d = opt.d.value_or(config_d);
    std::ostringstream params;
    params << "scan d=" << d << " cap=" << opt.cap << " filter=" << scan.require_oddly_connected
           << " bases=" << join(scan.bases, ",");
    for (const auto& f : scan.extra_files)
        params << " file=" << f;

    Report report;
    report.command = "scan";
    return guarded(std::move(report), [&](Report& r) {
        CorpusSpec spec;
        spec.d = d;
        spec.max_vertices = opt.cap;
        spec.require_oddly_connected = scan.require_oddly_connected;
        spec.require_valid = true;
        if (scan.bases.empty()) {
            spec.bases = standard_bases();
        } else {
            for (const auto& name : scan.bases)
                spec.bases.push_back({name, base_graph(name)});
        }
        for (const auto& path : scan.extra_files) {
            auto in = load_input(path);
            params << " " << sha256_hex(in.content);
            spec.bases.push_back({path, parse_dtarget(in.content).graph()});
        }
        r.input_digest = sha256_hex(params.str());

        auto corpus = build_corpus(spec);
        bool check_prime = d == config_d;

        struct Outcome {
            bool oddly = false;
            bool colourable = false;
            bool verified = false;
            bool prime = false;
            bool recheck_ok = true;
            std::string witness;
            std::string error;
        };
        std::vector<Outcome> outcomes(corpus.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (std::size_t i = next++; i < corpus.size(); i = next++) {
                const DTarget& t = corpus[i].target;
                Outcome& o = outcomes[i];
                try {
                    o.oddly = t.vertex_count() % 2 == 0 && is_oddly_connected(t, opt.cap);
                    if (t.vertex_count() % 2 == 0) {
                        auto c = edge_colour(t, opt.cap);
                        o.colourable = c.has_value();
                        o.verified = c && verify_colouring(t, *c).ok;
                    }
                    if (check_prime && o.oddly) {
                        auto v = is_prime(t, opt.cap);
                        o.prime = v.is_prime;
                        if (v.witness) {
                            o.witness = witness_kind(*v.witness);
                            o.recheck_ok = recheck_witness(t, *v.witness);
                        }
                    }
                } catch (const Error& e) {
                    o.error = e.what();
                }
            }
        };
        int threads = scan.threads > 0 ? scan.threads : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();

        std::map<std::string, int> per_base;
        std::map<std::string, int> kinds;
        int prime = 0, uncolourable = 0, necessity = 0, recheck_failures = 0, errors = 0, oddly = 0, colourable = 0;
        json incidents = json::array();
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto& o = outcomes[i];
            const auto& entry = corpus[i];
            ++per_base[entry.base];
            auto tag = [&](const std::string& what) {
                incidents.push_back({{"base", entry.base}, {"ordinal", entry.ordinal}, {"issue", what}});
                r.lines.push_back(what + ": " + entry.base + " #" + std::to_string(entry.ordinal));
            };
            if (!o.error.empty()) {
                ++errors;
                tag("error " + o.error);
                continue;
            }
            oddly += o.oddly;
            colourable += o.verified;
            if (!o.witness.empty())
                ++kinds[o.witness];
            if (o.prime) {
                ++prime;
                tag("prime target");
            }
            if (!o.recheck_ok) {
                ++recheck_failures;
                tag("witness re-check failed");
            }
            if (o.oddly && !o.verified) {
                ++uncolourable;
                tag("oddly connected but not coloured");
            }
            if (o.colourable && !o.oddly) {
                ++necessity;
                tag("coloured but not oddly connected");
            }
        }
        json bases = json::object();
        for (const auto& [name, count] : per_base)
            bases[name] = count;
        json witness_counts = json::object();
        for (const auto& [kind, count] : kinds)
            witness_counts[kind] = count;
        r.details = {{"d", d},
                     {"filter_oddly_connected", scan.require_oddly_connected},
                     {"targets", corpus.size()},
                     {"per_base", bases},
                     {"oddly_connected", oddly},
                     {"coloured", colourable},
                     {"prime_checked", check_prime},
                     {"prime", prime},
                     {"witness_kinds", witness_counts},
                     {"witness_recheck_failures", recheck_failures},
                     {"uncolourable_oddly_connected", uncolourable},
                     {"coloured_not_oddly_connected", necessity},
                     {"errors", errors},
                     {"incidents", incidents}};
        std::vector<std::string> base_parts;
        for (const auto& [name, count] : per_base)
            base_parts.push_back(name + " " + std::to_string(count));
        r.lines.insert(r.lines.begin(), std::to_string(corpus.size()) + " targets (" + join(base_parts, ", ") + ")");
        std::vector<std::string> kind_parts;
        for (const auto& [kind, count] : kinds)
            kind_parts.push_back(kind + " " + std::to_string(count));
        if (check_prime)
            r.lines.insert(r.lines.begin() + 1, "non-prime witnesses: " + join(kind_parts, ", "));
        r.lines.insert(r.lines.begin() + (check_prime ? 2 : 1),
                       std::to_string(oddly) + " oddly connected, " + std::to_string(colourable) + " coloured");

        r.verdict = std::to_string(prime) + " prime, " + std::to_string(uncolourable) +
                    " uncolourable-but-oddly-connected";
        if (necessity)
            r.verdict += ", " + std::to_string(necessity) + " coloured-but-not-oddly-connected";
        if (errors)
            r.exit_code = exit_input_error;
        else if (prime || uncolourable || necessity || recheck_failures)
            r.exit_code = exit_contradiction;
        else
            r.exit_code = exit_ok;
    });
}

}  // namespace planarcol::cli
