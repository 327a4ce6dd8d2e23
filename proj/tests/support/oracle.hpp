#pragma once
// Brute-force reference implementations used to cross-check the library.
// Nothing here calls into the config, cuts or coloring modules: faces are
// retraced from the rotation system and every predicate is recomputed from
// an adjacency matrix.
#include "planarcol/config.hpp"
#include "planarcol/planar_core.hpp"

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using planarcol::DTarget;
using planarcol::RotationGraph;

/// Adjacency-matrix view of a target with independently traced faces.
class View {
public:
    explicit View(const DTarget& t);

    int n = 0;
    int d = 0;
    std::vector<std::vector<int>> mult;     // -1 when absent
    std::vector<std::vector<int>> faces;    // boundary vertex cycles, ids by lowest dart

    auto adjacent(int a, int b) const -> bool { return mult[a][b] >= 0; }
    auto m(int a, int b) const -> int { return mult[a][b]; }
    auto deg(int v) const -> int;
    auto length(int f) const -> int { return static_cast<int>(faces[f].size()); }
    auto face_edges(int f) const -> std::vector<std::pair<int, int>>;
    auto on_face(int f, int a, int b) const -> bool;
    auto has_vertex(int f, int v) const -> bool;
    /// The two faces bordering ab.
    auto faces_of(int a, int b) const -> std::pair<int, int>;
    auto across(int a, int b, int f) const -> int;

    auto door(int a, int b, int f) const -> bool;
    auto door_count(int f) const -> int;
    auto big(int f) const -> bool { return door_count(f) >= 4; }
    auto mplus(int a, int b, const std::vector<int>& disc) const -> std::optional<int>;
    auto heavy(int a, int b, int f, int level) const -> bool;
    auto tough(int f) const -> bool;

private:
    std::vector<std::vector<std::pair<int, int>>> darts_;  // per face
};

/// Face cycles traced straight from rotations, numbered by lowest dart.
auto trace_faces(const RotationGraph& g) -> std::vector<std::vector<int>>;

struct Labelled {
    std::vector<int> vertices;
    std::vector<int> regions;
    friend auto operator<=>(const Labelled&, const Labelled&) = default;
};

/// Every labelled occurrence of Conf(k), with no symmetry reduction.
auto all_occurrences(const View& view, int conf) -> std::set<Labelled>;
/// Least element of the orbit under the configuration's automorphisms.
auto canonical(int conf, const Labelled& x) -> Labelled;

/// Empty when the detector's output equals the oracle's orbit
/// representatives; otherwise a description of the first disagreement.
auto compare_detector(const DTarget& t, int conf, const std::vector<planarcol::ConfigMatch>& found) -> std::string;

struct OddCut {
    std::vector<int> set;
    int value = 0;
};
/// Minimum over all odd subsets, ties to the lexicographically least set.
auto min_odd_cut(const DTarget& t) -> OddCut;
auto cut_value(const DTarget& t, unsigned mask) -> int;

/// Twice the alpha, beta and gamma charge of every face, evaluated straight
/// from the rule chains. An ambiguous m-plus makes its condition fail.
struct Charges {
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<int> gamma;
    auto total(int f) const -> int { return alpha[f] + beta[f] + gamma[f]; }
};
auto charges(const View& view) -> Charges;

/// All perfect matchings as sorted vertex-pair lists.
auto perfect_matchings(const RotationGraph& g) -> std::vector<std::vector<std::pair<int, int>>>;

}  // namespace oracle
