#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fourblocks/digraph.hpp"
#include "fourblocks/out_tree.hpp"
#include "fourblocks/witness.hpp"

namespace fourblocks {

class NotFinalTree : public std::logic_error {
public:
    NotFinalTree() : std::logic_error("out-tree is not final for the digraph") {}
};

class NotAcyclic : public std::logic_error {
public:
    NotAcyclic() : std::logic_error("backward-to-ancestor arc set contains a directed cycle") {}
};

class NotStronglyConnected : public std::invalid_argument {
public:
    NotStronglyConnected() : std::invalid_argument("digraph is not strongly connected") {}
};

/// Residue classes of tree levels modulo 2k. classes[i - 1] holds V_i, i.e. every
/// vertex whose level is congruent to i (residue 0 goes to the last class).
struct LevelClasses {
    int k = 1;
    std::vector<std::vector<Vertex>> classes;
};

/// Arcs of the subdigraph induced by one level class, split by tree ancestry:
/// a1 goes down to a descendant, a2 goes up to an ancestor, a3 is everything else.
struct ArcPartition {
    std::vector<Arc> a1;
    std::vector<Arc> a2;
    std::vector<Arc> a3;
};

/// Degree-5 peel got stuck: `core` (local ids) has minimum degree >= 6.
struct WheelCoreFailure {
    std::vector<Vertex> core;
    std::optional<WheelWitness> wheel;  // absent when the wheel search ran out of budget
};

struct D2Coloring {
    Coloring coloring;
    std::vector<char> in_b2;    // out-degree >= 2 in the whole class subdigraph
    int b2_max_out_degree = 0;  // maximum out-degree inside B2
};

/// A vertex of B2 with at least four out-neighbours inside B2, listed root first.
struct OutDegreeFailure {
    Vertex vertex = 0;
    std::vector<Vertex> out_neighbors;
};

LevelClasses level_classes(const OutTree& t, int k);

/// Throws NotFinalTree if `t` is not final for `d`.
ArcPartition arc_partition(const Digraph& d, const OutTree& t, std::span<const Vertex> cls);

/// Colours the descending-arc subdigraph with at most 6 colours by peeling vertices of
/// degree <= 5, or reports the stuck core.
std::variant<Coloring, WheelCoreFailure> color_d1(const Digraph& d1, std::uint64_t budget = kDefaultBudget);

/// Colours the ascending-arc subdigraph with at most 6 colours: 2 for vertices of
/// out-degree <= 1 and 4 for the rest. `level` gives each local vertex its tree level and
/// is only used to order the out-neighbours in a failure report. Throws NotAcyclic.
std::variant<D2Coloring, OutDegreeFailure> color_d2(const Digraph& d2, std::span<const int> level);

/// Colours the remaining arcs with at most 4k+2 colours (saturation greedy, then exact
/// search). If none exists, returns a P(2k+1, 2k+1) found in `d3`. Throws BudgetExceeded.
std::variant<Coloring, TwoBlockPathWitness> color_d3(const Digraph& d3, int k, std::uint64_t budget = kDefaultBudget);

/// DSATUR greedy colouring of `g`.
Coloring dsatur_color(const UGraph& g);

/// Exact search for a proper colouring of `g` with at most `colors` colours.
/// Throws BudgetExceeded.
std::optional<Coloring> exact_color(const UGraph& g, int colors, std::uint64_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------------------
// End-to-end pipeline.

inline long long class_bound(int k) { return 36LL * (4LL * k + 2); }
inline long long main_bound(int k) { return 2LL * k * class_bound(k); }

struct ClassReport {
    int index = 0;  // 1-based class index i of V_i
    int size = 0;
    int d1_colors = 0;
    int d2_colors = 0;
    int d2_b2_max_out_degree = 0;
    int d3_colors = 0;
    int combined_colors = 0;
};

struct ColoringWithinBound {
    Coloring coloring;
    long long bound = 0;
    long long class_bound = 0;
    std::vector<ClassReport> classes;
};

struct SubdivisionFound {
    SubdivisionWitness witness;
    std::string stage;  // sub-stage whose failure triggered the search
};

struct Inconclusive {
    std::string stage;
    std::string reason;
};

struct PipelineCertificate {
    int k1 = 1;
    int k3 = 1;
    std::variant<ColoringWithinBound, SubdivisionFound, Inconclusive> outcome;
};

/// Colours a strong digraph within 36 * 2k * (4k+2) colours, k = max(k1, k3), or
/// certifies a subdivision of C(k1,1,k3,1). Throws NotStronglyConnected.
PipelineCertificate color_strong_digraph(const Digraph& d, int k1, int k3, std::uint64_t budget = kDefaultBudget);

}  // namespace fourblocks
