#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "fourblocks/digraph.hpp"
#include "fourblocks/witness.hpp"

namespace fourblocks {

/// Directed Hamiltonian cycle v_0 -> v_1 -> ... -> v_{n-1} -> v_0 of a host digraph.
class HamiltonianCycle {
public:
    /// Throws std::invalid_argument unless `order` is a Hamiltonian cycle of `d`.
    HamiltonianCycle(const Digraph& d, std::vector<Vertex> order);

    const std::vector<Vertex>& order() const noexcept { return order_; }
    int size() const noexcept { return static_cast<int>(order_.size()); }
    int position(Vertex v) const { return position_.at(static_cast<std::size_t>(v)); }
    Vertex at(int index) const;  // cyclic index
    Vertex successor(Vertex v) const { return at(position(v) + 1); }

    /// Number of steps forward along the cycle from a to b (0 when a == b).
    int distance(Vertex a, Vertex b) const;
    /// Vertices of the open segment ]a, b[ walking forward from a.
    std::vector<Vertex> open_segment(Vertex a, Vertex b) const;
    /// True iff {u, v} is an edge of the cycle itself.
    bool is_cycle_edge(Vertex u, Vertex v) const;

    static bool is_valid(const Digraph& d, const std::vector<Vertex>& order);

private:
    std::vector<Vertex> order_;
    std::vector<int> position_;
};

/// Backtracking search from vertex 0. Throws BudgetExceeded.
std::optional<HamiltonianCycle> find_hamiltonian_cycle(const Digraph& d, std::uint64_t budget = kDefaultBudget);

/// Peel stalled: every vertex of `core` has at least `min_degree` neighbours inside it.
struct StallCore {
    std::vector<Vertex> core;
    int min_degree = 0;
    std::optional<SubdivisionWitness> witness;
    bool search_exhausted = false;  // subdivision search ran out of budget
};

struct PeelCertificate {
    int k1 = 1;
    int k3 = 1;
    std::variant<Coloring, StallCore> outcome;
};

/// Removes vertices of degree <= 6k-1 (k = max(k1, k3)) and colours first-fit in reverse,
/// giving at most 6k colours. A stall leaves a core of minimum degree >= 6k and triggers a
/// search for a subdivision of C(k,1,k,1), attached when found.
PeelCertificate color_hamiltonian(const Digraph& d, const HamiltonianCycle& c, int k1, int k3,
                                  std::uint64_t budget = kDefaultBudget);

struct ChordViolation {
    Vertex u = 0;
    Vertex v = 0;
    Vertex w = 0;
    int count = 0;

    friend bool operator==(const ChordViolation&, const ChordViolation&) = default;
};

/// Neighbour bound around reversed chords.
///
/// For every non-cycle edge uv with (v, u) an arc, every w strictly inside C]u, v[, and
/// the window C]x, x'[ where C[v, x] and C[x', u] each hold k vertices, reports
/// (u, v, w) whenever w has more than two neighbours in the window. Pairs whose window
/// would be empty or inverted are skipped.
std::vector<ChordViolation> check_chord_neighbor_bound(const Digraph& d, const HamiltonianCycle& c, int k);

}  // namespace fourblocks
