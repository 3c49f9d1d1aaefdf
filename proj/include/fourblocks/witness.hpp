#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourblocks/digraph.hpp"

namespace fourblocks {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// A bounded search ran out of nodes; its answer is unknown, not negative.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(std::uint64_t nodes);
    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

class SearchBudget {
public:
    explicit SearchBudget(std::uint64_t limit) : limit_(limit) {}

    void charge() {
        if (++used_ > limit_) {
            throw BudgetExceeded(used_);
        }
    }
    std::uint64_t used() const noexcept { return used_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

/// Block lengths (k1, k2, k3, k4) of a four-block oriented cycle, read around the cycle.
class CyclePattern {
public:
    CyclePattern(int k1, int k2, int k3, int k4);
    explicit CyclePattern(const std::array<int, 4>& blocks) : CyclePattern(blocks[0], blocks[1], blocks[2], blocks[3]) {}

    int operator[](std::size_t i) const { return blocks_.at(i); }
    const std::array<int, 4>& blocks() const noexcept { return blocks_; }
    int total() const noexcept { return blocks_[0] + blocks_[1] + blocks_[2] + blocks_[3]; }
    /// Invariant under swapping the two source/sink pairs, i.e. k1 == k3 and k2 == k4.
    bool half_turn_symmetric() const noexcept { return blocks_[0] == blocks_[2] && blocks_[1] == blocks_[3]; }

    friend bool operator==(const CyclePattern&, const CyclePattern&) = default;

private:
    std::array<int, 4> blocks_;
};

/// Four directed paths forming a subdivided four-block cycle.
///
/// junctions = {source1, sink1, source2, sink2}; paths are stored tail first:
///   paths[0]: source1 -> sink1   (block 1)
///   paths[1]: source2 -> sink1   (block 2)
///   paths[2]: source2 -> sink2   (block 3)
///   paths[3]: source1 -> sink2   (block 4)
struct SubdivisionWitness {
    CyclePattern pattern{1, 1, 1, 1};
    std::array<std::vector<Vertex>, 4> paths;
    std::array<Vertex, 4> junctions{};

    friend bool operator==(const SubdivisionWitness&, const SubdivisionWitness&) = default;
};

enum class WitnessDefect {
    None,
    MalformedPath,
    EndpointMismatch,
    DuplicateJunction,
    MissingArc,
    PathTooShort,
    NotInternallyDisjoint,
};

std::string to_string(WitnessDefect defect);

struct WitnessCheck {
    WitnessDefect defect = WitnessDefect::None;
    std::string detail;

    bool ok() const noexcept { return defect == WitnessDefect::None; }
    explicit operator bool() const noexcept { return ok(); }
};

/// Two directed paths from a common origin, disjoint apart from it.
struct TwoBlockPathWitness {
    std::vector<Vertex> first;
    std::vector<Vertex> second;
};

/// Cycle of an undirected graph plus an outside centre with `spokes` on the cycle.
struct WheelWitness {
    std::vector<Vertex> cycle;
    Vertex center = 0;
    std::vector<Vertex> spokes;
};

/// Exhaustive search for a subdivision of C(k1,k2,k3,k4) in `d`.
///
/// Walks the oriented cycle as source1 => sink1 <= source2 => sink2 <= source1,
/// iteratively deepening on the total cycle length so the first witness found has
/// the fewest vertices. Throws BudgetExceeded when `budget` search nodes are spent.
std::optional<SubdivisionWitness> find_cycle_subdivision(const Digraph& d, const CyclePattern& p,
                                                         std::uint64_t budget = kDefaultBudget);

/// Independent re-check of every witness invariant against `d` and the block minima of `p`.
WitnessCheck verify_subdivision(const Digraph& d, const SubdivisionWitness& w, const CyclePattern& p);

/// Searches for P(a, b): two directed paths of lengths >= a and >= b from a common origin.
std::optional<TwoBlockPathWitness> find_two_block_path(const Digraph& d, int a, int b,
                                                       std::uint64_t budget = kDefaultBudget);
bool verify_two_block_path(const Digraph& d, const TwoBlockPathWitness& w, int a, int b);

/// Searches for a k-wheel (k >= 3): a centre with >= k neighbours on a cycle avoiding it.
std::optional<WheelWitness> find_k_wheel(const UGraph& g, int k, std::uint64_t budget = kDefaultBudget);
bool verify_wheel(const UGraph& g, const WheelWitness& w, int k);

}  // namespace fourblocks
