#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourblocks/digraph.hpp"
#include "fourblocks/witness.hpp"

namespace fourblocks {

/// SplitMix64 (Steele, Lea, Flood). Constants:
///   increment 0x9E3779B97F4A7C15, multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB,
///   shifts 30, 27, 31.
/// below(b) rejects draws under (2^64 - b) mod b and returns draw mod b, so any
/// implementation following the same steps reproduces the same instances.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound);
    /// Child stream seeded from the next draw.
    SplitMix64 split() { return SplitMix64(next()); }

    /// Fisher-Yates, walking i from the back and swapping with below(i + 1).
    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[static_cast<std::size_t>(below(i))]);
        }
    }

private:
    std::uint64_t state_;
};

enum class Family { DirectedCycle, RandomStrong, RandomHamiltonian, TransitiveTournament, PlantedSubdivision, AncestorDigraph };

std::string to_string(Family f);
/// Accepts the names produced by to_string ("cycle", "strong", ...). Throws std::invalid_argument.
Family parse_family(const std::string& name);

struct GenSpec {
    Family family = Family::RandomStrong;
    int n = 1;
    int m = 0;
    std::uint64_t seed = 0;
    std::optional<CyclePattern> pattern;
};

class InfeasibleSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct GeneratedInstance {
    Digraph digraph;
    std::optional<SubdivisionWitness> planted;  // PlantedSubdivision only
};

/// Deterministic in the spec. Throws InfeasibleSpec.
GeneratedInstance generate_instance(const GenSpec& spec);
inline Digraph generate(const GenSpec& spec) { return generate_instance(spec).digraph; }

/// Compact JSON object recording the spec.
std::string spec_json(const GenSpec& spec);

}  // namespace fourblocks
