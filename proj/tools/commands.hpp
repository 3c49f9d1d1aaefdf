#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fourblocks/witness.hpp"

namespace fourblocks::cli {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;          // parse errors, malformed certificates, bad flags
inline constexpr int kExitNotStrong = 2;
inline constexpr int kExitNegative = 3;       // subdivision found / not found / rejected / property failed
inline constexpr int kExitInconclusive = 4;   // budget exhausted or no claim to check
inline constexpr int kExitNoHamiltonian = 5;

struct RunConfig {
    std::vector<std::string> inputs;
    int k1 = 1;
    int k3 = 1;
    bool k_given = false;  // stress sweeps k = 1, 2 unless a k was passed
    std::optional<std::array<int, 4>> pattern;
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    bool json = false;
    std::optional<std::string> cycle;
    std::string family = "strong";
    int count = 200;
    int n = 10;
    int m = -1;  // family default when negative
    std::string output;
    std::string dump_dir = "stress-failures";
    unsigned jobs = 1;
};

/// Budget from FOURBLOCKS_BUDGET when set, otherwise `fallback`.
std::uint64_t budget_from_env(std::uint64_t fallback);

int cmd_color(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_color_ham(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_chords(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_find(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_stress(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace fourblocks::cli
