#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using fourblocks::cli::RunConfig;

std::array<int, 4> parse_pattern(const std::string& text) {
    std::array<int, 4> blocks{};
    std::istringstream in(text);
    std::string part;
    std::size_t i = 0;
    while (std::getline(in, part, ',')) {
        if (i == 4) {
            throw CLI::ValidationError("--pattern", "expected four comma-separated lengths");
        }
        blocks[i++] = std::stoi(part);
    }
    if (i != 4) {
        throw CLI::ValidationError("--pattern", "expected four comma-separated lengths");
    }
    return blocks;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colour strongly connected digraphs or certify a subdivided four-block cycle"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string pattern;
    std::uint64_t budget = 0;

    auto add_lengths = [&](CLI::App* sub) {
        sub->add_option("--k1", cfg.k1, "first block length of C(k1,1,k3,1)")->check(CLI::PositiveNumber);
        sub->add_option("--k3", cfg.k3, "third block length of C(k1,1,k3,1)")->check(CLI::PositiveNumber);
        sub->add_option("--budget", budget, "search-node cap (default FOURBLOCKS_BUDGET or 10000000)")
            ->check(CLI::PositiveNumber);
    };

    auto* color = app.add_subcommand("color", "colour a strong digraph or return a subdivision");
    color->add_option("digraph", cfg.inputs, "digraph file")->required();
    add_lengths(color);
    color->add_flag("--json", cfg.json, "print the certificate as JSON");

    auto* ham = app.add_subcommand("color-ham", "peel-colour a Hamiltonian digraph");
    ham->add_option("digraph", cfg.inputs, "digraph file")->required();
    add_lengths(ham);
    ham->add_option("--cycle", cfg.cycle, "file listing the Hamiltonian cycle");
    ham->add_flag("--json", cfg.json, "print the certificate as JSON");

    auto* chords = app.add_subcommand("chords", "check the reversed-chord neighbour bound on a Hamiltonian digraph");
    chords->add_option("digraph", cfg.inputs, "digraph file")->required();
    add_lengths(chords);
    chords->add_option("--cycle", cfg.cycle, "file listing the Hamiltonian cycle");
    chords->add_flag("--json", cfg.json, "print violations as JSON");

    auto* find = app.add_subcommand("find", "search for a subdivision of C(k1,1,k3,1) or --pattern");
    find->add_option("digraph", cfg.inputs, "digraph file")->required();
    add_lengths(find);
    find->add_option("--pattern", pattern, "block lengths a,b,c,d");
    find->add_flag("--json", cfg.json, "print the witness as JSON");

    auto* verify = app.add_subcommand("verify", "re-check a certificate or witness against a digraph");
    verify->add_option("files", cfg.inputs, "digraph file and certificate file")->required()->expected(2);

    auto* gen = app.add_subcommand("gen", "generate a seeded instance");
    gen->add_option("--family", cfg.family, "cycle, strong, hamiltonian, tournament, planted or ancestor");
    gen->add_option("--n", cfg.n, "vertex count")->check(CLI::PositiveNumber);
    gen->add_option("--m", cfg.m, "arc count (family default when omitted)")->check(CLI::NonNegativeNumber);
    gen->add_option("--seed", cfg.seed, "generator seed");
    gen->add_option("--k1", cfg.k1, "planted pattern C(k1,1,k3,1)")->check(CLI::PositiveNumber);
    gen->add_option("--k3", cfg.k3, "planted pattern C(k1,1,k3,1)")->check(CLI::PositiveNumber);
    gen->add_option("--pattern", pattern, "planted block lengths a,b,c,d");
    gen->add_option("-o,--out", cfg.output, "write the instance here and the spec to <out>.json");

    auto* stress = app.add_subcommand("stress", "run seeded property campaigns");
    stress->add_option("--family", cfg.family, "strong, ancestor, hamiltonian, planted or all");
    stress->add_option("--count", cfg.count, "instances per family and k")->check(CLI::PositiveNumber);
    stress->add_option("--seed", cfg.seed, "first seed");
    stress->add_option("--n", cfg.n, "largest vertex count")->check(CLI::PositiveNumber);
    auto* sk1 = stress->add_option("--k1", cfg.k1, "run only k = k1 (default sweeps 1 and 2)")->check(CLI::PositiveNumber);
    auto* sk3 = stress->add_option("--k3", cfg.k3, "must equal --k1")->check(CLI::PositiveNumber);
    stress->add_option("--budget", budget, "search-node cap")->check(CLI::PositiveNumber);
    stress->add_option("--dump", cfg.dump_dir, "directory for failing instances");
    stress->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

    cfg.family = "strong";
    try {
        app.parse(argc, argv);
        if (!pattern.empty()) {
            cfg.pattern = parse_pattern(pattern);
        }
        cfg.budget = budget > 0 ? budget : fourblocks::cli::budget_from_env(fourblocks::kDefaultBudget);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fourblocks::cli::kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return fourblocks::cli::kExitInput;
    }
    cfg.k_given = sk1->count() > 0 || sk3->count() > 0;

    if (color->parsed()) {
        return fourblocks::cli::cmd_color(cfg, std::cout, std::cerr);
    }
    if (ham->parsed()) {
        return fourblocks::cli::cmd_color_ham(cfg, std::cout, std::cerr);
    }
    if (chords->parsed()) {
        return fourblocks::cli::cmd_chords(cfg, std::cout, std::cerr);
    }
    if (find->parsed()) {
        return fourblocks::cli::cmd_find(cfg, std::cout, std::cerr);
    }
    if (verify->parsed()) {
        return fourblocks::cli::cmd_verify(cfg, std::cout, std::cerr);
    }
    if (gen->parsed()) {
        return fourblocks::cli::cmd_gen(cfg, std::cout, std::cerr);
    }
    if (stress->parsed()) {
        if (cfg.family == "strong" && stress->count("--family") == 0) {
            cfg.family = "all";
        }
        return fourblocks::cli::cmd_stress(cfg, std::cout, std::cerr);
    }
    return fourblocks::cli::kExitInput;
}
