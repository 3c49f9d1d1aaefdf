// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "commands.hpp"
#include "fourblocks/decomposition.hpp"
#include "fourblocks/generators.hpp"
#include "fourblocks/hamiltonian.hpp"
#include "fourblocks/serialize.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace fourblocks;

namespace {

// Pinned thresholds.
constexpr int kOracleInstances = 250;       // per pattern, criterion 1
constexpr int kFinalizeInstances = 500;     // criterion 2
constexpr int kFreeInstances = 200;         // per k, criteria 3 and 4
constexpr int kPlantedInstances = 60;       // per pattern, criterion 5
constexpr int kProductCases = 1200;         // criterion 7
constexpr double kLimit1 = 120, kLimit2 = 60, kLimit3 = 300, kLimit4 = 300, kLimit5 = 120, kLimit7 = 30, kLimit8 = 30;

struct Verdict {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            note << "first failure: " << what << "; ";
        }
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit, const std::function<void(Verdict&)>& body) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(v);
    } catch (const std::exception& e) {
        v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.require(secs < limit, "runtime over " + std::to_string(limit) + " s");
    std::cout << (v.ok ? "[PASS] " : "[FAIL] ") << id << ' ' << name << ": " << v.note.str() << std::fixed
              << std::setprecision(2) << secs << " s (limit " << limit << " s)" << std::endl;
    failures += v.ok ? 0 : 1;
}

bool same_witness_verdict(const Digraph& d, const CyclePattern& p, Verdict& v, int& found) {
    const auto fast = find_cycle_subdivision(d, p);
    const auto slow = oracle::naive_cycle_subdivision(d, p);
    v.require(fast.has_value() == slow.has_value(), "existence disagrees with naive enumeration");
    if (fast) {
        ++found;
        v.require(verify_subdivision(d, *fast, p).ok(), "returned witness fails verification");
    }
    return !slow.has_value();
}

std::string temp_dir(const std::string& tag) {
    const auto dir = std::filesystem::temp_directory_path() / ("fourblocks-acceptance-" + tag);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

int run_cmd(int (*cmd)(const cli::RunConfig&, std::ostream&, std::ostream&), const cli::RunConfig& cfg,
            std::string* out = nullptr) {
    std::ostringstream o;
    std::ostringstream e;
    const int code = cmd(cfg, o, e);
    if (out) {
        *out = o.str();
    }
    return code;
}

void oracle_equivalence(Verdict& v) {
    for (const CyclePattern& p : {CyclePattern(1, 1, 1, 1), CyclePattern(2, 1, 2, 1)}) {
        int found = 0;
        for (int i = 0; i < kOracleInstances; ++i) {
            SplitMix64 rng(0xACCE55ULL + static_cast<std::uint64_t>(i));
            const int n = 4 + static_cast<int>(rng.below(5));
            const Digraph d = testgen::random_digraph(rng, n, 1 + static_cast<int>(rng.below(3)), 8);
            same_witness_verdict(d, p, v, found);
        }
        v.require(found > 0 && found < kOracleInstances, "campaign lacks both outcomes");
        const auto& b = p.blocks();
        v.note << "C(" << b[0] << ',' << b[1] << ',' << b[2] << ',' << b[3] << ") " << kOracleInstances
               << " digraphs, " << found << " with witness; ";
    }
}

void finalization(Verdict& v) {
    int rotations = 0;
    for (int i = 0; i < kFinalizeInstances; ++i) {
        const auto seed = static_cast<std::uint64_t>(i);
        SplitMix64 rng(seed);
        const int n = 2 + static_cast<int>(rng.below(29));
        const int m = std::min(n * (n - 1), n + static_cast<int>(rng.below(static_cast<std::uint64_t>(2 * n))));
        const Digraph d = generate({Family::RandomStrong, n, m, seed, std::nullopt});
        const OutTree before = spanning_out_tree(d, 0);
        const OutTree after = finalize(d, before);
        rotations += before == after ? 0 : 1;
        v.require(after.is_spanning_tree_of(d), "finalized tree does not span");
        v.require(is_final(d, after) && oracle::naive_is_final(d, after.parents()), "output not final");
        for (Vertex x = 0; x < n; ++x) {
            v.require(after.level(x) >= before.level(x), "a level decreased");
        }
        for (const Arc& a : d.arcs()) {
            v.require(after.level(a.tail) != after.level(a.head), "arc joins equal levels");
        }
    }
    v.note << kFinalizeInstances << " strong digraphs (n <= 30), " << rotations << " needed rotations; ";
}

void main_theorem(Verdict& v) {
    for (int k = 1; k <= 2; ++k) {
        int free = 0;
        int tried = 0;
        int max_palette = 0;
        int max_d3 = 0;
        for (std::uint64_t seed = 0; free < kFreeInstances && seed < 20000; ++seed) {
            SplitMix64 rng(seed * 2 + static_cast<std::uint64_t>(k));
            const int n = 3 + static_cast<int>(rng.below(8));
            const int m = std::min(n * (n - 1), n + static_cast<int>(rng.below(static_cast<std::uint64_t>(n / 2 + 2))));
            const Family family = rng.below(2) ? Family::RandomStrong : Family::AncestorDigraph;
            const Digraph d = generate({family, n, m, seed, std::nullopt});
            ++tried;
            const CyclePattern p(k, 1, k, 1);
            if (oracle::naive_cycle_subdivision(d, p)) {
                continue;
            }
            ++free;
            const PipelineCertificate cert = color_strong_digraph(d, k, k);
            const auto* ok = std::get_if<ColoringWithinBound>(&cert.outcome);
            v.require(ok != nullptr, "subdivision-free input did not yield a colouring");
            if (!ok) {
                continue;
            }
            v.require(ok->bound == 36LL * 2 * k * (4 * k + 2), "bound differs from formula");
            v.require(is_proper(underlying_graph(d), ok->coloring), "colouring not proper (is_proper)");
            v.require(oracle::proper_on_arcs(d, ok->coloring.colors()), "colouring not proper (arc check)");
            v.require(ok->coloring.palette_size() <= ok->bound, "palette above bound");
            max_palette = std::max(max_palette, ok->coloring.palette_size());
            for (const auto& r : ok->classes) {
                v.require(r.d1_colors <= 6, "d1 above 6 colours");
                v.require(r.d2_colors <= 6, "d2 above 6 colours");
                v.require(r.d2_b2_max_out_degree <= 3, "B2 out-degree above 3");
                v.require(r.d3_colors <= 4 * k + 2, "d3 above 4k+2 colours");
                max_d3 = std::max(max_d3, r.d3_colors);
            }
        }
        v.require(free >= kFreeInstances, "too few subdivision-free instances for k=" + std::to_string(k));
        v.note << "k=" << k << ": " << free << "/" << tried << " free, max palette " << max_palette << " (bound "
               << main_bound(k) << "), max d3 " << max_d3 << "; ";
    }
}

void hamiltonian_check(Verdict& v) {
    for (int k = 1; k <= 2; ++k) {
        int free = 0;
        int tried = 0;
        int max_palette = 0;
        for (std::uint64_t seed = 0; free < kFreeInstances && seed < 20000; ++seed) {
            SplitMix64 rng(seed * 2 + static_cast<std::uint64_t>(k) + 1000);
            const int n = 4 + static_cast<int>(rng.below(11));
            const int m = n + 1 + static_cast<int>(rng.below(4));
            const Digraph d = generate({Family::RandomHamiltonian, n, m, seed, std::nullopt});
            ++tried;
            const CyclePattern p(k, 1, k, 1);
            if (oracle::naive_cycle_subdivision(d, p)) {
                continue;
            }
            ++free;
            const auto found = find_hamiltonian_cycle(d);
            v.require(found.has_value(), "no Hamiltonian cycle found in a Hamiltonian instance");
            if (!found) {
                continue;
            }
            const HamiltonianCycle& c = *found;
            const std::vector<Vertex>& order = c.order();
            const PeelCertificate cert = color_hamiltonian(d, c, k, k);
            const auto* col = std::get_if<Coloring>(&cert.outcome);
            v.require(col != nullptr, "peel stalled on a subdivision-free input");
            if (col) {
                v.require(oracle::proper_on_arcs(d, col->colors()), "colouring not proper");
                v.require(col->palette_size() <= 6 * k, "palette above 6k");
                max_palette = std::max(max_palette, col->palette_size());
            }
            v.require(check_chord_neighbor_bound(d, c, k).empty(), "chord neighbour bound violated");
            v.require(oracle::naive_chord_violations(d, order, k).empty(), "naive chord check found a violation");
        }
        v.require(free >= kFreeInstances, "too few subdivision-free instances for k=" + std::to_string(k));
        v.note << "k=" << k << ": " << free << "/" << tried << " free, max palette " << max_palette << " (bound "
               << 6 * k << "); ";
    }
}

void planted_converse(Verdict& v) {
    const std::string dir = temp_dir("planted");
    int subdivisions = 0;
    int colorings = 0;
    for (const auto& [k1, k3] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 1}}) {
        const CyclePattern p(k1, 1, k3, 1);
        for (int i = 0; i < kPlantedInstances; ++i) {
            SplitMix64 rng(static_cast<std::uint64_t>(i) * 7 + static_cast<std::uint64_t>(k1 * 10 + k3));
            // Every fourth instance is dense enough to push the pipeline into a failing stage.
            const bool dense = i % 4 == 3;
            const int n = dense ? 32 : p.total() + static_cast<int>(rng.below(6));
            const int m = dense ? 660 : n + 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
            const GenSpec spec{Family::PlantedSubdivision, n, m, static_cast<std::uint64_t>(i), p};
            const auto path = dir + "/p" + std::to_string(k1) + std::to_string(k3) + "-" + std::to_string(i) + ".dg";
            std::ofstream(path) << to_text(generate(spec));

            cli::RunConfig cfg;
            cfg.inputs = {path};
            cfg.k1 = k1;
            cfg.k3 = k3;
            cfg.json = true;
            std::string out;
            v.require(run_cmd(cli::cmd_find, cfg, &out) == cli::kExitOk, "find missed a plant");
            std::ofstream(path + ".witness") << out;
            cli::RunConfig check;
            check.inputs = {path, path + ".witness"};
            v.require(run_cmd(cli::cmd_verify, check) == cli::kExitOk, "verify rejected the found witness");

            const int code = run_cmd(cli::cmd_color, cfg, &out);
            const Json cert = Json::parse(out);
            if (code == cli::kExitNegative) {
                ++subdivisions;
                v.require(cert["outcome"] == "subdivision", "exit 3 without a subdivision outcome");
                v.require(verify_subdivision(read_digraph_file(path), witness_from_json(cert["witness"]), p).ok(),
                          "emitted witness fails verification");
            } else {
                ++colorings;
                v.require(code == cli::kExitOk && cert["outcome"] == "coloring", "colour run neither coloured nor certified");
                v.require(oracle::proper_on_arcs(read_digraph_file(path), cert["colors"].get<std::vector<int>>()),
                          "colouring not proper");
            }
            std::ofstream(path + ".cert") << out;
            check.inputs = {path, path + ".cert"};
            v.require(run_cmd(cli::cmd_verify, check) == cli::kExitOk, "verify rejected the colour certificate");
        }
    }
    std::filesystem::remove_all(dir);
    v.require(subdivisions > 0, "no run exercised the subdivision outcome");
    v.note << "4 patterns x " << kPlantedInstances << " plants all found and verified; colour runs: " << colorings
           << " colourings, " << subdivisions << " subdivisions; ";
}

void fixed_points(Verdict& v) {
    const Digraph tt4 = testgen::transitive_tournament(4);
    const CyclePattern p(1, 1, 1, 1);
    const auto brute = oracle::naive_cycle_subdivision(tt4, p);
    v.require(brute.has_value(), "naive enumeration finds no C(1,1,1,1) in TT_4");
    const auto w = find_cycle_subdivision(tt4, p);
    v.require(w.has_value() && verify_subdivision(tt4, *w, p).ok(), "find misses C(1,1,1,1) in TT_4");
    if (w) {
        const std::array<std::vector<Vertex>, 4> expected{std::vector<Vertex>{0, 2}, {1, 2}, {1, 3}, {0, 3}};
        v.require(w->paths == expected, "TT_4 witness differs from {0->2, 1->2, 1->3, 0->3}");
    }
    int cycles = 0;
    for (int n = 2; n <= 16; ++n) {
        for (int k1 = 1; k1 <= 4; ++k1) {
            for (int k3 = 1; k3 <= 4; ++k3) {
                ++cycles;
                v.require(!find_cycle_subdivision(testgen::cycle(n), CyclePattern(k1, 1, k3, 1)),
                          "directed cycle contains a subdivision");
                if (n <= 8) {
                    v.require(!oracle::naive_cycle_subdivision(testgen::cycle(n), CyclePattern(k1, 1, k3, 1)),
                              "naive enumeration finds a subdivision in a directed cycle");
                }
            }
        }
    }
    v.note << "TT_4 witness matches; " << cycles << " cycle/pattern pairs empty; ";
}

void product_law(Verdict& v) {
    SplitMix64 rng(0x9A0D);
    int max_palette = 0;
    for (int i = 0; i < kProductCases; ++i) {
        const int n = 1 + static_cast<int>(rng.below(14));
        std::vector<Vertex> v1;
        std::vector<Vertex> v2;
        for (Vertex x = 0; x < n; ++x) {
            const auto r = rng.below(3);
            if (r != 1) {
                v1.push_back(x);
            }
            if (r != 0) {
                v2.push_back(x);
            }
        }
        auto random_edges = [&](const std::vector<Vertex>& vs) {
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (std::size_t a = 0; a < vs.size(); ++a) {
                for (std::size_t b = a + 1; b < vs.size(); ++b) {
                    if (rng.below(3) == 0) {
                        edges.emplace_back(vs[a], vs[b]);
                    }
                }
            }
            return edges;
        };
        const auto e1 = random_edges(v1);
        const auto e2 = random_edges(v2);
        const UGraph g1(n, e1);
        const UGraph g2(n, e2);
        auto color_on = [&](const UGraph& g, const std::vector<Vertex>& vs) {
            std::vector<Vertex> global;
            const UGraph local = g.induced(vs, &global);
            const Coloring lc = rng.below(2) ? greedy_color(local, degeneracy_order(local)) : dsatur_color(local);
            std::vector<Color> colors(static_cast<std::size_t>(n), kUncolored);
            for (std::size_t j = 0; j < global.size(); ++j) {
                // Spread the ids so normalization is exercised.
                colors[static_cast<std::size_t>(global[j])] = 3 * lc[static_cast<Vertex>(j)] + 1;
            }
            return Coloring(colors);
        };
        const Coloring c1 = color_on(g1, v1);
        const Coloring c2 = color_on(g2, v2);
        const Coloring c = product_coloring(c1, c2, v1, v2);
        std::vector<int> in_union(static_cast<std::size_t>(n), 0);
        for (Vertex x : v1) {
            in_union[static_cast<std::size_t>(x)] = 1;
        }
        for (Vertex x : v2) {
            in_union[static_cast<std::size_t>(x)] = 1;
        }
        for (Vertex x = 0; x < n; ++x) {
            v.require((c[x] != kUncolored) == (in_union[static_cast<std::size_t>(x)] == 1), "domain mismatch");
        }
        for (const auto& edges : {e1, e2}) {
            for (const auto& [a, b] : edges) {
                v.require(c[a] != c[b], "product colouring improper on the union");
            }
        }
        const int bound = std::max(1, c1.palette_size()) * std::max(1, c2.palette_size());
        v.require(c.palette_size() <= bound, "palette above chi1 * chi2");
        max_palette = std::max(max_palette, c.palette_size());
    }
    v.note << kProductCases << " cases, max palette " << max_palette << "; ";
}

void determinism(Verdict& v) {
    const std::string dir = temp_dir("determinism");
    auto twice = [&](const std::function<std::string(int)>& produce, const std::string& what) {
        v.require(produce(0) == produce(1), what + " differs between runs");
    };
    int files = 0;
    for (const char* family : {"cycle", "strong", "hamiltonian", "tournament", "planted", "ancestor"}) {
        for (std::uint64_t seed : {1ULL, 99ULL}) {
            twice(
                [&](int run) {
                    cli::RunConfig cfg;
                    cfg.family = family;
                    cfg.n = 11;
                    cfg.seed = seed;
                    cfg.k1 = 2;
                    cfg.output = dir + "/" + family + std::to_string(seed) + "-" + std::to_string(run) + ".dg";
                    run_cmd(cli::cmd_gen, cfg);
                    ++files;
                    return slurp(cfg.output) + slurp(cfg.output + ".json");
                },
                std::string("instance file for ") + family);
        }
    }
    const std::string instance = dir + "/strong1-0.dg";
    const std::string ham = dir + "/hamiltonian1-0.dg";
    for (auto cmd : {cli::cmd_color, cli::cmd_find}) {
        twice(
            [&](int) {
                cli::RunConfig cfg;
                cfg.inputs = {instance};
                cfg.json = true;
                std::string out;
                run_cmd(cmd, cfg, &out);
                return out;
            },
            "certificate");
    }
    twice(
        [&](int) {
            cli::RunConfig cfg;
            cfg.inputs = {ham};
            cfg.json = true;
            std::string out;
            run_cmd(cli::cmd_color_ham, cfg, &out);
            return out;
        },
        "peel certificate");
    twice(
        [&](int run) {
            cli::RunConfig cfg;
            cfg.family = "all";
            cfg.count = 25;
            cfg.jobs = run == 0 ? 1 : 4;
            std::string out;
            run_cmd(cli::cmd_stress, cfg, &out);
            return out;
        },
        "stress summary");
    std::filesystem::remove_all(dir);
    v.note << files << " instance files and all certificates byte-identical across runs; ";
}

}  // namespace

int main() {
    criterion(1, "oracle equivalence", kLimit1, oracle_equivalence);
    criterion(2, "finalization", kLimit2, finalization);
    criterion(3, "main-theorem desk check", kLimit3, main_theorem);
    criterion(4, "hamiltonian desk check", kLimit4, hamiltonian_check);
    criterion(5, "certificate soundness converse", kLimit5, planted_converse);
    criterion(6, "fixed-point examples", 30, fixed_points);
    criterion(7, "product-coloring law", kLimit7, product_law);
    criterion(8, "determinism", kLimit8, determinism);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion/criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
