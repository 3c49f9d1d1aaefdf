#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "fourblocks/decomposition.hpp"
#include "fourblocks/generators.hpp"
#include "fourblocks/hamiltonian.hpp"
#include "fourblocks/serialize.hpp"

namespace fourblocks::cli {

namespace {

// Thrown by the helpers below; carries the exit code the command should return.
struct Abort {
    int code;
};

Digraph load_digraph(const std::string& path, std::ostream& err) {
    try {
        return read_digraph_file(path);
    } catch (const ParseError& e) {
        err << path << ": " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << path << ": " << e.what() << '\n';
    }
    throw Abort{kExitInput};
}

const std::string& single_input(const RunConfig& cfg, std::size_t wanted, std::ostream& err) {
    if (cfg.inputs.size() != wanted) {
        err << "expected " << wanted << " input file(s), got " << cfg.inputs.size() << '\n';
        throw Abort{kExitInput};
    }
    return cfg.inputs.front();
}

void check_lengths(const RunConfig& cfg, std::ostream& err) {
    if (cfg.k1 < 1 || cfg.k3 < 1 || cfg.budget < 1) {
        err << "k1, k3 and budget must be at least 1\n";
        throw Abort{kExitInput};
    }
}

CyclePattern search_pattern(const RunConfig& cfg) {
    if (cfg.pattern) {
        return CyclePattern(*cfg.pattern);
    }
    return CyclePattern(cfg.k1, 1, cfg.k3, 1);
}

void print_list(std::ostream& out, const std::vector<int>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << (i ? " " : "") << values[i];
    }
    out << '\n';
}

void print_witness_text(std::ostream& out, const SubdivisionWitness& w) {
    const auto& b = w.pattern.blocks();
    out << "pattern: " << b[0] << ',' << b[1] << ',' << b[2] << ',' << b[3] << '\n';
    out << "junctions: ";
    print_list(out, {w.junctions.begin(), w.junctions.end()});
    for (std::size_t i = 0; i < 4; ++i) {
        out << "path " << i + 1 << ": ";
        print_list(out, w.paths[i]);
    }
}

int emit_pipeline(const RunConfig& cfg, const PipelineCertificate& cert, std::ostream& out) {
    if (cfg.json) {
        out << to_json(cert).dump() << '\n';
    }
    if (const auto* ok = std::get_if<ColoringWithinBound>(&cert.outcome)) {
        if (!cfg.json) {
            out << "outcome: coloring\nbound: " << ok->bound << "\npalette: " << ok->coloring.palette_size()
                << "\ncolors: ";
            print_list(out, ok->coloring.colors());
            for (const auto& r : ok->classes) {
                out << "class " << r.index << ": size " << r.size << ", d1 " << r.d1_colors << ", d2 " << r.d2_colors
                    << " (B2 out-degree " << r.d2_b2_max_out_degree << "), d3 " << r.d3_colors << ", combined "
                    << r.combined_colors << '\n';
            }
        }
        return kExitOk;
    }
    if (const auto* found = std::get_if<SubdivisionFound>(&cert.outcome)) {
        if (!cfg.json) {
            out << "outcome: subdivision (stage " << found->stage << ")\n";
            print_witness_text(out, found->witness);
        }
        return kExitNegative;
    }
    const auto& unknown = std::get<Inconclusive>(cert.outcome);
    if (!cfg.json) {
        out << "outcome: inconclusive\nstage: " << unknown.stage << "\nreason: " << unknown.reason << '\n';
    }
    return kExitInconclusive;
}

int emit_peel(const RunConfig& cfg, const PeelCertificate& cert, std::ostream& out) {
    if (cfg.json) {
        out << to_json(cert).dump() << '\n';
    }
    if (const auto* c = std::get_if<Coloring>(&cert.outcome)) {
        if (!cfg.json) {
            out << "outcome: coloring\nbound: " << 6 * std::max(cert.k1, cert.k3) << "\npalette: " << c->palette_size()
                << "\ncolors: ";
            print_list(out, c->colors());
        }
        return kExitOk;
    }
    const auto& stall = std::get<StallCore>(cert.outcome);
    if (!cfg.json) {
        out << "outcome: stall\nmin_degree: " << stall.min_degree << "\ncore: ";
        print_list(out, stall.core);
        if (stall.witness) {
            print_witness_text(out, *stall.witness);
        } else {
            out << "witness: none" << (stall.search_exhausted ? " (search budget exhausted)" : "") << '\n';
        }
    }
    return stall.witness ? kExitNegative : kExitInconclusive;
}

HamiltonianCycle obtain_cycle(const RunConfig& cfg, const Digraph& d, std::ostream& err) {
    if (cfg.cycle) {
        std::ifstream in(*cfg.cycle);
        if (!in) {
            err << "cannot open " << *cfg.cycle << '\n';
            throw Abort{kExitInput};
        }
        try {
            return HamiltonianCycle(d, read_vertex_list(in));
        } catch (const std::exception& e) {
            err << *cfg.cycle << ": " << e.what() << '\n';
            throw Abort{kExitInput};
        }
    }
    try {
        if (auto c = find_hamiltonian_cycle(d, cfg.budget)) {
            return *c;
        }
        err << "no Hamiltonian cycle exists\n";
    } catch (const BudgetExceeded& e) {
        err << "no Hamiltonian cycle found: " << e.what() << '\n';
    }
    throw Abort{kExitNoHamiltonian};
}

template <class Body>
int guarded(std::ostream& err, Body body) {
    try {
        return body();
    } catch (const Abort& a) {
        return a.code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }
}

// ---------------------------------------------------------------------------------------
// verify

// Re-checks a certificate with nothing but the digraph and the definitions.
int verify_coloring(const Digraph& d, const Json& cert, std::ostream& out) {
    if (!cert.contains("bound") || !cert["bound"].is_number_integer() || !cert.contains("colors") ||
        !cert["colors"].is_array()) {
        throw FormatError("coloring certificate needs integer bound and colors array");
    }
    const auto bound = cert["bound"].get<long long>();
    const auto& colors = cert["colors"];
    if (static_cast<int>(colors.size()) != d.order()) {
        out << "rejected: " << colors.size() << " colours for " << d.order() << " vertices\n";
        return kExitNegative;
    }
    std::vector<long long> c;
    for (const auto& x : colors) {
        if (!x.is_number_integer()) {
            throw FormatError("colors must hold integers");
        }
        c.push_back(x.get<long long>());
    }
    for (Vertex u = 0; u < d.order(); ++u) {
        if (c[static_cast<std::size_t>(u)] < 0) {
            out << "rejected: vertex " << u << " has no colour\n";
            return kExitNegative;
        }
        for (Vertex v : d.out_neighbors(u)) {
            if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) {
                out << "rejected: arc " << u << "->" << v << " is monochromatic\n";
                return kExitNegative;
            }
        }
    }
    std::sort(c.begin(), c.end());
    const auto palette = std::unique(c.begin(), c.end()) - c.begin();
    if (palette > bound) {
        out << "rejected: " << palette << " colours exceed bound " << bound << '\n';
        return kExitNegative;
    }
    out << "accepted: proper colouring with " << palette << " colours (bound " << bound << ")\n";
    return kExitOk;
}

int verify_witness(const Digraph& d, const Json& j, std::ostream& out) {
    const SubdivisionWitness w = witness_from_json(j);
    const WitnessCheck check = verify_subdivision(d, w, w.pattern);
    if (!check) {
        out << "rejected: " << to_string(check.defect) << (check.detail.empty() ? "" : ": ") << check.detail << '\n';
        return kExitNegative;
    }
    const auto& b = w.pattern.blocks();
    out << "accepted: subdivision of C(" << b[0] << ',' << b[1] << ',' << b[2] << ',' << b[3] << ")\n";
    return kExitOk;
}

int verify_stall(const Digraph& d, const Json& cert, std::ostream& out) {
    if (!cert.contains("min_degree") || !cert["min_degree"].is_number_integer() || !cert.contains("core") ||
        !cert["core"].is_array() || !cert.contains("witness")) {
        throw FormatError("stall certificate needs min_degree, core and witness");
    }
    const int min_degree = cert["min_degree"].get<int>();
    std::vector<char> in_core(static_cast<std::size_t>(d.order()), 0);
    std::vector<Vertex> core;
    for (const auto& x : cert["core"]) {
        if (!x.is_number_integer()) {
            throw FormatError("core must hold integers");
        }
        const int v = x.get<int>();
        if (v < 0 || v >= d.order() || in_core[static_cast<std::size_t>(v)]) {
            out << "rejected: bad core vertex " << v << '\n';
            return kExitNegative;
        }
        in_core[static_cast<std::size_t>(v)] = 1;
        core.push_back(v);
    }
    if (core.empty()) {
        out << "rejected: empty core\n";
        return kExitNegative;
    }
    for (Vertex v : core) {
        int degree = 0;
        for (Vertex w = 0; w < d.order(); ++w) {
            if (w != v && in_core[static_cast<std::size_t>(w)] && (d.has_arc(v, w) || d.has_arc(w, v))) {
                ++degree;
            }
        }
        if (degree < min_degree) {
            out << "rejected: core vertex " << v << " has degree " << degree << " < " << min_degree << '\n';
            return kExitNegative;
        }
    }
    if (!cert["witness"].is_null()) {
        return verify_witness(d, cert["witness"], out);
    }
    out << "accepted: core of minimum degree >= " << min_degree << " (no witness attached)\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------------------
// gen / stress

int default_arc_count(Family family, int n, const std::optional<CyclePattern>& p) {
    const int cap = n * (n - 1);
    int m = n;
    switch (family) {
        case Family::DirectedCycle:
            m = n > 1 ? n : 0;
            break;
        case Family::TransitiveTournament:
            m = cap / 2;
            break;
        case Family::RandomStrong:
        case Family::AncestorDigraph:
            m = n + n / 2;
            break;
        case Family::RandomHamiltonian:
            m = n + 2;
            break;
        case Family::PlantedSubdivision:
            m = std::max(n, p ? p->total() : 0) + 4;
            break;
    }
    return std::min(m, cap);
}

void write_instance(std::ostream& out, const GenSpec& spec, const Digraph& d) {
    out << "# spec: " << spec_json(spec) << '\n';
    write_digraph(out, d);
}

struct StressOutcome {
    bool skipped = false;  // oracle ran out of budget
    bool free = false;
    bool passed = true;
    std::string message;
    GenSpec spec;
    std::string instance;
};

GenSpec stress_spec(Family family, std::uint64_t seed, int k, int n_max) {
    SplitMix64 rng(seed);
    const int lo = family == Family::RandomHamiltonian ? 4 : 3;
    const int n_hi = std::max(n_max, lo);
    GenSpec spec;
    spec.family = family;
    spec.seed = seed;
    spec.n = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(n_hi - lo + 1)));
    switch (family) {
        case Family::RandomStrong:
            spec.m = spec.n + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.n / 2 + 2)));
            break;
        case Family::AncestorDigraph:
            spec.m = spec.n + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.n / 2 + 2)));
            break;
        case Family::RandomHamiltonian:
            spec.m = spec.n + 1 + static_cast<int>(rng.below(3));
            break;
        case Family::PlantedSubdivision: {
            spec.pattern = CyclePattern(k, 1, k, 1);
            spec.n = std::max(spec.n, spec.pattern->total());
            spec.m = spec.n + 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.n)));
            break;
        }
        default:
            spec.m = default_arc_count(family, spec.n, std::nullopt);
    }
    spec.m = std::min(spec.m, spec.n * (spec.n - 1));
    return spec;
}

void fail(StressOutcome& o, const std::string& why) {
    if (o.passed) {
        o.message = why;
    }
    o.passed = false;
}

void check_coloring(StressOutcome& o, const Digraph& d, const Coloring& c, long long bound) {
    if (!is_proper(underlying_graph(d), c)) {
        fail(o, "improper colouring");
    }
    if (c.palette_size() > bound) {
        fail(o, "palette " + std::to_string(c.palette_size()) + " above bound " + std::to_string(bound));
    }
}

void check_pipeline(StressOutcome& o, const Digraph& d, int k, std::uint64_t budget) {
    const OutTree before = spanning_out_tree(d, 0);
    const OutTree after = finalize(d, before);
    if (!is_final(d, after)) {
        fail(o, "finalize produced a non-final tree");
    }
    for (Vertex v = 0; v < d.order(); ++v) {
        if (after.level(v) < before.level(v)) {
            fail(o, "finalize lowered a level");
        }
    }
    const PipelineCertificate cert = color_strong_digraph(d, k, k, budget);
    if (const auto* ok = std::get_if<ColoringWithinBound>(&cert.outcome)) {
        check_coloring(o, d, ok->coloring, main_bound(k));
        for (const auto& r : ok->classes) {
            if (r.d1_colors > 6 || r.d2_colors > 6 || r.d2_b2_max_out_degree > 3 || r.d3_colors > 4 * k + 2) {
                fail(o, "sub-stage bound broken in class " + std::to_string(r.index));
            }
        }
    } else if (const auto* found = std::get_if<SubdivisionFound>(&cert.outcome)) {
        if (o.free) {
            fail(o, "pipeline reported a subdivision on a subdivision-free input");
        }
        if (!verify_subdivision(d, found->witness, CyclePattern(k, 1, k, 1))) {
            fail(o, "pipeline witness does not verify");
        }
    } else {
        fail(o, "pipeline inconclusive: " + std::get<Inconclusive>(cert.outcome).reason);
    }
}

void check_peel(StressOutcome& o, const Digraph& d, int k, std::uint64_t budget) {
    std::vector<Vertex> order(static_cast<std::size_t>(d.order()));
    std::iota(order.begin(), order.end(), 0);
    const HamiltonianCycle c(d, order);
    const PeelCertificate cert = color_hamiltonian(d, c, k, k, budget);
    if (const auto* col = std::get_if<Coloring>(&cert.outcome)) {
        check_coloring(o, d, *col, 6LL * k);
    } else {
        const auto& stall = std::get<StallCore>(cert.outcome);
        if (o.free) {
            fail(o, "peel stalled on a subdivision-free input");
        } else if (!stall.witness || !verify_subdivision(d, *stall.witness, CyclePattern(k, 1, k, 1))) {
            fail(o, "stall without a verified witness");
        }
    }
    const auto violations = check_chord_neighbor_bound(d, c, k);
    if (o.free && !violations.empty()) {
        fail(o, "chord neighbour bound violated at (" + std::to_string(violations[0].u) + "," +
                    std::to_string(violations[0].v) + "," + std::to_string(violations[0].w) + ")");
    }
}

StressOutcome stress_one(Family family, std::uint64_t seed, int k, int n_max, std::uint64_t budget) {
    StressOutcome o;
    o.spec = stress_spec(family, seed, k, n_max);
    const GeneratedInstance inst = generate_instance(o.spec);
    const Digraph& d = inst.digraph;
    std::ostringstream text;
    write_instance(text, o.spec, d);
    o.instance = text.str();
    const CyclePattern p(k, 1, k, 1);
    try {
        o.free = !find_cycle_subdivision(d, p, budget).has_value();
        if (family == Family::PlantedSubdivision) {
            if (o.free) {
                fail(o, "oracle missed the planted subdivision");
            }
            if (!verify_subdivision(d, *inst.planted, p)) {
                fail(o, "planted witness does not verify");
            }
        }
        if (family == Family::RandomHamiltonian) {
            check_peel(o, d, k, budget);
        } else {
            check_pipeline(o, d, k, budget);
        }
    } catch (const BudgetExceeded&) {
        o.skipped = true;
    } catch (const std::exception& e) {
        fail(o, std::string("exception: ") + e.what());
    }
    return o;
}

}  // namespace

std::uint64_t budget_from_env(std::uint64_t fallback) {
    const char* raw = std::getenv("FOURBLOCKS_BUDGET");
    if (raw == nullptr || *raw == '\0') {
        return fallback;
    }
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size() || value == 0) {
        throw std::invalid_argument("FOURBLOCKS_BUDGET must be a positive integer");
    }
    return value;
}

int cmd_color(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_lengths(cfg, err);
        const Digraph d = load_digraph(single_input(cfg, 1, err), err);
        if (d.order() == 0 || !is_strongly_connected(d)) {
            err << "digraph is not strongly connected\n";
            return kExitNotStrong;
        }
        return emit_pipeline(cfg, color_strong_digraph(d, cfg.k1, cfg.k3, cfg.budget), out);
    });
}

int cmd_color_ham(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_lengths(cfg, err);
        const Digraph d = load_digraph(single_input(cfg, 1, err), err);
        const HamiltonianCycle c = obtain_cycle(cfg, d, err);
        return emit_peel(cfg, color_hamiltonian(d, c, cfg.k1, cfg.k3, cfg.budget), out);
    });
}

int cmd_chords(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_lengths(cfg, err);
        const Digraph d = load_digraph(single_input(cfg, 1, err), err);
        const HamiltonianCycle c = obtain_cycle(cfg, d, err);
        const auto violations = check_chord_neighbor_bound(d, c, std::max(cfg.k1, cfg.k3));
        if (cfg.json) {
            out << to_json(violations).dump() << '\n';
        } else {
            out << violations.size() << " violation(s)\n";
            for (const auto& v : violations) {
                out << "u " << v.u << " v " << v.v << " w " << v.w << " neighbours " << v.count << '\n';
            }
        }
        return violations.empty() ? kExitOk : kExitNegative;
    });
}

int cmd_find(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        check_lengths(cfg, err);
        const Digraph d = load_digraph(single_input(cfg, 1, err), err);
        const CyclePattern p = search_pattern(cfg);
        std::optional<SubdivisionWitness> w;
        try {
            w = find_cycle_subdivision(d, p, cfg.budget);
        } catch (const BudgetExceeded& e) {
            err << "search inconclusive: " << e.what() << '\n';
            return kExitInconclusive;
        }
        if (cfg.json) {
            out << (w ? to_json(*w) : Json(nullptr)).dump() << '\n';
        } else if (w) {
            print_witness_text(out, *w);
        } else {
            out << "no subdivision\n";
        }
        return w ? kExitOk : kExitNegative;
    });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (cfg.inputs.size() != 2) {
            err << "verify needs a digraph file and a certificate file\n";
            return kExitInput;
        }
        const Digraph d = load_digraph(cfg.inputs[0], err);
        Json cert;
        try {
            std::ifstream in(cfg.inputs[1]);
            if (!in) {
                err << "cannot open " << cfg.inputs[1] << '\n';
                return kExitInput;
            }
            cert = Json::parse(in);
        } catch (const Json::parse_error& e) {
            err << cfg.inputs[1] << ": " << e.what() << '\n';
            return kExitInput;
        }
        try {
            if (cert.is_object() && cert.contains("outcome")) {
                const auto& outcome = cert["outcome"];
                if (outcome == "coloring") {
                    return verify_coloring(d, cert, out);
                }
                if (outcome == "subdivision") {
                    if (!cert.contains("witness")) {
                        throw FormatError("subdivision certificate needs a witness");
                    }
                    return verify_witness(d, cert["witness"], out);
                }
                if (outcome == "stall") {
                    return verify_stall(d, cert, out);
                }
                if (outcome == "inconclusive") {
                    out << "nothing to verify: certificate is inconclusive\n";
                    return kExitInconclusive;
                }
                throw FormatError("unknown outcome");
            }
            return verify_witness(d, cert, out);
        } catch (const FormatError& e) {
            err << "malformed certificate: " << e.what() << '\n';
            return kExitInput;
        } catch (const Json::exception& e) {
            err << "malformed certificate: " << e.what() << '\n';
            return kExitInput;
        }
    });
}

int cmd_gen(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        GenSpec spec;
        spec.family = parse_family(cfg.family);
        spec.n = cfg.n;
        spec.seed = cfg.seed;
        if (spec.family == Family::PlantedSubdivision) {
            spec.pattern = search_pattern(cfg);
        }
        spec.m = cfg.m >= 0 ? cfg.m : default_arc_count(spec.family, spec.n, spec.pattern);
        GeneratedInstance inst;
        try {
            inst = generate_instance(spec);
        } catch (const InfeasibleSpec& e) {
            err << "infeasible spec: " << e.what() << '\n';
            return kExitInput;
        }
        if (cfg.output.empty()) {
            write_instance(out, spec, inst.digraph);
            return kExitOk;
        }
        std::ofstream file(cfg.output);
        write_instance(file, spec, inst.digraph);
        Json sidecar;
        sidecar["spec"] = Json::parse(spec_json(spec));
        sidecar["planted"] = inst.planted ? to_json(*inst.planted) : Json(nullptr);
        std::ofstream side(cfg.output + ".json");
        side << sidecar.dump() << '\n';
        if (!file || !side) {
            err << "cannot write " << cfg.output << '\n';
            return kExitInput;
        }
        return kExitOk;
    });
}

int cmd_stress(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<Family> families;
        if (cfg.family == "all") {
            families = {Family::RandomStrong, Family::AncestorDigraph, Family::RandomHamiltonian,
                        Family::PlantedSubdivision};
        } else {
            families = {parse_family(cfg.family)};
        }
        for (Family f : families) {
            if (f == Family::DirectedCycle || f == Family::TransitiveTournament) {
                err << "stress runs on strong, ancestor, hamiltonian or planted\n";
                return kExitInput;
            }
        }
        std::vector<int> ks;
        if (cfg.pattern) {
            err << "stress draws its own patterns; use --k1 to pick a single k\n";
            return kExitInput;
        }
        if (cfg.k1 != cfg.k3) {
            err << "stress uses symmetric patterns (k,1,k,1); pass equal --k1 and --k3\n";
            return kExitInput;
        }
        ks = !cfg.k_given ? std::vector<int>{1, 2} : std::vector<int>{cfg.k1};

        struct Job {
            Family family;
            int k;
            std::uint64_t seed;
        };
        std::vector<Job> jobs;
        for (Family f : families) {
            for (int k : ks) {
                for (int i = 0; i < cfg.count; ++i) {
                    jobs.push_back({f, k, cfg.seed + static_cast<std::uint64_t>(i)});
                }
            }
        }
        std::vector<StressOutcome> results(jobs.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < jobs.size(); i = next++) {
                results[i] = stress_one(jobs[i].family, jobs[i].seed, jobs[i].k, cfg.n, cfg.budget);
            }
        };
        const unsigned threads = std::max(1u, cfg.jobs);
        std::vector<std::thread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
        for (auto& t : pool) {
            t.join();
        }

        out << std::left << std::setw(12) << "family" << std::setw(4) << "k" << std::setw(11) << "instances"
            << std::setw(7) << "free" << std::setw(8) << "passed" << std::setw(8) << "failed" << "skipped\n";
        int failures = 0;
        std::size_t i = 0;
        for (Family f : families) {
            for (int k : ks) {
                int free = 0, passed = 0, failed = 0, skipped = 0;
                for (int c = 0; c < cfg.count; ++c, ++i) {
                    const auto& r = results[i];
                    if (r.skipped) {
                        ++skipped;
                        continue;
                    }
                    free += r.free ? 1 : 0;
                    (r.passed ? passed : failed) += 1;
                }
                out << std::left << std::setw(12) << to_string(f) << std::setw(4) << k << std::setw(11) << cfg.count
                    << std::setw(7) << free << std::setw(8) << passed << std::setw(8) << failed << skipped << '\n';
                failures += failed;
            }
        }
        for (std::size_t j = 0; j < results.size(); ++j) {
            const auto& r = results[j];
            if (r.passed || r.skipped) {
                continue;
            }
            std::filesystem::create_directories(cfg.dump_dir);
            const auto path = std::filesystem::path(cfg.dump_dir) /
                              (to_string(jobs[j].family) + "-seed" + std::to_string(jobs[j].seed) + "-k" +
                               std::to_string(jobs[j].k) + ".dg");
            std::ofstream(path) << r.instance;
            out << "FAIL " << to_string(jobs[j].family) << " seed " << jobs[j].seed << " k " << jobs[j].k << ": "
                << r.message << " -> " << path.string() << '\n';
        }
        return failures == 0 ? kExitOk : kExitNegative;
    });
}

}  // namespace fourblocks::cli
