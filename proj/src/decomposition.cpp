#include "fourblocks/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fourblocks {

LevelClasses level_classes(const OutTree& t, int k) {
    if (k < 1) {
        throw std::invalid_argument("block parameter must be positive");
    }
    LevelClasses result;
    result.k = k;
    const int period = 2 * k;
    result.classes.resize(static_cast<std::size_t>(period));
    for (Vertex v = 0; v < t.order(); ++v) {
        const int i = (t.level(v) - 1) % period;  // class index i - 1
        result.classes[static_cast<std::size_t>(i)].push_back(v);
    }
    return result;
}

ArcPartition arc_partition(const Digraph& d, const OutTree& t, std::span<const Vertex> cls) {
    if (!is_final(d, t)) {
        throw NotFinalTree();
    }
    std::vector<char> member(static_cast<std::size_t>(d.order()), 0);
    for (Vertex v : cls) {
        member.at(static_cast<std::size_t>(v)) = 1;
    }
    ArcPartition part;
    for (const Arc& a : d.arcs()) {
        if (!member[static_cast<std::size_t>(a.tail)] || !member[static_cast<std::size_t>(a.head)]) {
            continue;
        }
        const int lt = t.level(a.tail);
        const int lh = t.level(a.head);
        if (lt < lh && is_ancestor(t, a.tail, a.head)) {
            part.a1.push_back(a);
        } else if (lt > lh && is_ancestor(t, a.head, a.tail)) {
            part.a2.push_back(a);
        } else {
            part.a3.push_back(a);
        }
    }
    return part;
}

std::variant<Coloring, WheelCoreFailure> color_d1(const Digraph& d1, std::uint64_t budget) {
    const UGraph g = underlying_graph(d1);
    PeelResult peel = peel_to_core(g, 5);
    if (peel.core.empty()) {
        return greedy_color(g, peel.removed).normalized();
    }
    WheelCoreFailure failure;
    failure.core = peel.core;
    std::vector<Vertex> global;
    const UGraph core = g.induced(peel.core, &global);
    try {
        if (auto wheel = find_k_wheel(core, 5, budget)) {
            for (Vertex& v : wheel->cycle) {
                v = global[static_cast<std::size_t>(v)];
            }
            for (Vertex& v : wheel->spokes) {
                v = global[static_cast<std::size_t>(v)];
            }
            wheel->center = global[static_cast<std::size_t>(wheel->center)];
            failure.wheel = std::move(*wheel);
        }
    } catch (const BudgetExceeded&) {
        // the core itself already contradicts 5-degeneracy
    }
    return failure;
}

namespace {

// First-fit colouring of the acyclic digraph d restricted to `part`: sources are peeled
// first, so a vertex's coloured neighbours at colouring time are all out-neighbours.
void color_acyclic_part(const Digraph& d, const std::vector<char>& part, Color offset, std::vector<Color>& colors) {
    const int n = d.order();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::set<Vertex> ready;
    for (Vertex v = 0; v < n; ++v) {
        if (!part[static_cast<std::size_t>(v)]) {
            continue;
        }
        for (Vertex u : d.in_neighbors(v)) {
            indeg[static_cast<std::size_t>(v)] += part[static_cast<std::size_t>(u)];
        }
        if (indeg[static_cast<std::size_t>(v)] == 0) {
            ready.insert(v);
        }
    }
    std::vector<Vertex> order;
    while (!ready.empty()) {
        Vertex u = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(u);
        for (Vertex v : d.out_neighbors(u)) {
            if (part[static_cast<std::size_t>(v)] && --indeg[static_cast<std::size_t>(v)] == 0) {
                ready.insert(v);
            }
        }
    }
    std::vector<char> taken;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        taken.assign(d.out_degree(v) + d.in_degree(v) + 1, 0);
        auto block = [&](Vertex w) {
            if (!part[static_cast<std::size_t>(w)]) {
                return;
            }
            Color c = colors[static_cast<std::size_t>(w)];
            if (c != kUncolored && c - offset < static_cast<Color>(taken.size())) {
                taken[static_cast<std::size_t>(c - offset)] = 1;
            }
        };
        for (Vertex w : d.out_neighbors(v)) {
            block(w);
        }
        for (Vertex w : d.in_neighbors(v)) {
            block(w);
        }
        colors[static_cast<std::size_t>(v)] =
            offset + static_cast<Color>(std::find(taken.begin(), taken.end(), 0) - taken.begin());
    }
}

}  // namespace

std::variant<D2Coloring, OutDegreeFailure> color_d2(const Digraph& d2, std::span<const int> level) {
    if (!is_acyclic(d2)) {
        throw NotAcyclic();
    }
    const int n = d2.order();
    if (static_cast<int>(level.size()) != n) {
        throw std::invalid_argument("color_d2: one level per vertex required");
    }
    D2Coloring result;
    result.in_b2.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) {
        result.in_b2[static_cast<std::size_t>(v)] = d2.out_degree(v) >= 2 ? 1 : 0;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!result.in_b2[static_cast<std::size_t>(v)]) {
            continue;
        }
        std::vector<Vertex> inside;
        for (Vertex w : d2.out_neighbors(v)) {
            if (result.in_b2[static_cast<std::size_t>(w)]) {
                inside.push_back(w);
            }
        }
        if (inside.size() > 3) {
            std::stable_sort(inside.begin(), inside.end(), [&](Vertex a, Vertex b) {
                return level[static_cast<std::size_t>(a)] < level[static_cast<std::size_t>(b)];
            });
            return OutDegreeFailure{v, std::move(inside)};
        }
        result.b2_max_out_degree = std::max(result.b2_max_out_degree, static_cast<int>(inside.size()));
    }
    std::vector<char> b1(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < b1.size(); ++i) {
        b1[i] = result.in_b2[i] ? 0 : 1;
    }
    std::vector<Color> colors(static_cast<std::size_t>(n), kUncolored);
    color_acyclic_part(d2, b1, 0, colors);
    color_acyclic_part(d2, result.in_b2, 2, colors);
    result.coloring = Coloring(std::move(colors));
    return result;
}

Coloring dsatur_color(const UGraph& g) {
    const int n = g.order();
    std::vector<Color> colors(static_cast<std::size_t>(n), kUncolored);
    std::vector<std::set<Color>> seen(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (colors[static_cast<std::size_t>(v)] != kUncolored) {
                continue;
            }
            if (pick < 0) {
                pick = v;
                continue;
            }
            const auto sv = seen[static_cast<std::size_t>(v)].size();
            const auto sp = seen[static_cast<std::size_t>(pick)].size();
            if (sv > sp || (sv == sp && g.degree(v) > g.degree(pick))) {
                pick = v;
            }
        }
        Color c = 0;
        while (seen[static_cast<std::size_t>(pick)].count(c)) {
            ++c;
        }
        colors[static_cast<std::size_t>(pick)] = c;
        for (Vertex w : g.neighbors(pick)) {
            seen[static_cast<std::size_t>(w)].insert(c);
        }
    }
    return Coloring(std::move(colors));
}

std::optional<Coloring> exact_color(const UGraph& g, int colors, std::uint64_t budget) {
    const int n = g.order();
    if (n == 0) {
        return Coloring();
    }
    if (colors < 1) {
        return std::nullopt;
    }
    SearchBudget nodes(budget);
    std::vector<Color> assigned(static_cast<std::size_t>(n), kUncolored);
    // forbidden[v][c] counts coloured neighbours of v holding colour c.
    std::vector<std::vector<int>> forbidden(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(colors), 0));
    std::vector<int> saturation(static_cast<std::size_t>(n), 0);

    auto assign = [&](Vertex v, Color c, int delta) {
        assigned[static_cast<std::size_t>(v)] = delta > 0 ? c : kUncolored;
        for (Vertex w : g.neighbors(v)) {
            int& slot = forbidden[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)];
            if (delta > 0 && slot++ == 0) {
                ++saturation[static_cast<std::size_t>(w)];
            } else if (delta < 0 && --slot == 0) {
                --saturation[static_cast<std::size_t>(w)];
            }
        }
    };

    auto search = [&](auto&& self, int placed, int used) -> bool {
        nodes.charge();
        if (placed == n) {
            return true;
        }
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (assigned[static_cast<std::size_t>(v)] != kUncolored) {
                continue;
            }
            if (pick < 0 || saturation[static_cast<std::size_t>(v)] > saturation[static_cast<std::size_t>(pick)] ||
                (saturation[static_cast<std::size_t>(v)] == saturation[static_cast<std::size_t>(pick)] &&
                 g.degree(v) > g.degree(pick))) {
                pick = v;
            }
        }
        // A fresh colour is interchangeable with any other unused one, so try only one.
        const int limit = std::min(colors, used + 1);
        for (Color c = 0; c < limit; ++c) {
            if (forbidden[static_cast<std::size_t>(pick)][static_cast<std::size_t>(c)] != 0) {
                continue;
            }
            assign(pick, c, +1);
            if (self(self, placed + 1, std::max(used, c + 1))) {
                return true;
            }
            assign(pick, c, -1);
        }
        return false;
    };

    if (search(search, 0, 0)) {
        return Coloring(assigned);
    }
    return std::nullopt;
}

std::variant<Coloring, TwoBlockPathWitness> color_d3(const Digraph& d3, int k, std::uint64_t budget) {
    if (k < 1) {
        throw std::invalid_argument("block parameter must be positive");
    }
    const int limit = 4 * k + 2;
    const UGraph g = underlying_graph(d3);
    Coloring greedy = dsatur_color(g);
    if (greedy.palette_size() <= limit) {
        return greedy;
    }
    if (auto exact = exact_color(g, limit, budget)) {
        return exact->normalized();
    }
    // chromatic number >= 4k+3 = (2k+1) + (2k+1) + 1 forces every two-block path P(2k+1, 2k+1)
    if (auto path = find_two_block_path(d3, 2 * k + 1, 2 * k + 1, budget)) {
        return *path;
    }
    throw std::logic_error("colouring needs more than 4k+2 colours but no P(2k+1,2k+1) was found");
}

PipelineCertificate color_strong_digraph(const Digraph& d, int k1, int k3, std::uint64_t budget) {
    if (k1 < 1 || k3 < 1) {
        throw std::invalid_argument("k1 and k3 must be positive");
    }
    if (d.order() == 0 || !is_strongly_connected(d)) {
        throw NotStronglyConnected();
    }
    PipelineCertificate cert;
    cert.k1 = k1;
    cert.k3 = k3;
    const int k = std::max(k1, k3);
    const OutTree tree = finalize(d, spanning_out_tree(d, 0));
    const LevelClasses classes = level_classes(tree, k);

    std::vector<Color> colors(static_cast<std::size_t>(d.order()), kUncolored);
    std::vector<ClassReport> reports;
    std::string failed_stage;
    std::string failure_note;

    for (std::size_t ci = 0; ci < classes.classes.size() && failed_stage.empty(); ++ci) {
        const auto& cls = classes.classes[ci];
        if (cls.empty()) {
            continue;
        }
        const ArcPartition part = arc_partition(d, tree, cls);
        const InducedSubdigraph sub1 = induced_subdigraph(d, cls, part.a1);
        const InducedSubdigraph sub2 = induced_subdigraph(d, cls, part.a2);
        const InducedSubdigraph sub3 = induced_subdigraph(d, cls, part.a3);
        ClassReport report;
        report.index = static_cast<int>(ci) + 1;
        report.size = static_cast<int>(cls.size());

        auto r1 = color_d1(sub1.graph, budget);
        if (std::holds_alternative<WheelCoreFailure>(r1)) {
            failed_stage = "d1";
            failure_note = "descending arcs are not 5-degenerate in class " + std::to_string(report.index);
            break;
        }
        std::vector<int> local_levels;
        for (Vertex v : cls) {
            local_levels.push_back(tree.level(v));
        }
        auto r2 = color_d2(sub2.graph, local_levels);
        if (std::holds_alternative<OutDegreeFailure>(r2)) {
            failed_stage = "d2";
            failure_note = "out-degree above 3 inside B2 in class " + std::to_string(report.index);
            break;
        }
        std::variant<Coloring, TwoBlockPathWitness> r3;
        try {
            r3 = color_d3(sub3.graph, k, budget);
        } catch (const BudgetExceeded& e) {
            cert.outcome = Inconclusive{"d3", e.what()};
            return cert;
        }
        if (std::holds_alternative<TwoBlockPathWitness>(r3)) {
            failed_stage = "d3";
            failure_note = "remaining arcs need more than 4k+2 colours in class " + std::to_string(report.index);
            break;
        }
        const Coloring& c1 = std::get<Coloring>(r1);
        const Coloring& c2 = std::get<D2Coloring>(r2).coloring;
        const Coloring& c3 = std::get<Coloring>(r3);
        std::vector<Vertex> all(cls.size());
        std::iota(all.begin(), all.end(), 0);
        const Coloring combined = product_coloring(product_coloring(c1, c2, all, all), c3, all, all);
        report.d1_colors = c1.palette_size();
        report.d2_colors = c2.palette_size();
        report.d2_b2_max_out_degree = std::get<D2Coloring>(r2).b2_max_out_degree;
        report.d3_colors = c3.palette_size();
        report.combined_colors = combined.palette_size();

        const auto offset = static_cast<Color>(ci * static_cast<std::size_t>(class_bound(k)));
        for (std::size_t j = 0; j < cls.size(); ++j) {
            colors[static_cast<std::size_t>(cls[j])] = offset + combined[static_cast<Vertex>(j)];
        }
        reports.push_back(report);
    }

    if (failed_stage.empty()) {
        ColoringWithinBound ok;
        ok.coloring = Coloring(std::move(colors)).normalized();
        ok.bound = main_bound(k);
        ok.class_bound = class_bound(k);
        ok.classes = std::move(reports);
        cert.outcome = std::move(ok);
        return cert;
    }

    const CyclePattern search_pattern(k, 1, k, 1);
    const CyclePattern target(k1, 1, k3, 1);
    try {
        if (auto witness = find_cycle_subdivision(d, search_pattern, budget)) {
            if (!verify_subdivision(d, *witness, target)) {
                throw std::logic_error("subdivision witness failed re-verification");
            }
            witness->pattern = target;
            cert.outcome = SubdivisionFound{std::move(*witness), failed_stage};
        } else {
            cert.outcome = Inconclusive{failed_stage, failure_note + ", yet no subdivision exists"};
        }
    } catch (const BudgetExceeded& e) {
        cert.outcome = Inconclusive{failed_stage, failure_note + "; subdivision search: " + e.what()};
    }
    return cert;
}

}  // namespace fourblocks
