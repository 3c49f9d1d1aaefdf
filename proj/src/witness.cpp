#include "fourblocks/witness.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace fourblocks {

BudgetExceeded::BudgetExceeded(std::uint64_t nodes)
    : std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes"), nodes_(nodes) {}

CyclePattern::CyclePattern(int k1, int k2, int k3, int k4) : blocks_{k1, k2, k3, k4} {
    for (int b : blocks_) {
        if (b < 1) {
            throw std::invalid_argument("block lengths must be positive");
        }
    }
}

std::string to_string(WitnessDefect defect) {
    switch (defect) {
        case WitnessDefect::None: return "Ok";
        case WitnessDefect::MalformedPath: return "MalformedPath";
        case WitnessDefect::EndpointMismatch: return "EndpointMismatch";
        case WitnessDefect::DuplicateJunction: return "DuplicateJunction";
        case WitnessDefect::MissingArc: return "MissingArc";
        case WitnessDefect::PathTooShort: return "PathTooShort";
        case WitnessDefect::NotInternallyDisjoint: return "NotInternallyDisjoint";
    }
    return "Unknown";
}

namespace {

// Phase q of the cycle walk builds block q. Blocks 0 and 2 are walked along
// out-arcs, blocks 1 and 3 along in-arcs, so every junction is reached as the
// far end of the previous block.
class CycleSearch {
public:
    CycleSearch(const Digraph& d, const CyclePattern& p, SearchBudget& budget)
        : d_(d), p_(p), budget_(budget), used_(static_cast<std::size_t>(d.order()), 0) {}

    std::optional<SubdivisionWitness> run() {
        const int n = d_.order();
        for (int limit = p_.total(); limit <= n; ++limit) {
            limit_ = limit;
            for (Vertex s1 = 0; s1 < n; ++s1) {
                if (d_.out_degree(s1) < 2) {
                    continue;
                }
                source1_ = s1;
                mark(s1);
                walk_[0].assign(1, s1);
                bool found = extend(0, s1, 0, 0);
                unmark(s1);
                if (found) {
                    return assemble();
                }
            }
        }
        return std::nullopt;
    }

private:
    // Minimum number of arcs still needed after reaching phase `phase` with `len` arcs.
    int still_needed(int phase, int len) const {
        int need = std::max(phase == 3 ? 1 : 0, p_[static_cast<std::size_t>(phase)] - len);
        for (int q = phase + 1; q < 4; ++q) {
            need += p_[static_cast<std::size_t>(q)];
        }
        return need;
    }

    bool extend(int phase, Vertex cur, int len, int total) {
        budget_.charge();
        const int block = p_[static_cast<std::size_t>(phase)];
        if (phase == 3) {
            if (len + 1 >= block && total + 1 <= limit_ && d_.has_arc(source1_, cur)) {
                walk_[3].push_back(source1_);
                return true;
            }
        } else if (len >= block && try_junction(phase, cur, total)) {
            return true;
        }
        const bool forward = phase % 2 == 0;
        const auto& next = forward ? d_.out_neighbors(cur) : d_.in_neighbors(cur);
        for (Vertex nb : next) {
            if (used_[static_cast<std::size_t>(nb)] || total + 1 + still_needed(phase, len + 1) > limit_) {
                continue;
            }
            mark(nb);
            walk_[static_cast<std::size_t>(phase)].push_back(nb);
            if (extend(phase, nb, len + 1, total + 1)) {
                return true;
            }
            walk_[static_cast<std::size_t>(phase)].pop_back();
            unmark(nb);
        }
        return false;
    }

    // `cur` ends block `phase`; try it as the next junction.
    bool try_junction(int phase, Vertex cur, int total) {
        switch (phase) {
            case 0:  // sink1
            case 2:  // sink2
                if (d_.in_degree(cur) < 2) {
                    return false;
                }
                break;
            case 1:  // source2
                if (d_.out_degree(cur) < 2 || (p_.half_turn_symmetric() && cur < source1_)) {
                    return false;
                }
                break;
            default:
                return false;
        }
        if (phase == 2 && !closable(cur, total)) {
            return false;
        }
        walk_[static_cast<std::size_t>(phase + 1)].assign(1, cur);
        return extend(phase + 1, cur, 0, total);
    }

    // Shortest backward route from sink2 to source1 through unused vertices must fit.
    bool closable(Vertex sink2, int total) {
        const auto n = static_cast<std::size_t>(d_.order());
        dist_.assign(n, -1);
        std::deque<Vertex> queue{sink2};
        dist_[static_cast<std::size_t>(sink2)] = 0;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex w : d_.in_neighbors(u)) {
                if (w == source1_) {
                    int need = std::max(dist_[static_cast<std::size_t>(u)] + 1, p_[3]);
                    return total + need <= limit_;
                }
                if (!used_[static_cast<std::size_t>(w)] && dist_[static_cast<std::size_t>(w)] < 0) {
                    dist_[static_cast<std::size_t>(w)] = dist_[static_cast<std::size_t>(u)] + 1;
                    queue.push_back(w);
                }
            }
        }
        return false;
    }

    SubdivisionWitness assemble() const {
        SubdivisionWitness w;
        w.pattern = p_;
        w.paths[0] = walk_[0];
        w.paths[1] = {walk_[1].rbegin(), walk_[1].rend()};
        w.paths[2] = walk_[2];
        w.paths[3] = {walk_[3].rbegin(), walk_[3].rend()};
        w.junctions = {w.paths[0].front(), w.paths[0].back(), w.paths[2].front(), w.paths[2].back()};
        return w;
    }

    void mark(Vertex v) { used_[static_cast<std::size_t>(v)] = 1; }
    void unmark(Vertex v) { used_[static_cast<std::size_t>(v)] = 0; }

    const Digraph& d_;
    const CyclePattern& p_;
    SearchBudget& budget_;
    std::vector<char> used_;
    std::vector<int> dist_;
    std::array<std::vector<Vertex>, 4> walk_;
    Vertex source1_ = 0;
    int limit_ = 0;
};

bool is_directed_path(const Digraph& d, const std::vector<Vertex>& path) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (!d.has_arc(path[i], path[i + 1])) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::optional<SubdivisionWitness> find_cycle_subdivision(const Digraph& d, const CyclePattern& p,
                                                         std::uint64_t budget) {
    SearchBudget nodes(budget);
    return CycleSearch(d, p, nodes).run();
}

WitnessCheck verify_subdivision(const Digraph& d, const SubdivisionWitness& w, const CyclePattern& p) {
    const int n = d.order();
    // (tail junction, head junction) index for each block.
    constexpr std::array<std::pair<int, int>, 4> ends{{{0, 1}, {2, 1}, {2, 3}, {0, 3}}};

    for (Vertex j : w.junctions) {
        if (j < 0 || j >= n) {
            return {WitnessDefect::MalformedPath, "junction " + std::to_string(j) + " out of range"};
        }
    }
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (w.junctions[i] == w.junctions[j]) {
                return {WitnessDefect::DuplicateJunction, "junction " + std::to_string(w.junctions[i]) + " repeated"};
            }
        }
    }
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < 4; ++b) {
        const auto& path = w.paths[b];
        const std::string name = "path " + std::to_string(b);
        if (path.size() < 2) {
            return {WitnessDefect::MalformedPath, name + " has fewer than two vertices"};
        }
        for (Vertex v : path) {
            if (v < 0 || v >= n) {
                return {WitnessDefect::MalformedPath, name + " has vertex " + std::to_string(v) + " out of range"};
            }
        }
        const auto [tail, head] = ends[b];
        if (path.front() != w.junctions[static_cast<std::size_t>(tail)] ||
            path.back() != w.junctions[static_cast<std::size_t>(head)]) {
            return {WitnessDefect::EndpointMismatch, name + " does not join its junctions"};
        }
        if (!is_directed_path(d, path)) {
            return {WitnessDefect::MissingArc, name + " uses an arc absent from the digraph"};
        }
        if (static_cast<int>(path.size()) - 1 < p[b]) {
            return {WitnessDefect::PathTooShort, name + " has length " + std::to_string(path.size() - 1) +
                                                     " < " + std::to_string(p[b])};
        }
        for (std::size_t i = 0; i < path.size(); ++i) {
            ++seen[static_cast<std::size_t>(path[i])];
        }
    }
    // Every junction closes exactly two blocks; every other vertex lies on one block once.
    for (Vertex v = 0; v < n; ++v) {
        const bool junction = std::find(w.junctions.begin(), w.junctions.end(), v) != w.junctions.end();
        const int expected = junction ? 2 : 1;
        const int count = seen[static_cast<std::size_t>(v)];
        if (count != 0 && count != expected) {
            return {WitnessDefect::NotInternallyDisjoint, "vertex " + std::to_string(v) + " is shared by paths"};
        }
    }
    return {};
}

std::optional<TwoBlockPathWitness> find_two_block_path(const Digraph& d, int a, int b, std::uint64_t budget) {
    if (a < 1 || b < 1) {
        throw std::invalid_argument("two-block path lengths must be positive");
    }
    SearchBudget nodes(budget);
    std::vector<char> used(static_cast<std::size_t>(d.order()), 0);
    TwoBlockPathWitness w;

    // Prefixes of longer paths are still valid, so exact lengths suffice.
    auto grow = [&](auto&& self, std::vector<Vertex>& path, int target, auto&& done) -> bool {
        nodes.charge();
        if (static_cast<int>(path.size()) - 1 == target) {
            return done();
        }
        for (Vertex nb : d.out_neighbors(path.back())) {
            if (used[static_cast<std::size_t>(nb)]) {
                continue;
            }
            used[static_cast<std::size_t>(nb)] = 1;
            path.push_back(nb);
            if (self(self, path, target, done)) {
                return true;
            }
            path.pop_back();
            used[static_cast<std::size_t>(nb)] = 0;
        }
        return false;
    };

    for (Vertex origin = 0; origin < d.order(); ++origin) {
        if (d.out_degree(origin) < 2) {
            continue;
        }
        used[static_cast<std::size_t>(origin)] = 1;
        w.first.assign(1, origin);
        auto second_done = [] { return true; };
        auto first_done = [&] {
            w.second.assign(1, origin);
            return grow(grow, w.second, b, second_done);
        };
        if (grow(grow, w.first, a, first_done)) {
            return w;
        }
        used[static_cast<std::size_t>(origin)] = 0;
    }
    return std::nullopt;
}

bool verify_two_block_path(const Digraph& d, const TwoBlockPathWitness& w, int a, int b) {
    if (w.first.empty() || w.second.empty() || w.first.front() != w.second.front()) {
        return false;
    }
    if (static_cast<int>(w.first.size()) - 1 < a || static_cast<int>(w.second.size()) - 1 < b) {
        return false;
    }
    for (const auto* path : {&w.first, &w.second}) {
        for (Vertex v : *path) {
            if (v < 0 || v >= d.order()) {
                return false;
            }
        }
        if (!is_directed_path(d, *path)) {
            return false;
        }
    }
    std::vector<Vertex> all(w.first.begin(), w.first.end());
    all.insert(all.end(), w.second.begin() + 1, w.second.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

std::optional<WheelWitness> find_k_wheel(const UGraph& g, int k, std::uint64_t budget) {
    if (k < 3) {
        throw std::invalid_argument("wheel size must be at least 3");
    }
    SearchBudget nodes(budget);
    const int n = g.order();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<char> spoke(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> cycle;

    for (Vertex center = 0; center < n; ++center) {
        if (g.degree(center) < k) {
            continue;
        }
        std::fill(spoke.begin(), spoke.end(), 0);
        for (Vertex v : g.neighbors(center)) {
            spoke[static_cast<std::size_t>(v)] = 1;
        }
        // The cycle is rooted at its smallest vertex `start`; only larger vertices join.
        for (Vertex start = 0; start < n; ++start) {
            if (start == center) {
                continue;
            }
            int available = 0;
            for (Vertex v : g.neighbors(center)) {
                available += v >= start ? 1 : 0;
            }
            if (available < k) {
                break;
            }
            auto dfs = [&](auto&& self, Vertex cur, int hits, int left) -> bool {
                nodes.charge();
                if (cycle.size() >= 3 && hits >= k && g.has_edge(cur, start)) {
                    return true;
                }
                if (hits + left < k) {
                    return false;
                }
                for (Vertex nb : g.neighbors(cur)) {
                    if (nb <= start || nb == center || used[static_cast<std::size_t>(nb)]) {
                        continue;
                    }
                    const int s = spoke[static_cast<std::size_t>(nb)];
                    used[static_cast<std::size_t>(nb)] = 1;
                    cycle.push_back(nb);
                    if (self(self, nb, hits + s, left - s)) {
                        return true;
                    }
                    cycle.pop_back();
                    used[static_cast<std::size_t>(nb)] = 0;
                }
                return false;
            };
            const int s = spoke[static_cast<std::size_t>(start)];
            used[static_cast<std::size_t>(start)] = 1;
            cycle.assign(1, start);
            const bool found = dfs(dfs, start, s, available - s);
            used[static_cast<std::size_t>(start)] = 0;
            if (found) {
                WheelWitness w;
                w.cycle = cycle;
                w.center = center;
                for (Vertex v : cycle) {
                    if (spoke[static_cast<std::size_t>(v)]) {
                        w.spokes.push_back(v);
                    }
                }
                return w;
            }
            for (Vertex v : cycle) {
                used[static_cast<std::size_t>(v)] = 0;
            }
        }
    }
    return std::nullopt;
}

bool verify_wheel(const UGraph& g, const WheelWitness& w, int k) {
    const int n = g.order();
    if (w.cycle.size() < 3 || w.center < 0 || w.center >= n) {
        return false;
    }
    std::vector<char> on_cycle(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < w.cycle.size(); ++i) {
        Vertex v = w.cycle[i];
        if (v < 0 || v >= n || v == w.center || on_cycle[static_cast<std::size_t>(v)]) {
            return false;
        }
        on_cycle[static_cast<std::size_t>(v)] = 1;
        if (!g.has_edge(v, w.cycle[(i + 1) % w.cycle.size()])) {
            return false;
        }
    }
    std::vector<Vertex> spokes = w.spokes;
    std::sort(spokes.begin(), spokes.end());
    if (std::adjacent_find(spokes.begin(), spokes.end()) != spokes.end()) {
        return false;
    }
    for (Vertex s : spokes) {
        if (s < 0 || s >= n || !on_cycle[static_cast<std::size_t>(s)] || !g.has_edge(w.center, s)) {
            return false;
        }
    }
    return static_cast<int>(spokes.size()) >= k;
}

}  // namespace fourblocks
