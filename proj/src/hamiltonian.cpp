#include "fourblocks/hamiltonian.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace fourblocks {

bool HamiltonianCycle::is_valid(const Digraph& d, const std::vector<Vertex>& order) {
    const int n = d.order();
    if (n < 2 || static_cast<int>(order.size()) != n) {
        return false;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!d.has_arc(order[i], order[(i + 1) % order.size()])) {
            return false;
        }
    }
    return true;
}

HamiltonianCycle::HamiltonianCycle(const Digraph& d, std::vector<Vertex> order) : order_(std::move(order)) {
    if (!is_valid(d, order_)) {
        throw std::invalid_argument("vertex sequence is not a Hamiltonian cycle of the digraph");
    }
    position_.assign(order_.size(), 0);
    for (std::size_t i = 0; i < order_.size(); ++i) {
        position_[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    }
}

Vertex HamiltonianCycle::at(int index) const {
    const int n = size();
    return order_[static_cast<std::size_t>(((index % n) + n) % n)];
}

int HamiltonianCycle::distance(Vertex a, Vertex b) const {
    const int n = size();
    return ((position(b) - position(a)) % n + n) % n;
}

std::vector<Vertex> HamiltonianCycle::open_segment(Vertex a, Vertex b) const {
    std::vector<Vertex> seg;
    const int steps = distance(a, b);
    for (int i = 1; i < steps; ++i) {
        seg.push_back(at(position(a) + i));
    }
    return seg;
}

bool HamiltonianCycle::is_cycle_edge(Vertex u, Vertex v) const {
    return successor(u) == v || successor(v) == u;
}

std::optional<HamiltonianCycle> find_hamiltonian_cycle(const Digraph& d, std::uint64_t budget) {
    const int n = d.order();
    if (n < 2) {
        return std::nullopt;
    }
    SearchBudget nodes(budget);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> path{0};
    used[0] = 1;
    auto dfs = [&](auto&& self, Vertex cur) -> bool {
        nodes.charge();
        if (static_cast<int>(path.size()) == n) {
            return d.has_arc(cur, 0);
        }
        for (Vertex nb : d.out_neighbors(cur)) {
            if (used[static_cast<std::size_t>(nb)]) {
                continue;
            }
            used[static_cast<std::size_t>(nb)] = 1;
            path.push_back(nb);
            if (self(self, nb)) {
                return true;
            }
            path.pop_back();
            used[static_cast<std::size_t>(nb)] = 0;
        }
        return false;
    };
    if (dfs(dfs, 0)) {
        return HamiltonianCycle(d, path);
    }
    return std::nullopt;
}

PeelCertificate color_hamiltonian(const Digraph& d, const HamiltonianCycle& c, int k1, int k3, std::uint64_t budget) {
    if (k1 < 1 || k3 < 1) {
        throw std::invalid_argument("k1 and k3 must be positive");
    }
    if (!HamiltonianCycle::is_valid(d, c.order())) {
        throw std::invalid_argument("cycle does not belong to the digraph");
    }
    const int k = std::max(k1, k3);
    PeelCertificate cert;
    cert.k1 = k1;
    cert.k3 = k3;
    const UGraph g = underlying_graph(d);
    PeelResult peel = peel_to_core(g, 6 * k - 1);
    if (peel.core.empty()) {
        cert.outcome = greedy_color(g, peel.removed).normalized();
        return cert;
    }
    StallCore stall;
    stall.core = std::move(peel.core);
    stall.min_degree = 6 * k;
    try {
        if (auto w = find_cycle_subdivision(d, CyclePattern(k, 1, k, 1), budget)) {
            const CyclePattern target(k1, 1, k3, 1);
            if (verify_subdivision(d, *w, target)) {
                w->pattern = target;
                stall.witness = std::move(*w);
            }
        }
    } catch (const BudgetExceeded&) {
        stall.search_exhausted = true;
    }
    cert.outcome = std::move(stall);
    return cert;
}

std::vector<ChordViolation> check_chord_neighbor_bound(const Digraph& d, const HamiltonianCycle& c, int k) {
    if (k < 1) {
        throw std::invalid_argument("block parameter must be positive");
    }
    if (!HamiltonianCycle::is_valid(d, c.order())) {
        throw std::invalid_argument("cycle does not belong to the digraph");
    }
    const UGraph g = underlying_graph(d);
    const int n = c.size();
    std::vector<ChordViolation> violations;
    std::vector<char> in_window(static_cast<std::size_t>(n), 0);
    for (const Arc& back : d.arcs()) {
        const Vertex v = back.tail;
        const Vertex u = back.head;
        if (c.is_cycle_edge(u, v)) {
            continue;
        }
        // Along C from v: x sits k-1 steps in, x' sits k-1 steps before u.
        const int span = c.distance(v, u);
        if (span < 2 * k) {
            continue;
        }
        std::fill(in_window.begin(), in_window.end(), 0);
        for (int off = k; off <= span - k; ++off) {
            in_window[static_cast<std::size_t>(c.at(c.position(v) + off))] = 1;
        }
        for (Vertex w : c.open_segment(u, v)) {
            int count = 0;
            for (Vertex nb : g.neighbors(w)) {
                count += in_window[static_cast<std::size_t>(nb)];
            }
            if (count > 2) {
                violations.push_back({u, v, w, count});
            }
        }
    }
    std::sort(violations.begin(), violations.end(), [](const ChordViolation& a, const ChordViolation& b) {
        return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
    });
    return violations;
}

}  // namespace fourblocks
