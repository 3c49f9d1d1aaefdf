#include "fourblocks/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

namespace fourblocks {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("below(0)");
    }
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = next();
        if (r >= threshold) {
            return r % bound;
        }
    }
}

namespace {

constexpr std::pair<Family, const char*> kFamilyNames[] = {
    {Family::DirectedCycle, "cycle"},
    {Family::RandomStrong, "strong"},
    {Family::RandomHamiltonian, "hamiltonian"},
    {Family::TransitiveTournament, "tournament"},
    {Family::PlantedSubdivision, "planted"},
    {Family::AncestorDigraph, "ancestor"},
};

// Accumulates arcs without duplicates; noise is drawn from a candidate pool.
class ArcSet {
public:
    explicit ArcSet(int n) : n_(n) {}

    bool add(Vertex u, Vertex v) {
        if (u == v) {
            return false;
        }
        return arcs_.insert({u, v}).second;
    }
    bool contains(Vertex u, Vertex v) const { return arcs_.count({u, v}) != 0; }
    int size() const { return static_cast<int>(arcs_.size()); }

    /// Adds uniformly chosen arcs among the pairs accepted by `allowed` until `target` arcs exist.
    template <class Pred>
    void fill(int target, SplitMix64& rng, Pred allowed) {
        std::vector<Arc> pool;
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v = 0; v < n_; ++v) {
                if (u != v && !contains(u, v) && allowed(u, v)) {
                    pool.push_back({u, v});
                }
            }
        }
        while (size() < target && !pool.empty()) {
            const auto pick = static_cast<std::size_t>(rng.below(pool.size()));
            add(pool[pick].tail, pool[pick].head);
            pool[pick] = pool.back();
            pool.pop_back();
        }
    }

    Digraph build() const {
        std::vector<Arc> list(arcs_.begin(), arcs_.end());
        return Digraph(n_, list);
    }

private:
    int n_;
    std::set<Arc> arcs_;
};

std::vector<Vertex> permutation(int n, SplitMix64& rng) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    return perm;
}

Digraph random_strong(const GenSpec& spec, SplitMix64& rng) {
    const int n = spec.n;
    ArcSet arcs(n);
    const auto perm = permutation(n, rng);
    for (int i = 0; i + 1 < n; ++i) {
        arcs.add(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    }
    arcs.fill(spec.m, rng, [](Vertex, Vertex) { return true; });
    Digraph d = arcs.build();
    if (!is_strongly_connected(d)) {
        // The Hamiltonian-path skeleton makes one closing arc enough.
        arcs.add(perm.back(), perm.front());
        d = arcs.build();
    }
    return d;
}

Digraph random_hamiltonian(const GenSpec& spec, SplitMix64& rng) {
    const int n = spec.n;
    if (n < 2 || spec.m < n) {
        throw InfeasibleSpec("hamiltonian family needs n >= 2 and m >= n");
    }
    ArcSet arcs(n);
    for (Vertex v = 0; v < n; ++v) {
        arcs.add(v, (v + 1) % n);
    }
    arcs.fill(spec.m, rng, [](Vertex, Vertex) { return true; });
    return arcs.build();
}

Digraph ancestor_digraph(const GenSpec& spec, SplitMix64& rng) {
    const int n = spec.n;
    ArcSet arcs(n);
    const auto perm = permutation(n, rng);
    std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> children(static_cast<std::size_t>(n), 0);
    for (int i = 1; i < n; ++i) {
        const Vertex p = perm[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i)))];
        const Vertex v = perm[static_cast<std::size_t>(i)];
        parent[static_cast<std::size_t>(v)] = p;
        ++children[static_cast<std::size_t>(p)];
        arcs.add(p, v);
    }
    const Vertex root = perm.front();
    for (Vertex v = 0; v < n; ++v) {
        if (v != root && children[static_cast<std::size_t>(v)] == 0) {
            arcs.add(v, root);
        }
    }
    auto strict_ancestor = [&](Vertex y, Vertex x) {
        for (Vertex cur = parent[static_cast<std::size_t>(x)]; cur >= 0; cur = parent[static_cast<std::size_t>(cur)]) {
            if (cur == y) {
                return true;
            }
        }
        return false;
    };
    arcs.fill(spec.m, rng, strict_ancestor);
    return arcs.build();
}

GeneratedInstance planted(const GenSpec& spec, SplitMix64& rng) {
    if (!spec.pattern) {
        throw InfeasibleSpec("planted family needs a pattern");
    }
    const CyclePattern& p = *spec.pattern;
    const int n = spec.n;
    if (n < p.total()) {
        throw InfeasibleSpec("planted family needs n >= sum of block lengths");
    }
    const auto perm = permutation(n, rng);
    std::size_t next = 0;
    auto take = [&] { return perm[next++]; };

    // Lay the cycle out as s1 => t1 <= s2 => t2 <= s1, with each block of minimum length.
    SubdivisionWitness w;
    w.pattern = p;
    const Vertex s1 = take();
    w.paths[0].push_back(s1);
    for (int i = 1; i < p[0]; ++i) {
        w.paths[0].push_back(take());
    }
    const Vertex t1 = take();
    w.paths[0].push_back(t1);
    std::vector<Vertex> back{t1};
    for (int i = 1; i < p[1]; ++i) {
        back.push_back(take());
    }
    const Vertex s2 = take();
    back.push_back(s2);
    w.paths[1].assign(back.rbegin(), back.rend());
    w.paths[2].push_back(s2);
    for (int i = 1; i < p[2]; ++i) {
        w.paths[2].push_back(take());
    }
    const Vertex t2 = take();
    w.paths[2].push_back(t2);
    back.assign(1, t2);
    for (int i = 1; i < p[3]; ++i) {
        back.push_back(take());
    }
    back.push_back(s1);
    w.paths[3].assign(back.rbegin(), back.rend());
    w.junctions = {s1, t1, s2, t2};

    ArcSet arcs(n);
    std::vector<char> interior(static_cast<std::size_t>(n), 0);
    for (const auto& path : w.paths) {
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            arcs.add(path[i], path[i + 1]);
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            interior[static_cast<std::size_t>(path[i])] = 1;
        }
    }
    // Return routes t1 -> s2 and t2 -> s1 through the unused vertices make the digraph strong.
    std::vector<Vertex> spare(perm.begin() + static_cast<std::ptrdiff_t>(next), perm.end());
    const std::size_t half = spare.size() / 2;
    auto route = [&](Vertex from, Vertex to, std::size_t lo, std::size_t hi) {
        Vertex cur = from;
        for (std::size_t i = lo; i < hi; ++i) {
            arcs.add(cur, spare[i]);
            cur = spare[i];
        }
        arcs.add(cur, to);
    };
    route(t1, s2, 0, half);
    route(t2, s1, half, spare.size());
    arcs.fill(spec.m, rng, [&](Vertex u, Vertex v) {
        return !interior[static_cast<std::size_t>(u)] && !interior[static_cast<std::size_t>(v)];
    });
    return {arcs.build(), std::move(w)};
}

}  // namespace

std::string to_string(Family f) {
    for (const auto& [family, name] : kFamilyNames) {
        if (family == f) {
            return name;
        }
    }
    return "unknown";
}

Family parse_family(const std::string& name) {
    for (const auto& [family, known] : kFamilyNames) {
        if (name == known) {
            return family;
        }
    }
    throw std::invalid_argument("unknown family '" + name + "'");
}

GeneratedInstance generate_instance(const GenSpec& spec) {
    if (spec.n < 1) {
        throw InfeasibleSpec("n must be at least 1");
    }
    if (spec.m < 0 || static_cast<long long>(spec.m) > static_cast<long long>(spec.n) * (spec.n - 1)) {
        throw InfeasibleSpec("m must lie in [0, n(n-1)]");
    }
    SplitMix64 rng(spec.seed);
    switch (spec.family) {
        case Family::DirectedCycle: {
            ArcSet arcs(spec.n);
            for (Vertex v = 0; spec.n > 1 && v < spec.n; ++v) {
                arcs.add(v, (v + 1) % spec.n);
            }
            return {arcs.build(), std::nullopt};
        }
        case Family::TransitiveTournament: {
            ArcSet arcs(spec.n);
            for (Vertex u = 0; u < spec.n; ++u) {
                for (Vertex v = u + 1; v < spec.n; ++v) {
                    arcs.add(u, v);
                }
            }
            return {arcs.build(), std::nullopt};
        }
        case Family::RandomStrong:
            return {random_strong(spec, rng), std::nullopt};
        case Family::RandomHamiltonian:
            return {random_hamiltonian(spec, rng), std::nullopt};
        case Family::PlantedSubdivision:
            return planted(spec, rng);
        case Family::AncestorDigraph:
            return {ancestor_digraph(spec, rng), std::nullopt};
    }
    throw InfeasibleSpec("unknown family");
}

std::string spec_json(const GenSpec& spec) {
    nlohmann::ordered_json j;
    j["family"] = to_string(spec.family);
    j["n"] = spec.n;
    j["m"] = spec.m;
    j["seed"] = spec.seed;
    if (spec.pattern) {
        j["pattern"] = spec.pattern->blocks();
    } else {
        j["pattern"] = nullptr;
    }
    return j.dump();
}

}  // namespace fourblocks
