#include "fourblocks/out_tree.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <string>

namespace fourblocks {

UnreachableVertex::UnreachableVertex(Vertex v)
    : std::runtime_error("vertex " + std::to_string(v) + " is not reachable from the root"), vertex_(v) {}

OutTree::OutTree(Vertex root, std::vector<Vertex> parent) : root_(root), parent_(std::move(parent)) {
    const int n = static_cast<int>(parent_.size());
    if (root < 0 || root >= n) {
        throw std::invalid_argument("root out of range");
    }
    if (parent_[static_cast<std::size_t>(root)] != kNoParent) {
        throw std::invalid_argument("root has a parent");
    }
    level_.assign(parent_.size(), 0);
    level_[static_cast<std::size_t>(root)] = 1;
    // Resolve levels by walking up to a vertex with a known level; a walk longer
    // than n means a cycle.
    std::vector<Vertex> chain;
    for (Vertex v = 0; v < n; ++v) {
        chain.clear();
        Vertex cur = v;
        while (level_[static_cast<std::size_t>(cur)] == 0) {
            chain.push_back(cur);
            if (static_cast<int>(chain.size()) > n) {
                throw std::invalid_argument("parent links contain a cycle");
            }
            Vertex p = parent_[static_cast<std::size_t>(cur)];
            if (p == kNoParent) {
                throw std::invalid_argument("vertex " + std::to_string(cur) + " has no parent but is not the root");
            }
            if (p < 0 || p >= n) {
                throw std::invalid_argument("parent out of range");
            }
            cur = p;
        }
        int lvl = level_[static_cast<std::size_t>(cur)];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            level_[static_cast<std::size_t>(*it)] = ++lvl;
        }
    }
}

int OutTree::max_level() const {
    return level_.empty() ? 0 : *std::max_element(level_.begin(), level_.end());
}

std::vector<Arc> OutTree::arcs() const {
    std::vector<Arc> result;
    for (Vertex v = 0; v < order(); ++v) {
        if (parent(v) != kNoParent) {
            result.push_back({parent(v), v});
        }
    }
    return result;
}

std::vector<Vertex> OutTree::root_path(Vertex v) const {
    std::vector<Vertex> path;
    for (Vertex cur = v; cur != kNoParent; cur = parent(cur)) {
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

bool OutTree::is_spanning_tree_of(const Digraph& d) const {
    if (d.order() != order()) {
        return false;
    }
    auto tree = arcs();
    return std::all_of(tree.begin(), tree.end(), [&](const Arc& a) { return d.has_arc(a.tail, a.head); });
}

OutTree spanning_out_tree(const Digraph& d, Vertex r) {
    const auto n = static_cast<std::size_t>(d.order());
    if (r < 0 || static_cast<std::size_t>(r) >= n) {
        throw std::out_of_range("root out of range");
    }
    std::vector<Vertex> parent(n, kNoParent);
    std::vector<char> seen(n, 0);
    std::deque<Vertex> queue{r};
    seen[static_cast<std::size_t>(r)] = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : d.out_neighbors(u)) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                parent[static_cast<std::size_t>(v)] = u;
                queue.push_back(v);
            }
        }
    }
    auto missing = std::find(seen.begin(), seen.end(), 0);
    if (missing != seen.end()) {
        throw UnreachableVertex(static_cast<Vertex>(missing - seen.begin()));
    }
    return OutTree(r, std::move(parent));
}

bool is_ancestor(const OutTree& t, Vertex y, Vertex x) {
    while (t.level(x) > t.level(y)) {
        x = t.parent(x);
    }
    return x == y;
}

Vertex lca(const OutTree& t, Vertex x, Vertex y) {
    while (t.level(x) > t.level(y)) {
        x = t.parent(x);
    }
    while (t.level(y) > t.level(x)) {
        y = t.parent(y);
    }
    while (x != y) {
        x = t.parent(x);
        y = t.parent(y);
    }
    return x;
}

ArcKind classify_arc(const OutTree& t, Arc a) {
    return t.level(a.tail) < t.level(a.head) ? ArcKind::Forward : ArcKind::Backward;
}

bool is_final(const Digraph& d, const OutTree& t) {
    for (const Arc& a : d.arcs()) {
        if (classify_arc(t, a) == ArcKind::Backward && !is_ancestor(t, a.head, a.tail)) {
            return false;
        }
    }
    return true;
}

OutTree finalize(const Digraph& d, const OutTree& t) {
    if (!t.is_spanning_tree_of(d)) {
        throw std::invalid_argument("finalize: tree does not span the digraph");
    }
    const auto n = static_cast<std::size_t>(d.order());
    std::vector<Vertex> parent = t.parents();
    std::vector<int> level = t.levels();
    std::vector<std::vector<Vertex>> children(n);
    for (Vertex v = 0; v < d.order(); ++v) {
        if (parent[static_cast<std::size_t>(v)] != kNoParent) {
            children[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(v);
        }
    }
    auto ancestor = [&](Vertex y, Vertex x) {
        while (level[static_cast<std::size_t>(x)] > level[static_cast<std::size_t>(y)]) {
            x = parent[static_cast<std::size_t>(x)];
        }
        return x == y;
    };
    const std::vector<Arc> arcs = d.arcs();
    std::vector<Vertex> stack;
    for (;;) {
        auto eligible = std::find_if(arcs.begin(), arcs.end(), [&](const Arc& a) {
            return level[static_cast<std::size_t>(a.tail)] >= level[static_cast<std::size_t>(a.head)] &&
                   !ancestor(a.head, a.tail);
        });
        if (eligible == arcs.end()) {
            break;
        }
        const auto [x, y] = *eligible;
        auto& siblings = children[static_cast<std::size_t>(parent[static_cast<std::size_t>(y)])];
        siblings.erase(std::find(siblings.begin(), siblings.end(), y));
        parent[static_cast<std::size_t>(y)] = x;
        children[static_cast<std::size_t>(x)].push_back(y);
        level[static_cast<std::size_t>(y)] = level[static_cast<std::size_t>(x)] + 1;
        stack.assign(1, y);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex c : children[static_cast<std::size_t>(u)]) {
                level[static_cast<std::size_t>(c)] = level[static_cast<std::size_t>(u)] + 1;
                stack.push_back(c);
            }
        }
    }
    return OutTree(t.root(), std::move(parent));
}

void write_tree(std::ostream& out, const OutTree& t) {
    for (Vertex v = 0; v < t.order(); ++v) {
        out << v << ' ';
        if (t.parent(v) == kNoParent) {
            out << '-';
        } else {
            out << t.parent(v);
        }
        out << ' ' << t.level(v) << '\n';
    }
}

}  // namespace fourblocks
