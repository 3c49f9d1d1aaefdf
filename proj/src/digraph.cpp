#include "fourblocks/digraph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace fourblocks {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

Digraph::Digraph(int n) {
    if (n < 0) {
        throw DigraphError("negative vertex count");
    }
    out_.resize(static_cast<std::size_t>(n));
    in_.resize(static_cast<std::size_t>(n));
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
    for (const Arc& a : arcs) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n) {
            throw DigraphError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                               ") has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (a.tail == a.head) {
            throw DigraphError("loop at vertex " + std::to_string(a.tail));
        }
        out_[static_cast<std::size_t>(a.tail)].push_back(a.head);
        in_[static_cast<std::size_t>(a.head)].push_back(a.tail);
    }
    for (auto& list : out_) {
        std::sort(list.begin(), list.end());
        auto dup = std::adjacent_find(list.begin(), list.end());
        if (dup != list.end()) {
            auto tail = static_cast<Vertex>(&list - out_.data());
            throw DigraphError("duplicate arc (" + std::to_string(tail) + "," + std::to_string(*dup) + ")");
        }
    }
    for (auto& list : in_) {
        std::sort(list.begin(), list.end());
    }
    arc_count_ = arcs.size();
}

std::size_t Digraph::check(Vertex u) const {
    if (u < 0 || u >= order()) {
        throw std::out_of_range("vertex " + std::to_string(u) + " out of range");
    }
    return static_cast<std::size_t>(u);
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    if (u < 0 || u >= order() || v < 0 || v >= order()) {
        return false;
    }
    const auto& list = out_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

int Digraph::max_out_degree() const {
    std::size_t best = 0;
    for (const auto& list : out_) {
        best = std::max(best, list.size());
    }
    return static_cast<int>(best);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : out_[static_cast<std::size_t>(u)]) {
            result.push_back({u, v});
        }
    }
    return result;
}

Digraph Digraph::reversed() const {
    std::vector<Arc> rev;
    rev.reserve(arc_count_);
    for (const Arc& a : arcs()) {
        rev.push_back({a.head, a.tail});
    }
    return Digraph(order(), rev);
}

namespace {

std::unordered_map<Vertex, Vertex> local_index(std::span<const Vertex> vertices) {
    std::unordered_map<Vertex, Vertex> local;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!local.emplace(vertices[i], static_cast<Vertex>(i)).second) {
            throw std::invalid_argument("vertex " + std::to_string(vertices[i]) + " listed twice");
        }
    }
    return local;
}

}  // namespace

InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices) {
    auto local = local_index(vertices);
    std::vector<Arc> arcs;
    for (Vertex u : vertices) {
        for (Vertex v : d.out_neighbors(u)) {
            auto it = local.find(v);
            if (it != local.end()) {
                arcs.push_back({local.at(u), it->second});
            }
        }
    }
    return {Digraph(static_cast<int>(vertices.size()), arcs), {vertices.begin(), vertices.end()}};
}

InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices,
                                     std::span<const Arc> arcs) {
    auto local = local_index(vertices);
    std::vector<Arc> mapped;
    mapped.reserve(arcs.size());
    for (const Arc& a : arcs) {
        auto t = local.find(a.tail);
        auto h = local.find(a.head);
        if (t == local.end() || h == local.end() || !d.has_arc(a.tail, a.head)) {
            throw std::invalid_argument("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                        ") is not a host arc inside the vertex set");
        }
        mapped.push_back({t->second, h->second});
    }
    return {Digraph(static_cast<int>(vertices.size()), mapped), {vertices.begin(), vertices.end()}};
}

UGraph::UGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges) : UGraph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
            throw DigraphError("bad edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

bool UGraph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= order() || v < 0 || v >= order()) {
        return false;
    }
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

int UGraph::min_degree() const {
    if (adj_.empty()) {
        return 0;
    }
    std::size_t best = adj_.front().size();
    for (const auto& list : adj_) {
        best = std::min(best, list.size());
    }
    return static_cast<int>(best);
}

std::vector<std::pair<Vertex, Vertex>> UGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> result;
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) {
                result.emplace_back(u, v);
            }
        }
    }
    return result;
}

UGraph UGraph::induced(std::span<const Vertex> vertices, std::vector<Vertex>* global) const {
    auto local = local_index(vertices);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u : vertices) {
        for (Vertex v : neighbors(u)) {
            auto it = local.find(v);
            if (it != local.end() && u < v) {
                edges.emplace_back(local.at(u), it->second);
            }
        }
    }
    if (global != nullptr) {
        global->assign(vertices.begin(), vertices.end());
    }
    return UGraph(static_cast<int>(vertices.size()), edges);
}

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
    std::set<Color> distinct;
    for (Color c : colors_) {
        if (c < kUncolored) {
            throw std::invalid_argument("negative colour id " + std::to_string(c));
        }
        if (c != kUncolored) {
            distinct.insert(c);
        }
    }
    palette_size_ = static_cast<int>(distinct.size());
}

int Coloring::max_color() const noexcept {
    Color best = kUncolored;
    for (Color c : colors_) {
        best = std::max(best, c);
    }
    return best;
}

bool Coloring::is_total() const {
    return std::none_of(colors_.begin(), colors_.end(), [](Color c) { return c == kUncolored; });
}

Coloring Coloring::normalized() const {
    std::vector<Color> used;
    for (Color c : colors_) {
        if (c != kUncolored) {
            used.push_back(c);
        }
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<Color> out(colors_.size(), kUncolored);
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i] != kUncolored) {
            out[i] = static_cast<Color>(std::lower_bound(used.begin(), used.end(), colors_[i]) - used.begin());
        }
    }
    return Coloring(std::move(out));
}

UGraph underlying_graph(const Digraph& d) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(d.arc_count());
    for (const Arc& a : d.arcs()) {
        edges.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
    }
    return UGraph(d.order(), edges);
}

namespace {

std::vector<char> reach(const Digraph& d, Vertex start, bool forward) {
    std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
    std::vector<Vertex> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        const auto& next = forward ? d.out_neighbors(u) : d.in_neighbors(u);
        for (Vertex v : next) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
    if (d.order() <= 1) {
        return true;
    }
    auto all = [](const std::vector<char>& s) { return std::all_of(s.begin(), s.end(), [](char c) { return c != 0; }); };
    return all(reach(d, 0, true)) && all(reach(d, 0, false));
}

bool is_acyclic(const Digraph& d) {
    std::vector<int> indeg(static_cast<std::size_t>(d.order()));
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < d.order(); ++v) {
        indeg[static_cast<std::size_t>(v)] = d.in_degree(v);
        if (indeg[static_cast<std::size_t>(v)] == 0) {
            ready.push_back(v);
        }
    }
    int removed = 0;
    while (!ready.empty()) {
        Vertex u = ready.back();
        ready.pop_back();
        ++removed;
        for (Vertex v : d.out_neighbors(u)) {
            if (--indeg[static_cast<std::size_t>(v)] == 0) {
                ready.push_back(v);
            }
        }
    }
    return removed == d.order();
}

bool is_proper(const UGraph& g, const Coloring& c) {
    if (static_cast<int>(c.size()) < g.order()) {
        return false;
    }
    for (auto [u, v] : g.edges()) {
        if (c[u] == kUncolored || c[v] == kUncolored || c[u] == c[v]) {
            return false;
        }
    }
    return true;
}

PeelResult peel_to_core(const UGraph& g, int max_degree) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> degree(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < g.order(); ++v) {
        degree[static_cast<std::size_t>(v)] = g.degree(v);
        queue.emplace(g.degree(v), v);
    }
    std::vector<char> removed(n, 0);
    PeelResult result;
    result.removed.order.reserve(n);
    while (!queue.empty()) {
        auto [deg, v] = *queue.begin();
        if (deg > max_degree) {
            for (const auto& entry : queue) {
                result.core.push_back(entry.second);
            }
            std::sort(result.core.begin(), result.core.end());
            break;
        }
        queue.erase(queue.begin());
        removed[static_cast<std::size_t>(v)] = 1;
        result.removed.order.push_back(v);
        result.removed.degeneracy = std::max(result.removed.degeneracy, deg);
        for (Vertex w : g.neighbors(v)) {
            auto wi = static_cast<std::size_t>(w);
            if (!removed[wi]) {
                queue.erase({degree[wi], w});
                --degree[wi];
                queue.emplace(degree[wi], w);
            }
        }
    }
    return result;
}

DegeneracyOrder degeneracy_order(const UGraph& g) {
    return peel_to_core(g, std::numeric_limits<int>::max()).removed;
}

Coloring greedy_color(const UGraph& g, const DegeneracyOrder& o) {
    std::vector<Color> colors(static_cast<std::size_t>(g.order()), kUncolored);
    std::vector<char> taken;
    for (auto it = o.order.rbegin(); it != o.order.rend(); ++it) {
        taken.assign(static_cast<std::size_t>(g.degree(*it)) + 1, 0);
        for (Vertex w : g.neighbors(*it)) {
            Color c = colors[static_cast<std::size_t>(w)];
            if (c != kUncolored && c < static_cast<Color>(taken.size())) {
                taken[static_cast<std::size_t>(c)] = 1;
            }
        }
        auto first_free = std::find(taken.begin(), taken.end(), 0) - taken.begin();
        colors[static_cast<std::size_t>(*it)] = static_cast<Color>(first_free);
    }
    return Coloring(std::move(colors));
}

Coloring product_coloring(const Coloring& c1, const Coloring& c2,
                          std::span<const Vertex> v1, std::span<const Vertex> v2) {
    if (c1.size() != c2.size()) {
        throw std::invalid_argument("product_coloring: colourings index different vertex universes");
    }
    const auto n = c1.size();
    std::vector<char> in1(n, 0);
    std::vector<char> in2(n, 0);
    auto mark = [n](std::span<const Vertex> vs, const Coloring& c, std::vector<char>& in, const char* which) {
        for (Vertex v : vs) {
            if (v < 0 || static_cast<std::size_t>(v) >= n || c[v] == kUncolored) {
                throw std::invalid_argument(std::string("product_coloring: ") + which +
                                            " is not total on vertex " + std::to_string(v));
            }
            in[static_cast<std::size_t>(v)] = 1;
        }
    };
    mark(v1, c1, in1, "first colouring");
    mark(v2, c2, in2, "second colouring");

    const Coloring a = c1.normalized();
    const Coloring b = c2.normalized();
    const Color width = std::max(1, b.palette_size());
    std::vector<Color> out(n, kUncolored);
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<Vertex>(i);
        if (in1[i] && in2[i]) {
            out[i] = a[v] * width + b[v];
        } else if (in1[i]) {
            out[i] = a[v] * width;
        } else if (in2[i]) {
            out[i] = b[v];
        }
    }
    return Coloring(std::move(out)).normalized();
}

Digraph read_digraph(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Arc> arcs;
    std::set<Arc> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string text = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::istringstream fields(text);
        long long a = 0;
        long long b = 0;
        if (!(fields >> a)) {
            if (text.find_first_not_of(" \t\r") != std::string::npos) {
                throw ParseError(line_no, "expected two integers, got '" + text + "'");
            }
            continue;
        }
        if (!(fields >> b)) {
            throw ParseError(line_no, "expected two integers");
        }
        std::string extra;
        if (fields >> extra) {
            throw ParseError(line_no, "trailing input '" + extra + "'");
        }
        if (!have_header) {
            if (a < 0 || b < 0) {
                throw ParseError(line_no, "header values must be non-negative");
            }
            if (a > 0 && b > a * (a - 1)) {
                throw ParseError(line_no, "arc count exceeds n(n-1)");
            }
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (static_cast<long long>(arcs.size()) == m) {
            throw ParseError(line_no, "more arc lines than the declared " + std::to_string(m));
        }
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw ParseError(line_no, "vertex out of range 0.." + std::to_string(n - 1));
        }
        Arc arc{static_cast<Vertex>(a), static_cast<Vertex>(b)};
        if (arc.tail == arc.head) {
            throw ParseError(line_no, "loop at vertex " + std::to_string(a));
        }
        if (!seen.insert(arc).second) {
            throw ParseError(line_no, "duplicate arc " + std::to_string(a) + " " + std::to_string(b));
        }
        arcs.push_back(arc);
    }
    if (!have_header) {
        throw ParseError(line_no, "missing 'n m' header");
    }
    if (static_cast<long long>(arcs.size()) != m) {
        throw ParseError(line_no, "expected " + std::to_string(m) + " arcs, found " + std::to_string(arcs.size()));
    }
    return Digraph(static_cast<int>(n), arcs);
}

Digraph read_digraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return read_digraph(in);
}

void write_digraph(std::ostream& out, const Digraph& d) {
    out << d.order() << ' ' << d.arc_count() << '\n';
    for (const Arc& a : d.arcs()) {
        out << a.tail << ' ' << a.head << '\n';
    }
}

std::string to_text(const Digraph& d) {
    std::ostringstream out;
    write_digraph(out, d);
    return out.str();
}

}  // namespace fourblocks
