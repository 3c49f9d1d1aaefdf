#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fourblocks {

using Vertex = int;
using Color = int;

inline constexpr Color kUncolored = -1;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Raised when an arc list violates the digraph invariants (loops, duplicates, bad ids).
class DigraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the text reader; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Loop-free directed graph on vertices 0..n-1. Digons are allowed, duplicate arcs are not.
/// Immutable once built; adjacency lists are kept sorted.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);
    Digraph(int n, std::span<const Arc> arcs);

    int order() const noexcept { return static_cast<int>(out_.size()); }
    std::size_t arc_count() const noexcept { return arc_count_; }

    bool has_arc(Vertex u, Vertex v) const;
    const std::vector<Vertex>& out_neighbors(Vertex u) const { return out_[check(u)]; }
    const std::vector<Vertex>& in_neighbors(Vertex u) const { return in_[check(u)]; }
    int out_degree(Vertex u) const { return static_cast<int>(out_neighbors(u).size()); }
    int in_degree(Vertex u) const { return static_cast<int>(in_neighbors(u).size()); }
    int max_out_degree() const;

    /// All arcs in (tail, head) lexicographic order.
    std::vector<Arc> arcs() const;

    Digraph reversed() const;

    friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_ == b.out_; }

private:
    std::size_t check(Vertex u) const;

    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::size_t arc_count_ = 0;
};

/// A subdigraph relabelled to dense local ids; `global[local]` maps back to the host.
struct InducedSubdigraph {
    Digraph graph;
    std::vector<Vertex> global;
};

/// Subdigraph of `d` induced by `vertices`.
InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices);
/// Same vertex set, but only the given host arcs (both ends must lie in `vertices`).
InducedSubdigraph induced_subdigraph(const Digraph& d, std::span<const Vertex> vertices,
                                     std::span<const Arc> arcs);

/// Simple undirected graph. A digon of the source digraph is a single edge here.
class UGraph {
public:
    UGraph() = default;
    explicit UGraph(int n) : adj_(static_cast<std::size_t>(n)) {}
    UGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex u) const { return adj_.at(static_cast<std::size_t>(u)); }
    int degree(Vertex u) const { return static_cast<int>(neighbors(u).size()); }
    int min_degree() const;

    /// Edges as (u, v) with u < v, lexicographically ordered.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    UGraph induced(std::span<const Vertex> vertices, std::vector<Vertex>* global = nullptr) const;

    friend bool operator==(const UGraph& a, const UGraph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Vertex colouring indexed by vertex id; kUncolored marks vertices outside the domain.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<Color> colors);

    const std::vector<Color>& colors() const noexcept { return colors_; }
    Color operator[](Vertex v) const { return colors_.at(static_cast<std::size_t>(v)); }
    std::size_t size() const noexcept { return colors_.size(); }
    int palette_size() const noexcept { return palette_size_; }
    int max_color() const noexcept;

    bool is_total() const;
    bool is_colored(Vertex v) const { return (*this)[v] != kUncolored; }

    /// Renumbers colours to 0..palette_size-1, preserving their relative order.
    Coloring normalized() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> colors_;
    int palette_size_ = 0;
};

struct DegeneracyOrder {
    std::vector<Vertex> order;  // removal order
    int degeneracy = 0;
};

UGraph underlying_graph(const Digraph& d);
bool is_strongly_connected(const Digraph& d);
bool is_acyclic(const Digraph& d);

/// True iff every edge has two coloured endpoints with distinct colours.
bool is_proper(const UGraph& g, const Coloring& c);

/// Smallest-last order: repeatedly removes a minimum-degree vertex (smallest id on ties).
DegeneracyOrder degeneracy_order(const UGraph& g);

/// Peels vertices of residual degree <= max_degree (minimum degree first, smallest id on
/// ties). `core` holds what is left when no such vertex remains; it is empty on success
/// and then has minimum degree > max_degree otherwise.
struct PeelResult {
    DegeneracyOrder removed;
    std::vector<Vertex> core;
};
PeelResult peel_to_core(const UGraph& g, int max_degree);

/// First-fit colouring in reverse removal order; uses at most o.degeneracy + 1 colours.
Coloring greedy_color(const UGraph& g, const DegeneracyOrder& o);

/// Product colouring of D1 ∪ D2 from colourings of D1 (on v1) and D2 (on v2).
///
/// Vertices only in v1 get (c1, first), vertices in both get (c1, c2), vertices only
/// in v2 get (first, c2); pairs are flattened and the result normalized. Both inputs
/// must be indexed by the same vertex universe. Throws std::invalid_argument if a
/// colouring is not total on its vertex set.
Coloring product_coloring(const Coloring& c1, const Coloring& c2,
                          std::span<const Vertex> v1, std::span<const Vertex> v2);

// Text format: `n m` then m lines `u v`; `#` starts a comment.
Digraph read_digraph(std::istream& in);
Digraph read_digraph_file(const std::string& path);
void write_digraph(std::ostream& out, const Digraph& d);
std::string to_text(const Digraph& d);

}  // namespace fourblocks
