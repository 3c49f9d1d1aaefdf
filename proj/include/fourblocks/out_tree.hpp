#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "fourblocks/digraph.hpp"

namespace fourblocks {

inline constexpr Vertex kNoParent = -1;

class UnreachableVertex : public std::runtime_error {
public:
    explicit UnreachableVertex(Vertex v);
    Vertex vertex() const noexcept { return vertex_; }

private:
    Vertex vertex_;
};

/// Spanning out-tree given by parent links.
///
/// Levels count vertices on the root path, so the root sits at level 1 and every
/// child is one level below its parent.
class OutTree {
public:
    /// Validates that `parent` describes a single tree rooted at `root` (exactly one
    /// parentless vertex, no cycles). Throws std::invalid_argument otherwise.
    OutTree(Vertex root, std::vector<Vertex> parent);

    Vertex root() const noexcept { return root_; }
    int order() const noexcept { return static_cast<int>(parent_.size()); }
    Vertex parent(Vertex v) const { return parent_.at(static_cast<std::size_t>(v)); }
    int level(Vertex v) const { return level_.at(static_cast<std::size_t>(v)); }
    const std::vector<Vertex>& parents() const noexcept { return parent_; }
    const std::vector<int>& levels() const noexcept { return level_; }
    int max_level() const;

    /// Tree arcs (parent, child), ordered by child.
    std::vector<Arc> arcs() const;

    /// Vertices of the root -> v tree path, root first.
    std::vector<Vertex> root_path(Vertex v) const;

    /// True iff every tree arc is an arc of `d` and the vertex sets agree.
    bool is_spanning_tree_of(const Digraph& d) const;

    friend bool operator==(const OutTree&, const OutTree&) = default;

private:
    Vertex root_;
    std::vector<Vertex> parent_;
    std::vector<int> level_;
};

enum class ArcKind { Forward, Backward };

/// Breadth-first out-tree of `d` rooted at `r`. Throws UnreachableVertex.
OutTree spanning_out_tree(const Digraph& d, Vertex r);

/// y is an ancestor of x (y lies on the root -> x path). Reflexive.
bool is_ancestor(const OutTree& t, Vertex y, Vertex x);

/// Deepest common ancestor, by lifting the deeper endpoint and then both.
Vertex lca(const OutTree& t, Vertex x, Vertex y);

ArcKind classify_arc(const OutTree& t, Arc a);

/// Every backward arc (x, y) of `d` points to an ancestor y of x.
bool is_final(const Digraph& d, const OutTree& t);

/// Rotates backward arcs into the tree until it is final.
///
/// Each pass scans the arcs of `d` in lexicographic order and applies the first
/// backward arc (x, y) whose head is not an ancestor of its tail: y is re-hung below
/// x and the levels of y's subtree are recomputed. Every rotation strictly raises
/// the level of y and never lowers another level, so the level sum is a bounded
/// potential and the loop terminates.
OutTree finalize(const Digraph& d, const OutTree& t);

/// Debug dump: one line `v parent level` per vertex, `-` as the root's parent.
void write_tree(std::ostream& out, const OutTree& t);

}  // namespace fourblocks
