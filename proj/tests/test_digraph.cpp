#include <gtest/gtest.h>

#include <sstream>

#include "fourblocks/digraph.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace fourblocks;

namespace {

UGraph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return UGraph(n, edges);
}

UGraph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return UGraph(n, edges);
}

}  // namespace

TEST(Digraph, RejectsLoopsDuplicatesAndBadIds) {
    std::vector<Arc> loop{{1, 1}};
    EXPECT_THROW(Digraph(3, loop), DigraphError);
    std::vector<Arc> dup{{0, 1}, {0, 1}};
    EXPECT_THROW(Digraph(3, dup), DigraphError);
    std::vector<Arc> out_of_range{{0, 3}};
    EXPECT_THROW(Digraph(3, out_of_range), DigraphError);
}

TEST(Digraph, DigonKeepsBothArcs) {
    std::vector<Arc> arcs{{0, 1}, {1, 0}};
    Digraph d(2, arcs);
    EXPECT_EQ(d.arc_count(), 2u);
    EXPECT_TRUE(d.has_arc(0, 1));
    EXPECT_TRUE(d.has_arc(1, 0));
    EXPECT_EQ(d.in_neighbors(0), std::vector<Vertex>{1});
}

TEST(UnderlyingGraph, DigonIsOneEdge) {
    std::vector<Arc> arcs{{0, 1}, {1, 0}};
    UGraph g = underlying_graph(Digraph(2, arcs));
    EXPECT_EQ(g.edge_count(), 1u);
    EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(UnderlyingGraph, EmptyAndTriangle) {
    EXPECT_EQ(underlying_graph(Digraph(4)).edge_count(), 0u);
    UGraph tri = underlying_graph(testgen::cycle(3));
    EXPECT_EQ(tri.edge_count(), 3u);
    EXPECT_EQ(tri.min_degree(), 2);
}

TEST(StrongConnectivity, Examples) {
    EXPECT_TRUE(is_strongly_connected(testgen::cycle(5)));
    EXPECT_FALSE(is_strongly_connected(testgen::transitive_tournament(4)));
    EXPECT_TRUE(is_strongly_connected(Digraph(1)));
}

TEST(Acyclic, Examples) {
    EXPECT_TRUE(is_acyclic(testgen::transitive_tournament(5)));
    EXPECT_FALSE(is_acyclic(testgen::cycle(4)));
}

TEST(IsProper, Triangle) {
    UGraph tri = underlying_graph(testgen::cycle(3));
    EXPECT_TRUE(is_proper(tri, Coloring({0, 1, 2})));
    EXPECT_FALSE(is_proper(tri, Coloring({0, 1, 1})));
    EXPECT_TRUE(is_proper(UGraph(4), Coloring({0, 0, 0, 0})));
}

TEST(IsProper, UncoloredEndpointIsNotProper) {
    UGraph g = path_graph(2);
    EXPECT_FALSE(is_proper(g, Coloring({0, kUncolored})));
    EXPECT_FALSE(is_proper(g, Coloring({0})));
}

TEST(Coloring, PaletteAndNormalization) {
    Coloring c({7, kUncolored, 3, 7});
    EXPECT_EQ(c.palette_size(), 2);
    EXPECT_FALSE(c.is_total());
    EXPECT_EQ(c.normalized().colors(), (std::vector<Color>{1, kUncolored, 0, 1}));
}

TEST(Degeneracy, Examples) {
    EXPECT_EQ(degeneracy_order(path_graph(5)).degeneracy, 1);
    EXPECT_EQ(degeneracy_order(complete_graph(4)).degeneracy, 3);
    UGraph tt6 = underlying_graph(testgen::transitive_tournament(6));
    EXPECT_EQ(oracle::brute_degeneracy(tt6), 5);
    EXPECT_EQ(degeneracy_order(tt6).degeneracy, 5);
}

TEST(Degeneracy, OrderWitnessesTheValue) {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(11));
        UGraph g = testgen::random_graph(rng, n, 1 + static_cast<int>(rng.below(4)), 5);
        auto o = degeneracy_order(g);
        ASSERT_EQ(o.degeneracy, oracle::brute_degeneracy(g));
        std::vector<int> pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            pos[static_cast<std::size_t>(o.order[static_cast<std::size_t>(i)])] = i;
        }
        for (Vertex v = 0; v < n; ++v) {
            int later = 0;
            for (Vertex w : g.neighbors(v)) {
                later += pos[static_cast<std::size_t>(w)] > pos[static_cast<std::size_t>(v)] ? 1 : 0;
            }
            EXPECT_LE(later, o.degeneracy);
        }
    }
}

TEST(PeelToCore, CoreHasLargeMinimumDegree) {
    auto r = peel_to_core(complete_graph(5), 3);
    EXPECT_EQ(r.core.size(), 5u);
    EXPECT_TRUE(r.removed.order.empty());
    auto ok = peel_to_core(complete_graph(5), 4);
    EXPECT_TRUE(ok.core.empty());
}

TEST(GreedyColor, Examples) {
    UGraph p5 = path_graph(5);
    Coloring c = greedy_color(p5, degeneracy_order(p5));
    EXPECT_TRUE(is_proper(p5, c));
    EXPECT_EQ(c.palette_size(), 2);
    UGraph k4 = complete_graph(4);
    Coloring c4 = greedy_color(k4, degeneracy_order(k4));
    EXPECT_TRUE(is_proper(k4, c4));
    EXPECT_EQ(c4.palette_size(), 4);
}

TEST(GreedyColor, RandomGraphsAgainstIndependentChecker) {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        Digraph d = testgen::random_digraph(rng, 20, 1, 8);
        UGraph g = underlying_graph(d);
        auto o = degeneracy_order(g);
        Coloring c = greedy_color(g, o);
        EXPECT_TRUE(oracle::proper_on_arcs(d, c.colors()));
        EXPECT_LE(c.palette_size(), o.degeneracy + 1);
    }
}

TEST(ProductColoring, DisjointSets) {
    // vertices 0,1 form D1 (edge), 2,3,4 form D2 (triangle)
    Coloring c1({0, 1, kUncolored, kUncolored, kUncolored});
    Coloring c2({kUncolored, kUncolored, 0, 1, 2});
    std::vector<Vertex> v1{0, 1};
    std::vector<Vertex> v2{2, 3, 4};
    Coloring c = product_coloring(c1, c2, v1, v2);
    EXPECT_LE(c.palette_size(), 6);
    std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {2, 3}, {3, 4}, {2, 4}};
    EXPECT_TRUE(is_proper(UGraph(5, edges), c));
}

TEST(ProductColoring, IdenticalOneColorings) {
    Coloring c1({0, 0, 0});
    std::vector<Vertex> all{0, 1, 2};
    EXPECT_EQ(product_coloring(c1, c1, all, all).palette_size(), 1);
}

TEST(ProductColoring, RejectsPartialInput) {
    Coloring c1({0, kUncolored});
    std::vector<Vertex> all{0, 1};
    EXPECT_THROW(product_coloring(c1, c1, all, all), std::invalid_argument);
}

TEST(ProductColoring, SharedPathProperty) {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        std::vector<std::pair<Vertex, Vertex>> e1;
        std::vector<std::pair<Vertex, Vertex>> e2;
        for (Vertex v = 0; v + 1 < n; ++v) {
            (rng.below(2) ? e1 : e2).emplace_back(v, v + 1);
        }
        UGraph g1(n, e1);
        UGraph g2(n, e2);
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            all[static_cast<std::size_t>(v)] = v;
        }
        Coloring a = greedy_color(g1, degeneracy_order(g1));
        Coloring b = greedy_color(g2, degeneracy_order(g2));
        Coloring c = product_coloring(a, b, all, all);
        EXPECT_TRUE(is_proper(path_graph(n), c));
        EXPECT_LE(c.palette_size(), a.palette_size() * b.palette_size());
    }
}

TEST(InducedSubdigraph, LocalIdsFollowGivenOrder) {
    Digraph c5 = testgen::cycle(5);
    std::vector<Vertex> keep{3, 1, 2};
    auto sub = induced_subdigraph(c5, keep);
    EXPECT_EQ(sub.global, keep);
    EXPECT_EQ(sub.graph.arc_count(), 2u);
    EXPECT_TRUE(sub.graph.has_arc(1, 2));  // 1 -> 2 globally
    EXPECT_TRUE(sub.graph.has_arc(2, 0));  // 2 -> 3 globally
}

TEST(TextFormat, RoundTrip) {
    std::vector<Arc> arcs{{2, 0}, {0, 1}, {1, 0}};
    Digraph d(3, arcs);
    std::istringstream in(to_text(d));
    EXPECT_EQ(read_digraph(in), d);
}

TEST(TextFormat, CommentsAndBlankLines) {
    std::istringstream in("# header\n3 2\n\n0 1 # arc\n1 2\n");
    Digraph d = read_digraph(in);
    EXPECT_EQ(d.arc_count(), 2u);
}

TEST(TextFormat, ErrorsCarryLineNumbers) {
    auto line_of = [](const std::string& text) -> std::size_t {
        std::istringstream in(text);
        try {
            read_digraph(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    EXPECT_EQ(line_of("3 2\n0 1\n1 1\n"), 3u);
    EXPECT_EQ(line_of("3 2\n0 1\n0 1\n"), 3u);
    EXPECT_EQ(line_of("3 1\n0 7\n"), 2u);
    EXPECT_EQ(line_of("3 1\nzero one\n"), 2u);
    EXPECT_NE(line_of("3 2\n0 1\n"), 0u);
}
