#include <gtest/gtest.h>

#include "fourblocks/generators.hpp"
#include "support/oracles.hpp"

using namespace fourblocks;

TEST(SplitMix64, ReferenceStream) {
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}

TEST(SplitMix64, BelowStaysInRange) {
    SplitMix64 rng(9);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) {
        const auto x = rng.below(7);
        ASSERT_LT(x, 7u);
        ++hits[static_cast<std::size_t>(x)];
    }
    for (int h : hits) {
        EXPECT_GT(h, 800);
    }
    EXPECT_THROW(rng.below(0), std::invalid_argument);
}

TEST(Families, NamesRoundTrip) {
    for (Family f : {Family::DirectedCycle, Family::RandomStrong, Family::RandomHamiltonian,
                     Family::TransitiveTournament, Family::PlantedSubdivision, Family::AncestorDigraph}) {
        EXPECT_EQ(parse_family(to_string(f)), f);
    }
    EXPECT_THROW(parse_family("lattice"), std::invalid_argument);
}

TEST(Generate, DirectedCycle) {
    Digraph d = generate({Family::DirectedCycle, 5, 5, 0, std::nullopt});
    EXPECT_EQ(d.arc_count(), 5u);
    EXPECT_TRUE(is_strongly_connected(d));
    EXPECT_EQ(d.max_out_degree(), 1);
}

TEST(Generate, TransitiveTournamentContainsPattern) {
    Digraph d = generate({Family::TransitiveTournament, 4, 6, 0, std::nullopt});
    EXPECT_EQ(d.arc_count(), 6u);
    EXPECT_TRUE(oracle::naive_cycle_subdivision(d, CyclePattern(1, 1, 1, 1)));
}

TEST(Generate, PlantedSurvivesNoise) {
    GenSpec spec{Family::PlantedSubdivision, 12, 30, 7, CyclePattern(2, 1, 2, 1)};
    auto inst = generate_instance(spec);
    ASSERT_TRUE(inst.planted);
    EXPECT_TRUE(verify_subdivision(inst.digraph, *inst.planted, CyclePattern(2, 1, 2, 1)));
    EXPECT_TRUE(find_cycle_subdivision(inst.digraph, CyclePattern(2, 1, 2, 1)));
    EXPECT_TRUE(is_strongly_connected(inst.digraph));
}

TEST(Generate, FamiliesAreStrong) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        SplitMix64 rng(seed);
        const int n = 2 + static_cast<int>(rng.below(15));
        const int m = n + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        for (Family f : {Family::RandomStrong, Family::RandomHamiltonian, Family::AncestorDigraph}) {
            Digraph d = generate({f, n, std::min(m, n * (n - 1)), seed, std::nullopt});
            EXPECT_TRUE(is_strongly_connected(d)) << to_string(f) << " seed " << seed;
            EXPECT_GE(static_cast<int>(d.arc_count()), std::min(m, n * (n - 1)) - 1);
        }
        const CyclePattern p(1 + static_cast<int>(rng.below(2)), 1, 1 + static_cast<int>(rng.below(2)), 1);
        auto planted = generate_instance({Family::PlantedSubdivision, std::max(n, p.total()), m, seed, p});
        EXPECT_TRUE(is_strongly_connected(planted.digraph));
        EXPECT_TRUE(verify_subdivision(planted.digraph, *planted.planted, p));
    }
}

TEST(Generate, HamiltonianFamilyKeepsIdentityCycle) {
    Digraph d = generate({Family::RandomHamiltonian, 9, 14, 3, std::nullopt});
    for (Vertex v = 0; v < 9; ++v) {
        EXPECT_TRUE(d.has_arc(v, (v + 1) % 9));
    }
    EXPECT_EQ(d.arc_count(), 14u);
}

TEST(Generate, AncestorFamilyShape) {
    Digraph d = generate({Family::AncestorDigraph, 12, 20, 5, std::nullopt});
    OutTree t = spanning_out_tree(d, 0);
    EXPECT_TRUE(t.is_spanning_tree_of(d));
}

TEST(Generate, Deterministic) {
    for (Family f : {Family::RandomStrong, Family::RandomHamiltonian, Family::AncestorDigraph}) {
        GenSpec spec{f, 10, 16, 42, std::nullopt};
        EXPECT_EQ(to_text(generate(spec)), to_text(generate(spec)));
    }
    GenSpec planted{Family::PlantedSubdivision, 10, 16, 42, CyclePattern(1, 1, 1, 1)};
    EXPECT_EQ(generate_instance(planted).planted, generate_instance(planted).planted);
    GenSpec a{Family::RandomStrong, 10, 16, 1, std::nullopt};
    GenSpec b{Family::RandomStrong, 10, 16, 2, std::nullopt};
    EXPECT_NE(to_text(generate(a)), to_text(generate(b)));
}

TEST(Generate, InfeasibleSpecs) {
    EXPECT_THROW(generate({Family::RandomStrong, 0, 0, 0, std::nullopt}), InfeasibleSpec);
    EXPECT_THROW(generate({Family::RandomStrong, 3, 7, 0, std::nullopt}), InfeasibleSpec);
    EXPECT_THROW(generate({Family::PlantedSubdivision, 8, 10, 0, std::nullopt}), InfeasibleSpec);
    EXPECT_THROW(generate({Family::PlantedSubdivision, 5, 10, 0, CyclePattern(2, 1, 2, 1)}), InfeasibleSpec);
    EXPECT_THROW(generate({Family::RandomHamiltonian, 5, 3, 0, std::nullopt}), InfeasibleSpec);
}

TEST(Generate, SpecJson) {
    GenSpec spec{Family::PlantedSubdivision, 12, 30, 7, CyclePattern(2, 1, 2, 1)};
    EXPECT_EQ(spec_json(spec), R"({"family":"planted","n":12,"m":30,"seed":7,"pattern":[2,1,2,1]})");
}
