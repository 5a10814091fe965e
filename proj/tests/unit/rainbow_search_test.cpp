#include "rainbow_forge/rainbow_search.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rainbow_forge/constructions.hpp"
#include "rainbow_forge/expander.hpp"
#include "rainbow_forge/rng.hpp"

using namespace rainbow;

namespace {

ColoredGraph random_colored(int n, std::uint64_t p_num, std::uint64_t p_den,
                            std::uint64_t seed) {
    return vizing_color(oracles::random_graph(n, p_num, p_den, seed));
}

}  // namespace

TEST(Reachable, EmptyPaletteIsJustTheSource) {
    ColoredGraph g = complete_one_factorization(6);
    ReachableSet r = rainbow_reachable_set(g, 2, g.empty_color_set());
    EXPECT_EQ(r.members().to_vector(), std::vector<int>{2});
    EXPECT_FALSE(r.truncated());
    EXPECT_EQ(r.witness(2).length(), 0);
}

TEST(Reachable, StarWithTwoAllowedColours) {
    // center 0, leaves 1..3 with edge colours 0,1,2; palette {0,1}
    ColoredGraph g = ColoredGraph::from_edges(4, {{0, 1, 0}, {0, 2, 1}, {0, 3, 2}});
    ColorSet palette = ColorSet::of(3, {0, 1});
    ReachableSet r = rainbow_reachable_set(g, 0, palette);
    EXPECT_EQ(r.members().to_vector(), (std::vector<int>{0, 1, 2}));
}

TEST(Reachable, AlternatingFourCycleReachesEverything) {
    ColoredGraph g = parse_colored_graph("4 4 2\n0 1 0\n1 2 1\n2 3 0\n0 3 1\n");
    for (int x = 0; x < 4; ++x) {
        ReachableSet r = rainbow_reachable_set(g, x, g.full_color_set());
        EXPECT_EQ(r.size(), 4) << "source " << x;
        EXPECT_EQ(r.members(), oracles::rainbow_reachable_bruteforce(g, x, g.full_color_set()));
    }
}

TEST(Reachable, AgreesWithBruteForceEnumeration) {
    CounterRng rng(7070);
    for (int trial = 0; trial < 60; ++trial) {
        ColoredGraph g = random_colored(4 + static_cast<int>(rng.below(5)), 1, 2,
                                        rng.next_u64());
        if (g.color_count() > 6) continue;
        int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(g.vertex_count())));
        ColorSet palette = g.empty_color_set();
        for (int c = 0; c < g.color_count(); ++c)
            if (rng.coin()) palette.insert(c);
        ReachableSet fast = rainbow_reachable_set(g, x, palette);
        ASSERT_FALSE(fast.truncated());
        EXPECT_EQ(fast.members(), oracles::rainbow_reachable_bruteforce(g, x, palette));
    }
}

TEST(Reachable, MonotoneInThePalette) {
    CounterRng rng(909);
    for (int trial = 0; trial < 40; ++trial) {
        ColoredGraph g = random_colored(8, 1, 2, rng.next_u64());
        ColorSet small = g.empty_color_set(), large = g.empty_color_set();
        for (int c = 0; c < g.color_count(); ++c) {
            bool in_large = rng.coin();
            if (in_large) {
                large.insert(c);
                if (rng.coin()) small.insert(c);
            }
        }
        int x = static_cast<int>(rng.below(8));
        ReachableSet rs = rainbow_reachable_set(g, x, small);
        ReachableSet rl = rainbow_reachable_set(g, x, large);
        EXPECT_TRUE(rs.members().is_subset_of(rl.members()));
    }
}

TEST(Reachable, WitnessesReplayAgainstTheGraph) {
    CounterRng rng(13);
    for (int trial = 0; trial < 30; ++trial) {
        ColoredGraph g = random_colored(9, 2, 3, rng.next_u64());
        ColorSet palette = g.empty_color_set();
        for (int c = 0; c < g.color_count(); ++c)
            if (rng.coin()) palette.insert(c);
        ReachableSet r = rainbow_reachable_set(g, 0, palette);
        for (int v : r.members().to_vector()) {
            RainbowWalk w = r.witness(v);
            EXPECT_TRUE(validate_rainbow_walk(g, w, &palette));
            EXPECT_EQ(w.vertices.front(), 0);
            EXPECT_EQ(w.endpoint(), v);
        }
    }
}

TEST(Reachable, BudgetYieldsFlaggedLowerBound) {
    ColoredGraph g = complete_one_factorization(12);
    ReachableSet full = rainbow_reachable_set(g, 0, g.full_color_set());
    ASSERT_FALSE(full.truncated());
    ReachableSet cut = rainbow_reachable_set(g, 0, g.full_color_set(), 10);
    EXPECT_TRUE(cut.truncated());
    EXPECT_TRUE(cut.members().is_subset_of(full.members()));
    EXPECT_LE(cut.states_kept(), 10u);
}

TEST(Reachable, SourceOutOfRange) {
    ColoredGraph g = hypercube(2);
    EXPECT_THROW(rainbow_reachable_set(g, 4, g.full_color_set()), std::invalid_argument);
}

TEST(ExactCycle, HypercubesHaveNone) {
    for (int m : {2, 3, 4}) {
        ColoredGraph q = hypercube(m);
        ExactCycleSearch res = rainbow_cycle_exact(q, m < 3 ? 3 : m);
        EXPECT_FALSE(res.cycle.has_value()) << "Q_" << m;
        EXPECT_TRUE(res.full_certificate);
    }
}

TEST(ExactCycle, CompleteGraphHasRainbowTriangle) {
    ColoredGraph g = complete_one_factorization(4);
    ExactCycleSearch res = rainbow_cycle_exact(g, 3);
    ASSERT_TRUE(res.cycle.has_value());
    EXPECT_EQ(res.cycle->length(), 3);
    EXPECT_TRUE(validate_rainbow_cycle(g, *res.cycle));
}

TEST(ExactCycle, TreesHaveNone) {
    ColoredGraph path = vizing_color(SimpleGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));
    EXPECT_FALSE(rainbow_cycle_exact(path, 6).cycle.has_value());
}

TEST(ExactCycle, AgreesWithBruteForce) {
    CounterRng rng(77);
    int found = 0, absent = 0;
    for (int trial = 0; trial < 80; ++trial) {
        ColoredGraph g = random_colored(4 + static_cast<int>(rng.below(7)), 1, 3,
                                        rng.next_u64());
        ExactCycleSearch res = rainbow_cycle_exact(g, std::max(3, g.color_count()));
        bool brute = oracles::rainbow_cycle_exists_bruteforce(g, std::max(3, g.color_count()));
        EXPECT_EQ(res.cycle.has_value(), brute);
        if (res.cycle) {
            EXPECT_TRUE(validate_rainbow_cycle(g, *res.cycle));
            ++found;
        } else {
            ++absent;
        }
    }
    EXPECT_GT(found, 0);
    EXPECT_GT(absent, 0);
}

TEST(SplitMethod, CyclesAlwaysValidate) {
    ColoredGraph g = complete_one_factorization(8);
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        SplitTrial t = rainbow_cycle_via_split(g, 0, seed);
        if (t.cycle) {
            ++hits;
            EXPECT_TRUE(validate_rainbow_cycle(g, *t.cycle));
            EXPECT_GE(t.meeting_vertex, 0);
        }
    }
    EXPECT_GT(hits, 0);
}

// frozen fixtures: 200 seeded trials each, recorded success counts
TEST(SplitMethod, CompleteGraphFrequencyFixture) {
    ColoredGraph g = complete_one_factorization(16);
    int successes = 0;
    for (std::uint64_t seed = 1000; seed < 1200; ++seed)
        successes += rainbow_cycle_via_split(g, 0, seed).cycle.has_value();
    EXPECT_GE(successes, 60);       // the >= 0.3 bar
    EXPECT_EQ(successes, 200);      // recorded fixture value
}

TEST(SplitMethod, HypercubeFrequencyFixture) {
    // the palette split disconnects the hypercube; the method almost never
    // meets beyond the source
    ColoredGraph q10 = hypercube(10);
    int successes = 0;
    for (std::uint64_t seed = 1000; seed < 1200; ++seed)
        successes += rainbow_cycle_via_split(q10, 0, seed).cycle.has_value();
    EXPECT_LT(successes, 10);       // the < 0.05 bar
    EXPECT_EQ(successes, 0);        // recorded fixture value
}

TEST(SplitMethod, DeterministicPerSeed) {
    ColoredGraph g = complete_one_factorization(10);
    SplitTrial a = rainbow_cycle_via_split(g, 3, 99);
    SplitTrial b = rainbow_cycle_via_split(g, 3, 99);
    EXPECT_EQ(a.palette, b.palette);
    EXPECT_EQ(a.cycle.has_value(), b.cycle.has_value());
    if (a.cycle) EXPECT_EQ(a.cycle->vertices, b.cycle->vertices);
}

TEST(Boundary, RedWhenColourIsForced) {
    // x -c0- a -c1- v with a pendant edge (v, v') of colour c0
    ColoredGraph g = ColoredGraph::from_edges(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 0}});
    ColorSet palette = ColorSet::of(2, {0, 1});
    ReachableSet r = rainbow_reachable_set(g, 0, palette);
    EXPECT_EQ(r.members().to_vector(), (std::vector<int>{0, 1, 2}));
    BoundaryClassification tags = classify_boundary_edges(g, 0, palette, r);
    ASSERT_EQ(tags.tags.size(), 1u);
    EXPECT_EQ(g.edge(tags.tags[0].first).v, 3);
    EXPECT_EQ(tags.tags[0].second, BoundaryTag::Red);
}

TEST(Boundary, BlueWhenVertexStaysReachable) {
    // x -c0- v plus edge (v, v') coloured c1; palette {c0}
    ColoredGraph g = ColoredGraph::from_edges(3, {{0, 1, 0}, {1, 2, 1}});
    ColorSet palette = ColorSet::of(2, {0});
    ReachableSet r = rainbow_reachable_set(g, 0, palette);
    BoundaryClassification tags = classify_boundary_edges(g, 0, palette, r);
    ASSERT_EQ(tags.tags.size(), 1u);
    EXPECT_EQ(tags.tags[0].second, BoundaryTag::Blue);
}

TEST(Boundary, EveryBoundaryEdgeTaggedOnce) {
    CounterRng rng(2222);
    for (int trial = 0; trial < 25; ++trial) {
        ColoredGraph g = random_colored(8, 1, 2, rng.next_u64());
        ColorSet palette = g.empty_color_set();
        for (int c = 0; c < g.color_count(); ++c)
            if (rng.coin()) palette.insert(c);
        ReachableSet r = rainbow_reachable_set(g, 0, palette);
        BoundaryClassification tags = classify_boundary_edges(g, 0, palette, r);
        std::vector<int> seen(static_cast<std::size_t>(g.edge_count()), 0);
        for (const auto& [idx, tag] : tags.tags) ++seen[idx];
        for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
            const auto& e = g.edge(idx);
            int expected = r.members().contains(e.u) != r.members().contains(e.v) ? 1 : 0;
            EXPECT_EQ(seen[idx], expected);
        }
    }
}

TEST(Boundary, TruncatedReachRejected) {
    ColoredGraph g = complete_one_factorization(12);
    ReachableSet cut = rainbow_reachable_set(g, 0, g.full_color_set(), 5);
    ASSERT_TRUE(cut.truncated());
    EXPECT_THROW(classify_boundary_edges(g, 0, g.full_color_set(), cut),
                 std::invalid_argument);
}

namespace {

BoundaryClassification uniform_tags(const ColoredGraph& g, const VertexSet& u,
                                    BoundaryTag tag) {
    BoundaryClassification tags;
    tags.inside = u;
    for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
        const auto& e = g.edge(idx);
        if (u.contains(e.u) != u.contains(e.v)) tags.tags.emplace_back(idx, tag);
    }
    return tags;
}

}  // namespace

TEST(RedBlueSelect, SingletonInK8AllRed) {
    ColoredGraph g = complete_one_factorization(8);
    VertexSet u(8);
    u.insert(3);
    EdgeSelection sel = red_blue_select(g, u, uniform_tags(g, u, BoundaryTag::Red), 1);
    EXPECT_EQ(sel.kind, EdgeSelection::Kind::Red);
    EXPECT_EQ(sel.edges.size(), 7u);  // all of v's edges, degree 7 <= ceil(7)
}

TEST(RedBlueSelect, SingletonInK8AllBlue) {
    ColoredGraph g = complete_one_factorization(8);
    VertexSet u(8);
    u.insert(3);
    EdgeSelection sel = red_blue_select(g, u, uniform_tags(g, u, BoundaryTag::Blue), 1);
    EXPECT_EQ(sel.kind, EdgeSelection::Kind::Blue);
    EXPECT_GE(sel.edges.size(), 1u);
}

TEST(RedBlueSelect, RandomTagsNeverViolateOnCompleteGraphs) {
    CounterRng rng(31);
    int nontrivial = 0;
    for (int trial = 0; trial < 60; ++trial) {
        ColoredGraph g = complete_one_factorization(8 + 2 * static_cast<int>(rng.below(3)));
        int n = g.vertex_count();
        VertexSet u(n);
        int size = 1 + static_cast<int>(rng.below(2));
        for (int i = 0; i < size; ++i) u.insert(static_cast<int>(rng.below(n)));
        BoundaryClassification tags;
        tags.inside = u;
        for (int idx = 0; idx < static_cast<int>(g.edge_count()); ++idx) {
            const auto& e = g.edge(idx);
            if (u.contains(e.u) != u.contains(e.v))
                tags.tags.emplace_back(idx, rng.coin() ? BoundaryTag::Red : BoundaryTag::Blue);
        }
        Rational eps(1 + static_cast<long long>(rng.below(20)), 20);
        if (cmp_eps_threshold(eps, u.count(), n) > 0) continue;  // need |U| <= n^(1-eps)
        // the size/degree postconditions are re-checked inside on every
        // return; reaching here without an exception is the point
        EdgeSelection sel = red_blue_select(g, u, tags, eps);
        EXPECT_NE(sel.kind, EdgeSelection::Kind::ExpansionViolation);
        ++nontrivial;
    }
    EXPECT_GT(nontrivial, 20);
}

TEST(RedBlueSelect, PipelineFromRealBoundaryTags) {
    // end to end: reachable set -> boundary classification -> selection,
    // on a graph whose expansion is certified exhaustively
    ColoredGraph g = complete_one_factorization(10);
    ASSERT_TRUE(verify_robust_expander(g, VerifyMode::Exhaustive).passed());
    CounterRng rng(808);
    for (int trial = 0; trial < 10; ++trial) {
        ColorSet palette = g.empty_color_set();
        for (int c = 0; c < g.color_count(); ++c)
            if (rng.coin()) palette.insert(c);
        ReachableSet reach = rainbow_reachable_set(g, 0, palette);
        ASSERT_FALSE(reach.truncated());
        if (reach.size() == g.vertex_count()) continue;  // no boundary
        BoundaryClassification tags = classify_boundary_edges(g, 0, palette, reach);
        Rational eps(static_cast<long long>(rng.below(21)), 20);
        if (cmp_eps_threshold(eps, reach.size(), g.vertex_count()) > 0) continue;
        EdgeSelection sel = red_blue_select(g, reach.members(), tags, eps);
        EXPECT_NE(sel.kind, EdgeSelection::Kind::ExpansionViolation);
    }
}

TEST(RedBlueSelect, InputValidation) {
    ColoredGraph g = complete_one_factorization(6);
    VertexSet u(6);
    u.insert(0);
    BoundaryClassification missing;  // no tags at all
    missing.inside = u;
    EXPECT_THROW(red_blue_select(g, u, missing, Rational(1, 2)), std::invalid_argument);
    EXPECT_THROW(red_blue_select(g, VertexSet(6), missing, Rational(1, 2)),
                 std::invalid_argument);
}

TEST(WalkFormat, SerializesVerticesAndColours) {
    RainbowWalk w;
    w.vertices = {0, 3, 7};
    w.colors = {2, 5};
    EXPECT_EQ(format_walk(w), "0 2 3 5 7");
}
