#include <random>

#include "doctest.h"
#include "mutviz/corpus.hpp"
#include "mutviz/families.hpp"
#include "mutviz/visibility.hpp"
#include "test_util.hpp"

using namespace mutviz;
using testutil::from_edges;

TEST_CASE("kind names round-trip") {
    for (VisibilityKind k : kAllKinds) CHECK(kind_from_name(kind_name(k)) == k);
    CHECK(!kind_from_name("sigma").has_value());
}

TEST_CASE("pair visibility on a path") {
    Graph p = path(4).graph;
    DistanceMatrix d = all_pairs_distances(p);
    CHECK(pair_visible(p, d, VertexSet{}, 0, 3));
    CHECK(pair_visible(p, d, VertexSet::of({0, 3}), 0, 3));
    CHECK(!pair_visible(p, d, VertexSet::single(1), 0, 3));
    CHECK(pair_visible(p, d, VertexSet::single(1), 0, 1));
    CHECK_THROWS_AS(pair_visible(p, d, VertexSet{}, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(pair_visible(p, d, VertexSet{}, 0, 4), std::invalid_argument);
}

TEST_CASE("pair visibility in a cycle uses either arc") {
    Graph c = cycle(6).graph;
    DistanceMatrix d = all_pairs_distances(c);
    CHECK(!pair_visible(c, d, VertexSet::single(1), 0, 2));
    CHECK(!pair_visible(c, d, VertexSet::of({1, 4}), 0, 3));
    CHECK(pair_visible(c, d, VertexSet::single(1), 0, 3));
}

TEST_CASE("index visibility agrees with the naive path scan") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(rng, 2 + static_cast<int>(rng() % 8), 0.35);
        VisibilityIndex idx(g);
        DistanceMatrix d = all_pairs_distances(g);
        for (int round = 0; round < 12; ++round) {
            VertexSet x = VertexSet::from_bits(rng() & g.vertices().bits());
            int u = static_cast<int>(rng() % g.order());
            int v = static_cast<int>(rng() % g.order());
            if (u == v) continue;
            bool expected = testutil::naive_visible(g, x, u, v);
            CHECK(idx.visible(x, u, v) == expected);
            CHECK(pair_visible(g, d, x, u, v) == expected);
            CHECK(idx.visible(x, v, u) == expected);
        }
    }
}

TEST_CASE("visibility is anti-monotone in the obstacle set") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected_graph(rng, 3 + static_cast<int>(rng() % 8), 0.4);
        VisibilityIndex idx(g);
        VertexSet x = VertexSet::from_bits(rng() & g.vertices().bits());
        VertexSet bigger = x | VertexSet::from_bits(rng() & g.vertices().bits());
        int u = static_cast<int>(rng() % g.order());
        int v = static_cast<int>(rng() % g.order());
        if (u == v) continue;
        if (idx.visible(bigger, u, v)) CHECK(idx.visible(x, u, v));
    }
}

TEST_CASE("geodesic carrier contents") {
    Graph c = cycle(6).graph;
    VisibilityIndex idx(c);
    CHECK(idx.geodesic_carrier(0, 2) == VertexSet::of({0, 1, 2}));
    CHECK(idx.geodesic_carrier(0, 3) == VertexSet::universe(6));
    CHECK(idx.layer(0, 1) == VertexSet::of({1, 5}));
    CHECK(idx.neighbors(0) == VertexSet::of({1, 5}));
}

TEST_CASE("set feasibility per variety") {
    Graph p4 = path(4).graph;
    CHECK(is_visibility_set(p4, VertexSet::of({0, 3}), VisibilityKind::mutual));
    CHECK(is_visibility_set(p4, VertexSet::of({0, 1}), VisibilityKind::mutual));
    CHECK(!is_visibility_set(p4, VertexSet::of({0, 1}), VisibilityKind::outer));
    CHECK(is_visibility_set(p4, VertexSet::of({0, 1}), VisibilityKind::dual));
    CHECK(!is_visibility_set(p4, VertexSet::of({0, 2}), VisibilityKind::dual));
    CHECK(!is_visibility_set(p4, VertexSet::of({0, 1}), VisibilityKind::total));
    CHECK(is_visibility_set(p4, VertexSet{}, VisibilityKind::mutual));

    Graph split(3);
    split.add_edge(0, 1);
    CHECK_THROWS_AS(is_visibility_set(split, VertexSet{}, VisibilityKind::mutual),
                    std::domain_error);
}

TEST_CASE("feasibility agrees with the naive subset check") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_connected_graph(rng, 2 + static_cast<int>(rng() % 7), 0.4);
        for (int round = 0; round < 10; ++round) {
            VertexSet x = VertexSet::from_bits(rng() & g.vertices().bits());
            for (VisibilityKind k : kAllKinds)
                CHECK(is_visibility_set(g, x, k) == testutil::naive_feasible(g, x, k));
        }
    }
}

TEST_CASE("total check over distance-2 pairs matches the all-pairs definition") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(rng, 3 + static_cast<int>(rng() % 9), 0.35);
        VertexSet x = VertexSet::from_bits(rng() & g.vertices().bits());
        CHECK(is_visibility_set(g, x, VisibilityKind::total, false) ==
              is_visibility_set(g, x, VisibilityKind::total, true));
    }
}

TEST_CASE("half set splits a path at the midpoint") {
    Graph p4 = path(4).graph;
    CHECK(half_set(p4, VertexSet::universe(4), 0, 3) == VertexSet::of({0, 1}));
    CHECK(half_set(p4, VertexSet::universe(4), 3, 0) == VertexSet::of({2, 3}));
    CHECK(half_set(p4, VertexSet::of({0, 3}), 0, 3) == VertexSet::single(0));
}

TEST_CASE("half set covers its input against any anchor pair") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_connected_graph(rng, 3 + static_cast<int>(rng() % 9), 0.4);
        VertexSet z = VertexSet::from_bits(rng() & g.vertices().bits());
        int x = static_cast<int>(rng() % g.order());
        int y = static_cast<int>(rng() % g.order());
        if (x == y) continue;
        VertexSet near_x = half_set(g, z, x, y);
        VertexSet near_y = half_set(g, z, y, x);
        CHECK((near_x | near_y) == z);
        CHECK(near_x.is_subset_of(z));
        DistanceMatrix d = all_pairs_distances(g);
        for (int w : near_x.members()) CHECK(d(w, x) <= d(w, y));
    }
}

TEST_CASE("blocking selection on a path") {
    Graph p4 = path(4).graph;
    BlockingSelection sel = blocking_set(p4, VertexSet::of({1, 3}), 0);
    CHECK(sel.blockers == VertexSet::single(1));
    REQUIRE(sel.paths.size() == 2);
    CHECK(sel.paths[0].first == 1);
    CHECK(sel.paths[0].second == std::vector<int>{0, 1});
    CHECK(sel.paths[1].first == 3);
    CHECK(sel.paths[1].second == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("blocking selection rejects infeasible z") {
    Graph p4 = path(4).graph;
    CHECK_THROWS_AS(blocking_set(p4, VertexSet::of({0, 1, 2}), 3), std::invalid_argument);
}

TEST_CASE("blocking paths are shortest and nearly blocker-free") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected_graph(rng, 3 + static_cast<int>(rng() % 9), 0.4);
        VertexSet z = random_feasible_set(rng, g, VisibilityKind::mutual);
        if (z.empty()) continue;
        int w = static_cast<int>(rng() % g.order());
        BlockingSelection sel = blocking_set(g, z, w);
        DistanceMatrix d = all_pairs_distances(g);
        CHECK(sel.blockers.is_subset_of(z));
        for (const auto& [u, p] : sel.paths) {
            REQUIRE(!p.empty());
            CHECK(p.front() == w);
            CHECK(p.back() == u);
            CHECK(static_cast<int>(p.size()) == d(w, u) + 1);
            int internal_z = 0;
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                CHECK(g.has_edge(p[i], p[i + 1]));
                if (i > 0 && z.contains(p[i])) ++internal_z;
            }
            CHECK(internal_z <= 1);
        }
    }
}
