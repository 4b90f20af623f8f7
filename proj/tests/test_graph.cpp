#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "mutviz/corpus.hpp"
#include "mutviz/families.hpp"
#include "mutviz/graph.hpp"
#include "test_util.hpp"

using namespace mutviz;
using testutil::from_edges;

TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::of({0, 5, 63});
    CHECK(s.size() == 3);
    CHECK(s.contains(63));
    CHECK(!s.contains(1));
    CHECK(s.lowest() == 0);
    CHECK(s.members() == std::vector<int>{0, 5, 63});
    CHECK((s - VertexSet::single(5)).size() == 2);
    CHECK(VertexSet::universe(6).complement_in(6).empty());
    CHECK(VertexSet{}.lowest() == -1);
    CHECK(VertexSet::of({1, 2}).is_subset_of(VertexSet::universe(3)));
}

TEST_CASE("graph construction and validation") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    g.add_edge(1, 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == VertexSet::of({0, 2}));
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);
}

TEST_CASE("bfs distances match Floyd-Warshall") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected_graph(rng, 2 + static_cast<int>(rng() % 11), 0.3);
        auto ref = testutil::naive_distances(g);
        DistanceMatrix d = all_pairs_distances(g);
        for (int u = 0; u < g.order(); ++u) {
            auto row = bfs_distances(g, u);
            for (int v = 0; v < g.order(); ++v) {
                CHECK(d(u, v) == ref[u][v]);
                CHECK(row[static_cast<std::size_t>(v)] == ref[u][v]);
            }
        }
    }
}

TEST_CASE("distance properties") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_graph(rng, 3 + static_cast<int>(rng() % 10), 0.35);
        DistanceMatrix d = all_pairs_distances(g);
        for (auto [u, v] : g.edges()) CHECK(d(u, v) == 1);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) {
                CHECK(d(u, v) == d(v, u));
                for (int w = 0; w < g.order(); ++w)
                    CHECK(d(u, v) <= d(u, w) + d(w, v));
            }
    }
}

TEST_CASE("connectivity and diameter") {
    CHECK(is_connected(path(5).graph));
    CHECK(diameter(path(5).graph) == 4);
    CHECK(diameter(cycle(6).graph) == 3);
    CHECK(diameter(complete(7).graph) == 1);
    CHECK(diameter(Graph(1)) == 0);

    Graph split(4);
    split.add_edge(0, 1);
    split.add_edge(2, 3);
    CHECK(!is_connected(split));
    CHECK_THROWS_AS(diameter(split), std::domain_error);
}

TEST_CASE("h_k distances from the hub side") {
    LabeledGraph h = h_k(2);
    auto dist = bfs_distances(h.graph, h.index_of("z"));
    std::multiset<int> others;
    for (int v = 0; v < h.graph.order(); ++v)
        if (v != h.index_of("z")) others.insert(dist[static_cast<std::size_t>(v)]);
    CHECK(others == std::multiset<int>{1, 1, 1, 2, 2});
    CHECK(diameter(h_k(4).graph) == 3);
}

TEST_CASE("edge removal") {
    Graph c = cycle(5).graph;
    Graph p = remove_edge(c, 0, 4);
    CHECK(p.edge_count() == 4);
    CHECK(!p.has_edge(0, 4));
    CHECK(diameter(p) == 4);
    CHECK_THROWS_AS(remove_edge(c, 0, 2), std::invalid_argument);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        Graph g = random_connected_graph(rng, 4 + static_cast<int>(rng() % 8), 0.4);
        auto edges = g.edges();
        auto [u, v] = edges[rng() % edges.size()];
        Graph h = remove_edge(g, u, v);
        if (!is_connected(h)) continue;
        DistanceMatrix before = all_pairs_distances(g);
        DistanceMatrix after = all_pairs_distances(h);
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b) CHECK(after(a, b) >= before(a, b));
    }
}

TEST_CASE("vertex removal relabels compactly") {
    Graph c = cycle(5).graph;
    VertexRemoval r = remove_vertex(c, 2);
    CHECK(r.graph.order() == 4);
    CHECK(r.old_to_new[2] == -1);
    CHECK(r.old_to_new[0] == 0);
    CHECK(r.old_to_new[3] == 2);
    CHECK(r.graph.has_edge(r.old_to_new[1], r.old_to_new[0]));
    CHECK(!r.graph.has_edge(r.old_to_new[1], r.old_to_new[3]));
    CHECK(diameter(r.graph) == 3);
    CHECK_THROWS_AS(remove_vertex(Graph(1), 0), std::invalid_argument);
}

TEST_CASE("induced subgraph index maps invert") {
    Graph g = h_k(3).graph;
    VertexSet b = VertexSet::of({0, 2, 5, 7});
    InducedSubgraph s = induced_subgraph(g, b);
    CHECK(s.graph.order() == 4);
    for (std::size_t i = 0; i < s.to_host.size(); ++i)
        CHECK(s.from_host[static_cast<std::size_t>(s.to_host[i])] == static_cast<int>(i));
    for (int a = 0; a < 4; ++a)
        for (int c = a + 1; c < 4; ++c)
            CHECK(s.graph.has_edge(a, c) == g.has_edge(s.to_host[static_cast<std::size_t>(a)],
                                                       s.to_host[static_cast<std::size_t>(c)]));
    CHECK_THROWS_AS(induced_subgraph(g, VertexSet{}), std::invalid_argument);
}

TEST_CASE("isometric and convex subgraphs") {
    Graph c6 = cycle(6).graph;
    CHECK(is_isometric_subgraph(c6, VertexSet::of({0, 1, 2, 3})).isometric);
    CHECK(!is_isometric_subgraph(c6, VertexSet::of({0, 1, 2, 3, 4})).isometric);
    CHECK(is_convex_subgraph(c6, VertexSet::of({0, 1, 2})));
    CHECK(!is_convex_subgraph(c6, VertexSet::of({0, 3})));
    CHECK(!is_convex_subgraph(c6, VertexSet::of({0, 1, 2, 3})));

    auto gap = is_isometric_subgraph(c6, VertexSet::of({0, 2}));
    CHECK(!gap.connected);
    CHECK(!gap.isometric);
    CHECK(is_isometric_subgraph(c6, VertexSet::single(3)).isometric);

    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected_graph(rng, 4 + static_cast<int>(rng() % 7), 0.4);
        VertexSet b = VertexSet::from_bits(rng() & g.vertices().bits());
        if (b.size() < 2) continue;
        if (is_convex_subgraph(g, b)) {
            auto iso = is_isometric_subgraph(g, b);
            CHECK(iso.connected);
            CHECK(iso.isometric);
        }
    }
}
