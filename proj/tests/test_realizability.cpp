#include <map>
#include <set>

#include "doctest.h"
#include "mutviz/realizability.hpp"
#include "mutviz/solver.hpp"

using namespace mutviz;

TEST_CASE("census counts match the known sequence") {
    const std::map<int, std::size_t> expected{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}};
    for (auto [q, count] : expected) CHECK(connected_graph_census(q).size() == count);
    CHECK_THROWS_AS(connected_graph_census(8), std::invalid_argument);
}

TEST_CASE("census graphs are connected, canonical, and pairwise distinct") {
    std::set<std::vector<std::pair<int, int>>> seen;
    for (const Graph& g : connected_graph_census(5)) {
        CHECK(g.order() == 5);
        CHECK(is_connected(g));
        CHECK(seen.insert(g.edges()).second);
    }
    CHECK(seen.size() == 21);
}

TEST_CASE("census streaming matches the collected form") {
    std::vector<int> orders;
    enumerate_connected_graphs(4, [&](const Graph& g) { orders.push_back(g.order()); });
    CHECK(orders.size() == 6);
}

TEST_CASE("spectrum facts at small orders") {
    std::set<int> dual6 = exhaustive_spectrum(6, VisibilityKind::dual);
    CHECK(!dual6.count(0));
    CHECK(!dual6.count(1));
    CHECK(dual6.count(2));

    std::set<int> total5 = exhaustive_spectrum(5, VisibilityKind::total);
    CHECK(total5.count(0));

    int zero_hits = 0;
    Graph zero_witness(1);
    for (const Graph& g : connected_graph_census(5)) {
        if (max_visibility_set(g, VisibilityKind::total).value == 0) {
            ++zero_hits;
            zero_witness = g;
        }
    }
    CHECK(zero_hits == 1);
    CHECK(zero_witness.edge_count() == 5);
    for (int v = 0; v < 5; ++v) CHECK(zero_witness.degree(v) == 2);

    for (VisibilityKind k : kAllKinds) {
        std::set<int> q2 = exhaustive_spectrum(2, k);
        CHECK(q2 == std::set<int>{2});
    }
}

TEST_CASE("characterization agrees with the census spectrum") {
    for (int q = 1; q <= 5; ++q)
        for (VisibilityKind k : kAllKinds) {
            std::set<int> spectrum = exhaustive_spectrum(q, k);
            for (int p = 0; p <= q; ++p)
                CHECK(is_realizable(k, p, q).realizable == (spectrum.count(p) > 0));
        }
}

TEST_CASE("positive answers carry solver-verified witnesses") {
    for (VisibilityKind k : kAllKinds)
        for (int q = 1; q <= 8; ++q)
            for (int p = 0; p <= q; ++p) {
                RealizabilityAnswer a = is_realizable(k, p, q);
                if (!a.realizable) continue;
                REQUIRE(a.witness.has_value());
                const Graph& g = a.witness->graph;
                CHECK(g.order() == q);
                CHECK(max_visibility_set(g, k).value == p);
            }
}

TEST_CASE("known edge cases of the characterization") {
    CHECK(!is_realizable(VisibilityKind::total, 1, 5).realizable);
    CHECK(is_realizable(VisibilityKind::total, 1, 6).realizable);
    CHECK(is_realizable(VisibilityKind::total, 0, 5).realizable);
    CHECK(!is_realizable(VisibilityKind::total, 0, 4).realizable);
    CHECK(!is_realizable(VisibilityKind::dual, 1, 7).realizable);
    CHECK(is_realizable(VisibilityKind::dual, 1, 8).realizable);
    CHECK(!is_realizable(VisibilityKind::dual, 0, 6).realizable);
    CHECK(is_realizable(VisibilityKind::dual, 0, 7).realizable);
    CHECK(is_realizable(VisibilityKind::mutual, 1, 1).realizable);
    CHECK(!is_realizable(VisibilityKind::mutual, 1, 2).realizable);
    CHECK(!is_realizable(VisibilityKind::mutual, 0, 3).realizable);
    CHECK(is_realizable(VisibilityKind::outer, 2, 2).realizable);
    CHECK_THROWS_AS(is_realizable(VisibilityKind::mutual, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(is_realizable(VisibilityKind::mutual, -1, 2), std::invalid_argument);
    CHECK_THROWS_AS(is_realizable(VisibilityKind::mutual, 0, 0), std::invalid_argument);
}
