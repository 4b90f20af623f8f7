#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "mutviz/corpus.hpp"
#include "mutviz/families.hpp"
#include "mutviz/io.hpp"
#include "mutviz/solver.hpp"

using namespace mutviz;

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edge_list("n 3\n0 1\n1 2\n");
    CHECK(p3.order() == 3);
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    Graph k3 = parse_edge_list("0 1\n1 2\n2 0\n");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);

    Graph commented = parse_edge_list("# triangle\nn 3\n0 1  # first\n\n1 2\n2 0\n");
    CHECK(commented.edge_count() == 3);

    Graph dupes = parse_edge_list("0 1\n1 0\n0 1\n");
    CHECK(dupes.edge_count() == 1);

    CHECK_THROWS_AS(parse_edge_list("0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("0 x\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("0 -1\n"), std::invalid_argument);
}

TEST_CASE("edge list round-trip") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected_graph(rng, 1 + static_cast<int>(rng() % 40), 0.2);
        Graph back = parse_edge_list(emit_edge_list(g));
        CHECK(back.order() == g.order());
        CHECK(back.edges() == g.edges());
    }
    Graph lonely = parse_edge_list(emit_edge_list(Graph(1)));
    CHECK(lonely.order() == 1);
    CHECK(lonely.edge_count() == 0);
}

TEST_CASE("graph6 known encodings") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.has_edge(0, 1));
    CHECK(emit_graph6(k2) == "A_");

    Graph k3 = parse_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(emit_graph6(k3) == "Bw");

    Graph single = parse_graph6("@");
    CHECK(single.order() == 1);

    Graph headered = parse_graph6(">>graph6<<A_");
    CHECK(headered.edge_count() == 1);
    CHECK(parse_graph6("A_\n").edge_count() == 1);
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("A_X"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6(std::string_view("A\x1f", 2)), std::invalid_argument);
    CHECK_THROWS_AS(emit_graph6(Graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 round-trip") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = random_connected_graph(rng, 1 + static_cast<int>(rng() % 62), 0.15);
        std::string s = emit_graph6(g);
        for (char c : s) CHECK((c >= 63 && c <= 126));
        Graph back = parse_graph6(s);
        CHECK(back.order() == g.order());
        CHECK(back.edges() == g.edges());
        CHECK(emit_graph6(back) == s);
    }
}

TEST_CASE("format round-trip across representations") {
    Graph h = h_k(3).graph;
    CHECK(parse_graph6(emit_graph6(h)).edges() == h.edges());
    CHECK(parse_edge_list(emit_edge_list(h)).edges() == h.edges());
}

TEST_CASE("document loading detects formats by extension") {
    const std::string el_path = "mutviz_test_doc.el";
    const std::string g6_path = "mutviz_test_doc.g6";
    {
        std::ofstream out(el_path);
        out << emit_edge_list(cycle(5).graph);
    }
    {
        std::ofstream out(g6_path);
        out << emit_graph6(cycle(5).graph) << "\n";
    }
    GraphDocument el_doc = load_graph_document(el_path);
    CHECK(el_doc.source_format == GraphFormat::edge_list);
    CHECK(el_doc.graph.edge_count() == 5);
    GraphDocument g6_doc = load_graph_document(g6_path);
    CHECK(g6_doc.source_format == GraphFormat::graph6);
    CHECK(g6_doc.graph.edge_count() == 5);
    GraphDocument forced = load_graph_document(g6_path, GraphFormat::graph6);
    CHECK(forced.graph.order() == 5);
    CHECK_THROWS_AS(load_graph_document("does_not_exist.el"), std::runtime_error);
    std::remove(el_path.c_str());
    std::remove(g6_path.c_str());
}

TEST_CASE("invariant results serialize under the versioned schema") {
    LabeledGraph h = h_k(2);
    InvariantResult r = max_visibility_set(h.graph, VisibilityKind::mutual);
    std::string text = invariant_results_json({r}, &h.labels);
    nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc.at("schema") == "mutviz/1");
    REQUIRE(doc.at("results").size() == 1);
    const auto& entry = doc.at("results")[0];
    CHECK(entry.at("kind") == "mu");
    CHECK(entry.at("value") == 4);
    CHECK(entry.at("witness").is_array());
    CHECK(entry.at("witness_labels").size() == entry.at("witness").size());
    CHECK(entry.count("elapsed") == 0);

    std::string bare = invariant_results_json({r});
    nlohmann::json bare_doc = nlohmann::json::parse(bare);
    CHECK(bare_doc.at("results")[0].count("witness_labels") == 0);
    CHECK(invariant_results_json({r}, &h.labels) == text);
}

TEST_CASE("removal reports serialize and tabulate") {
    RemovalReport report = edge_scan(cycle(5).graph, VisibilityKind::mutual);
    nlohmann::json doc = nlohmann::json::parse(removal_report_json(report));
    CHECK(doc.at("schema") == "mutviz/1");
    CHECK(doc.at("scan") == "edges");
    CHECK(doc.at("kind") == "mu");
    CHECK(doc.at("base") == 3);
    CHECK(doc.at("records").size() == 5);
    CHECK(doc.at("records")[0].at("element") == "0-1");

    std::string table = removal_report_table(report);
    CHECK(table.find("0-1") != std::string::npos);
    // The hard bounds hold on C_5; the conjectured strengthening does not
    // (base 3 asks for 2.5 <= 2), and that renders as refuted, not VIOLATED.
    CHECK(table.find("VIOLATED") == std::string::npos);
    CHECK(table.find("refuted") != std::string::npos);
    CHECK(removal_report_table(report) == table);
}
