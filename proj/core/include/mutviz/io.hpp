#pragma once

// Graph serialization (edge list and graph6), file loading with format
// detection, and the JSON / text renderings of results.

#include <optional>
#include <string>
#include <string_view>

#include "mutviz/removal.hpp"
#include "mutviz/solver.hpp"

namespace mutviz {

enum class GraphFormat { edge_list, graph6 };

// Edge list: optional "n <count>" header line, then "u v" lines; '#' starts
// a comment, duplicate edges collapse, loops are rejected.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// graph6, short form only (order <= 62).  A leading ">>graph6<<" header is
// tolerated.  Throws std::invalid_argument on malformed input.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

struct GraphDocument {
    Graph graph;
    GraphFormat source_format = GraphFormat::edge_list;
    std::string original_text;
};
// Reads a graph file; format from the argument if given, else by extension
// (".g6" means graph6, anything else edge list).
GraphDocument load_graph_document(const std::string& path,
                                  std::optional<GraphFormat> format = {});

// JSON renderings, all under {"schema": "mutviz/1", ...}.
std::string invariant_results_json(const std::vector<InvariantResult>& results,
                                   const std::vector<std::string>* labels = nullptr);
std::string removal_report_json(const RemovalReport& report);

// Aligned text table of a removal scan.
std::string removal_report_table(const RemovalReport& report);

}  // namespace mutviz
