#pragma once

// Edge and vertex removal scans: recompute an invariant after deleting each
// removable element and evaluate the applicable worst-case bounds.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutviz/solver.hpp"

namespace mutviz {

struct BoundVerdict {
    std::string bound;  // registry formula, e.g. "mu(G-e) >= 1/2*mu(G)"
    bool holds = false;
    // Conjectured bounds are reported but never treated as failures.
    bool conjecture = false;
};

struct RemovalRecord {
    std::string element;  // "u-v" for an edge, the original index for a vertex
    bool skipped = false;
    std::string skip_reason;  // "bridge" or "cut vertex"
    int after_value = 0;
    std::optional<double> ratio;  // after/base, absent when base is 0
    int diff = 0;                 // after - base
    std::vector<BoundVerdict> verdicts;
};

struct ExtremalStats {
    std::optional<double> min_ratio, max_ratio;
    std::optional<int> min_diff, max_diff;
};

// Exploratory probe for the open question of bounding muo(G-x): reports
// max over x of muo(G-x) - a*muo(G) - b.  Never asserted.
struct OuterVertexProbe {
    double a = 0, b = 0;
    double max_excess = 0;
    std::string argmax_element;
};

struct RemovalReport {
    VisibilityKind kind = VisibilityKind::mutual;
    bool vertex_scan = false;
    int base_value = 0;
    std::vector<RemovalRecord> records;
    ExtremalStats extremal;
    std::optional<OuterVertexProbe> outer_probe;
};

// Bound registry: formulas applicable to a (kind, scan) combination.
// Dual has no edge-removal bound in either direction; vertex removal is
// bounded only for mu (plus a diameter-2 refinement).
std::vector<BoundVerdict> evaluate_edge_bounds(VisibilityKind kind, int base, int after);
std::vector<BoundVerdict> evaluate_vertex_bounds(VisibilityKind kind, int base, int after,
                                                 int graph_diameter);

// Solve kind on g and on g-e for every non-bridge edge e.
RemovalReport edge_scan(const Graph& g, VisibilityKind kind,
                        const SolverOptions& opts = {});

// Solve kind on g and on g-x for every non-cut vertex x.
RemovalReport vertex_scan(const Graph& g, VisibilityKind kind,
                          const SolverOptions& opts = {},
                          std::optional<std::pair<double, double>> outer_probe_ab = {});

struct MudOneCheck {
    bool applicable = false;  // mud(g) is 1 and removing its witness keeps g connected
    bool holds = false;       // when applicable: mut(g - x) is 0
    int mud_value = 0;
    std::optional<int> removed_vertex;
    std::optional<int> total_after;
    std::string reason;  // why the check did not apply
};

// When a graph has mud = 1 with witness {x} and g-x stays connected, the
// remainder must have mut = 0.
MudOneCheck check_mud_one_removal(const Graph& g, const SolverOptions& opts = {});

}  // namespace mutviz
