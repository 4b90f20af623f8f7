#pragma once

// Which pairs (p, q) are attained as (invariant, order) by some connected
// graph, with constructive witnesses, plus the small-order census used to
// confirm the negative cases exhaustively.

#include <functional>
#include <optional>
#include <set>

#include "mutviz/families.hpp"
#include "mutviz/solver.hpp"

namespace mutviz {

struct RealizabilityAnswer {
    VisibilityKind kind = VisibilityKind::mutual;
    int p = 0, q = 0;
    bool realizable = false;
    std::optional<LabeledGraph> witness;
};

// Characterization, with a constructed witness for every positive answer:
//   mu, muo: p >= 2, or (p, q) = (1, 1)
//   mut:     p >= 2, or (1, 1), or p = 1 and q >= 6, or p = 0 and q >= 5
//   mud:     p >= 2, or (1, 1), or p = 1 and q >= 8, or p = 0 and q >= 7
// Requires 0 <= p <= q and q >= 1.
RealizabilityAnswer is_realizable(VisibilityKind kind, int p, int q);

// Every connected graph on q vertices, one per isomorphism class, streamed in
// a deterministic order.  Supported for q <= 7.
void enumerate_connected_graphs(int q, const std::function<void(const Graph&)>& yield);
std::vector<Graph> connected_graph_census(int q);

// All values the invariant attains over the order-q census (q <= 7).
std::set<int> exhaustive_spectrum(int q, VisibilityKind kind,
                                  const SolverOptions& opts = {});

}  // namespace mutviz
