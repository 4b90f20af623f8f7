#pragma once

// Exact computation of the four visibility numbers.  max_visibility_set runs
// an include/exclude branch and bound; brute_force_invariant is the
// exhaustive cross-check oracle.

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "mutviz/visibility.hpp"

namespace mutviz {

struct SolverOptions {
    std::optional<int> initial_lower_bound;
    std::optional<std::uint64_t> node_limit;
    // Check the total variety through distance-2 pairs only (equivalent to the
    // all-pairs definition); disable to force the full check.
    bool use_distance_two_reduction = true;
    // Worker threads for the search; 0 or 1 runs serially.
    int parallel = 0;
};

struct InvariantResult {
    VisibilityKind kind = VisibilityKind::mutual;
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
};

class NodeLimitError : public std::runtime_error {
public:
    explicit NodeLimitError(InvariantResult best)
        : std::runtime_error("solver node limit exceeded"), best_(best) {}
    const InvariantResult& best_so_far() const { return best_; }

private:
    InvariantResult best_;
};

// Largest visibility set of the given kind.  Requires a connected graph.
// The witness is the lexicographically smallest maximum set, independent of
// thread count; rerunning an identical call reproduces value, witness and
// (serially) the node count.
InvariantResult max_visibility_set(const Graph& g, VisibilityKind kind,
                                   const SolverOptions& opts = {});

// Exhaustive oracle: scans subsets by descending cardinality using the
// all-pairs feasibility definitions and an independent path search.
int brute_force_invariant(const Graph& g, VisibilityKind kind);

struct AllFour {
    InvariantResult mutual, outer, dual, total;

    const InvariantResult& operator[](VisibilityKind kind) const {
        switch (kind) {
            case VisibilityKind::outer: return outer;
            case VisibilityKind::dual: return dual;
            case VisibilityKind::total: return total;
            default: return mutual;
        }
    }
};

// All four invariants; verifies the containment chains
// mut <= muo <= mu and mut <= mud <= mu before returning.
AllFour all_four(const Graph& g, const SolverOptions& opts = {});

}  // namespace mutviz
