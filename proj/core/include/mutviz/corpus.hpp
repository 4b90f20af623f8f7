#pragma once

// Deterministic random corpora for the verification suite and property tests.

#include <random>

#include "mutviz/solver.hpp"

namespace mutviz {

// Uniform-probability edge graph, resampled until connected.
Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob);

// Uniform random labeled tree (Pruefer decode), n >= 1.
Graph random_tree(std::mt19937_64& rng, int n);

// Grow a feasible set of the given kind along a random vertex order.
VertexSet random_feasible_set(std::mt19937_64& rng, const Graph& g, VisibilityKind kind);

int leaf_count(const Graph& g);

}  // namespace mutviz
