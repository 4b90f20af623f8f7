#pragma once

// Named graph constructions used throughout: basic families plus the
// special gadgets with fixed label schemes.

#include <string>
#include <string_view>
#include <vector>

#include "mutviz/graph.hpp"

namespace mutviz {

struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;  // labels[i] names vertex i, all distinct

    int index_of(std::string_view label) const;  // throws std::invalid_argument
    const std::string& label_of(int v) const;
};

LabeledGraph path(int n);      // v1..vn
LabeledGraph cycle(int n);     // v1..vn, n >= 3
LabeledGraph complete(int n);  // v1..vn
LabeledGraph star(int p);      // center c with leaves u1..up, p >= 1

// Star with every edge subdivided once: c - m_i - u_i, order 2p + 1.
LabeledGraph subdivided_star(int p);

// Vertices z, w, x1..xk, y1..yk; edges zw, and per i the 4-cycle
// x_i y_i z w x_i (that is: w x_i, x_i y_i, y_i z).  Order 2k + 2.
LabeledGraph h_k(int k);

// Cliques u1..uk and v1..vk joined by a perfect matching u_i v_i, a hub z
// adjacent to every v_i, a 7-cycle through every u_i and through z
// (z z1..z6 z), and a vertex u1' adjacent to u1 and z1 carrying its own
// 7-cycle.  Order 8k + 14.
LabeledGraph l_k(int k);

// Hub z adjacent to x1..xk, each x_i adjacent to y_{2i-1} and y_{2i}, and
// the path y1..y_{2k}.  Order 3k + 1, k >= 5.
LabeledGraph f_k(int k);

// 12-cycle v1..v12 with leaves u1, u5, u9 at v1, v5, v9.  Order 15.
LabeledGraph j_graph();

// Cycle v1..vn with one leaf per entry of attach (1-based cycle positions,
// repeats allowed).  Leaf for position p is labeled u<p> (primed on repeats).
LabeledGraph cycle_with_leaves(int n, const std::vector<int>& attach);

// Cycle v1..v_{q-1} plus one leaf at v1; order q, q >= 4.
LabeledGraph cycle_plus(int q);

// Path s1..s_{q-p+1} with p - 1 extra pendant vertices at s_{q-p+1}.
// A tree of order q with exactly p leaves; requires 2 <= p < q.
LabeledGraph broom(int p, int q);

}  // namespace mutviz
