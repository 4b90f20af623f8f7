#pragma once

// Undirected graphs on at most 64 vertices.  Adjacency rows are machine
// words, so neighborhood and frontier operations are single bit operations.

#include <string>
#include <utility>
#include <vector>

#include "mutviz/vertex_set.hpp"

namespace mutviz {

class Graph {
public:
    explicit Graph(int n, std::string name = {});

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    bool has_edge(int u, int v) const;
    // Rejects loops and out-of-range endpoints; adding an existing edge is a no-op.
    void add_edge(int u, int v);

    VertexSet neighbors(int v) const;
    int degree(int v) const;
    int max_degree() const;
    int edge_count() const;
    // Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;
    VertexSet vertices() const { return VertexSet::universe(n_); }

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::uint64_t> adj_;
    std::string name_;
};

class DistanceMatrix {
public:
    // Sentinel for unreachable pairs; small enough that sums of two stay finite-safe.
    static constexpr int kUnreachable = 1 << 29;

    explicit DistanceMatrix(int n);

    int order() const { return n_; }
    int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
    bool reachable(int u, int v) const { return (*this)(u, v) < kUnreachable; }
    void set(int u, int v, int value) { d_[static_cast<std::size_t>(u) * n_ + v] = value; }

private:
    int n_;
    std::vector<int> d_;
};

// Distances from source; kUnreachable for vertices in other components.
std::vector<int> bfs_distances(const Graph& g, int source);
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);
// Largest finite pairwise distance; throws std::domain_error on disconnected input.
int diameter(const Graph& g);

// Copy of g without the edge uv; throws std::invalid_argument if uv is not an edge.
Graph remove_edge(const Graph& g, int u, int v);

struct VertexRemoval {
    Graph graph;
    // old_to_new[i] is the index of i in the new graph, -1 for the removed vertex.
    std::vector<int> old_to_new;
};
// Copy of g without vertex x; remaining vertices are relabeled compactly.
VertexRemoval remove_vertex(const Graph& g, int x);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_host;    // subgraph index -> host index, increasing
    std::vector<int> from_host;  // host index -> subgraph index, -1 outside b
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet b);

struct IsometryCheck {
    bool isometric = false;
    bool connected = false;
};
// Does g[b] preserve the distances of g?  A disconnected g[b] reports
// {false, false} instead of throwing.
IsometryCheck is_isometric_subgraph(const Graph& g, VertexSet b);

// Is b closed under shortest paths: every vertex on a shortest path between
// two members of b is itself in b?
bool is_convex_subgraph(const Graph& g, VertexSet b);

}  // namespace mutviz
