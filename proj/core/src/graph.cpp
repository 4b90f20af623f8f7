#include "mutviz/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mutviz {

Graph::Graph(int n, std::string name) : n_(n), name_(std::move(name)) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("graph order must be between 1 and 64, got " +
                                    std::to_string(n));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range for order " + std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & std::uint64_t{1};
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

VertexSet Graph::neighbors(int v) const {
    check_vertex(v);
    return VertexSet::from_bits(adj_[static_cast<std::size_t>(v)]);
}

int Graph::degree(int v) const { return neighbors(v).size(); }

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1);
        for (std::uint64_t m = higher; m != 0; m &= m - 1)
            out.emplace_back(u, u + 1 + std::countr_zero(m));
    }
    return out;
}

DistanceMatrix::DistanceMatrix(int n) : n_(n) {
    d_.assign(static_cast<std::size_t>(n) * n, kUnreachable);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.order();
    if (source < 0 || source >= n)
        throw std::invalid_argument("bfs source out of range");
    std::vector<int> dist(static_cast<std::size_t>(n), DistanceMatrix::kUnreachable);
    dist[static_cast<std::size_t>(source)] = 0;
    std::uint64_t seen = std::uint64_t{1} << source;
    std::uint64_t frontier = seen;
    int d = 0;
    while (frontier != 0) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m != 0; m &= m - 1)
            next |= g.neighbors(std::countr_zero(m)).bits();
        next &= ~seen;
        ++d;
        for (std::uint64_t m = next; m != 0; m &= m - 1)
            dist[static_cast<std::size_t>(std::countr_zero(m))] = d;
        seen |= next;
        frontier = next;
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix d(n);
    for (int s = 0; s < n; ++s) {
        const std::vector<int> row = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) d.set(s, v, row[static_cast<std::size_t>(v)]);
    }
    return d;
}

bool is_connected(const Graph& g) {
    const std::vector<int> dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(),
                       [](int x) { return x < DistanceMatrix::kUnreachable; });
}

int diameter(const Graph& g) {
    if (!is_connected(g))
        throw std::domain_error("diameter requires a connected graph");
    const DistanceMatrix d = all_pairs_distances(g);
    int best = 0;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) best = std::max(best, d(u, v));
    return best;
}

Graph remove_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("remove_edge: " + std::to_string(u) + "-" +
                                    std::to_string(v) + " is not an edge");
    Graph out(g.order(), g.name());
    for (const auto& [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) out.add_edge(a, b);
    return out;
}

VertexRemoval remove_vertex(const Graph& g, int x) {
    const int n = g.order();
    if (x < 0 || x >= n)
        throw std::invalid_argument("remove_vertex: vertex out of range");
    if (n == 1)
        throw std::invalid_argument("remove_vertex: cannot empty the graph");
    std::vector<int> old_to_new(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (v != x) old_to_new[static_cast<std::size_t>(v)] = next++;
    Graph out(n - 1, g.name());
    for (const auto& [a, b] : g.edges())
        if (a != x && b != x)
            out.add_edge(old_to_new[static_cast<std::size_t>(a)],
                         old_to_new[static_cast<std::size_t>(b)]);
    return {std::move(out), std::move(old_to_new)};
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet b) {
    if (!b.is_subset_of(g.vertices()))
        throw std::invalid_argument("induced_subgraph: set not within the graph");
    if (b.empty())
        throw std::invalid_argument("induced_subgraph: empty vertex set");
    const std::vector<int> to_host = b.members();
    std::vector<int> from_host(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < to_host.size(); ++i)
        from_host[static_cast<std::size_t>(to_host[i])] = static_cast<int>(i);
    Graph out(static_cast<int>(to_host.size()));
    for (std::size_t i = 0; i < to_host.size(); ++i) {
        VertexSet inside = g.neighbors(to_host[i]) & b;
        for (int w : inside.members()) {
            const int j = from_host[static_cast<std::size_t>(w)];
            if (static_cast<int>(i) < j) out.add_edge(static_cast<int>(i), j);
        }
    }
    return {std::move(out), to_host, std::move(from_host)};
}

IsometryCheck is_isometric_subgraph(const Graph& g, VertexSet b) {
    if (!b.is_subset_of(g.vertices()))
        throw std::invalid_argument("is_isometric_subgraph: set not within the graph");
    if (b.empty() || b.size() == 1) return {true, true};
    const InducedSubgraph sub = induced_subgraph(g, b);
    if (!is_connected(sub.graph)) return {false, false};
    const DistanceMatrix inner = all_pairs_distances(sub.graph);
    const DistanceMatrix outer = all_pairs_distances(g);
    const int m = sub.graph.order();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (inner(i, j) != outer(sub.to_host[static_cast<std::size_t>(i)],
                                     sub.to_host[static_cast<std::size_t>(j)]))
                return {false, true};
    return {true, true};
}

bool is_convex_subgraph(const Graph& g, VertexSet b) {
    if (!b.is_subset_of(g.vertices()))
        throw std::invalid_argument("is_convex_subgraph: set not within the graph");
    if (b.size() <= 1) return true;
    const DistanceMatrix d = all_pairs_distances(g);
    const std::vector<int> members = b.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const int u = members[i], v = members[j];
            if (!d.reachable(u, v)) continue;
            for (int w = 0; w < g.order(); ++w) {
                if (b.contains(w)) continue;
                if (d.reachable(u, w) && d.reachable(w, v) &&
                    d(u, w) + d(w, v) == d(u, v))
                    return false;
            }
        }
    }
    return true;
}

}  // namespace mutviz
