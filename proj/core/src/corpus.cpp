#include "mutviz/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mutviz {

Graph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("random_connected_graph: bad order");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < edge_prob) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected_graph: no connected sample found");
}

Graph random_tree(std::mt19937_64& rng, int n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("random_tree: bad order");
    Graph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& s : seq) s = pick(rng);

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    std::uint64_t leaves = 0;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves |= std::uint64_t{1} << v;
    for (int s : seq) {
        const int leaf = std::countr_zero(leaves);
        leaves &= leaves - 1;
        g.add_edge(leaf, s);
        if (--degree[static_cast<std::size_t>(s)] == 1)
            leaves |= std::uint64_t{1} << s;
    }
    const int a = std::countr_zero(leaves);
    leaves &= leaves - 1;
    g.add_edge(a, std::countr_zero(leaves));
    return g;
}

VertexSet random_feasible_set(std::mt19937_64& rng, const Graph& g,
                              VisibilityKind kind) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    VertexSet x;
    for (int v : order)
        if (is_visibility_set(g, x.with(v), kind)) x = x.with(v);
    return x;
}

int leaf_count(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) ++count;
    return count;
}

}  // namespace mutviz
