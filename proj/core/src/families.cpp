#include "mutviz/families.hpp"

#include <map>
#include <stdexcept>

namespace mutviz {

int LabeledGraph::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw std::invalid_argument("no vertex labeled '" + std::string(label) + "'");
}

const std::string& LabeledGraph::label_of(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= labels.size())
        throw std::invalid_argument("label_of: vertex out of range");
    return labels[static_cast<std::size_t>(v)];
}

namespace {

std::vector<std::string> numbered(std::string_view stem, int count, int from = 1) {
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        out.push_back(std::string(stem) + std::to_string(from + i));
    return out;
}

void require_at_least(int value, int least, const char* what) {
    if (value < least)
        throw std::invalid_argument(std::string(what) + " requires parameter >= " +
                                    std::to_string(least) + ", got " +
                                    std::to_string(value));
}

}  // namespace

LabeledGraph path(int n) {
    require_at_least(n, 1, "path");
    Graph g(n, "P" + std::to_string(n));
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return {std::move(g), numbered("v", n)};
}

LabeledGraph cycle(int n) {
    require_at_least(n, 3, "cycle");
    Graph g(n, "C" + std::to_string(n));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return {std::move(g), numbered("v", n)};
}

LabeledGraph complete(int n) {
    require_at_least(n, 1, "complete");
    Graph g(n, "K" + std::to_string(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return {std::move(g), numbered("v", n)};
}

LabeledGraph star(int p) {
    require_at_least(p, 1, "star");
    Graph g(p + 1, "K1," + std::to_string(p));
    for (int i = 1; i <= p; ++i) g.add_edge(0, i);
    std::vector<std::string> labels{"c"};
    for (const std::string& s : numbered("u", p)) labels.push_back(s);
    return {std::move(g), std::move(labels)};
}

LabeledGraph subdivided_star(int p) {
    require_at_least(p, 2, "subdivided_star");
    Graph g(2 * p + 1, "SK1," + std::to_string(p));
    std::vector<std::string> labels{"c"};
    for (int i = 1; i <= p; ++i) {
        const int mid = 2 * i - 1, leaf = 2 * i;
        g.add_edge(0, mid);
        g.add_edge(mid, leaf);
        labels.push_back("m" + std::to_string(i));
        labels.push_back("u" + std::to_string(i));
    }
    return {std::move(g), std::move(labels)};
}

LabeledGraph h_k(int k) {
    require_at_least(k, 2, "h_k");
    Graph g(2 * k + 2, "H" + std::to_string(k));
    std::vector<std::string> labels{"z", "w"};
    for (const std::string& s : numbered("x", k)) labels.push_back(s);
    for (const std::string& s : numbered("y", k)) labels.push_back(s);
    g.add_edge(0, 1);  // z w
    for (int i = 1; i <= k; ++i) {
        const int x = 1 + i, y = k + 1 + i;
        g.add_edge(1, x);  // w x_i
        g.add_edge(x, y);  // x_i y_i
        g.add_edge(y, 0);  // y_i z
    }
    return {std::move(g), std::move(labels)};
}

LabeledGraph l_k(int k) {
    require_at_least(k, 2, "l_k");
    const int order = 8 * k + 14;
    if (order > kMaxVertices)
        throw std::invalid_argument("l_k: order " + std::to_string(order) +
                                    " exceeds the 64-vertex cap");
    Graph g(order, "L" + std::to_string(k));
    std::vector<std::string> labels;
    for (const std::string& s : numbered("u", k)) labels.push_back(s);
    for (const std::string& s : numbered("v", k)) labels.push_back(s);
    labels.push_back("z");
    const int z = 2 * k;
    for (const std::string& s : numbered("z", 6)) labels.push_back(s);

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            g.add_edge(i, j);          // U clique
            g.add_edge(k + i, k + j);  // V clique
        }
    for (int i = 0; i < k; ++i) {
        g.add_edge(i, k + i);  // matching u_i v_i
        g.add_edge(z, k + i);  // z v_i
    }
    // 7-cycle through z: z z1..z6 z.
    for (int j = 0; j < 6; ++j) g.add_edge(z + j, z + j + 1);
    g.add_edge(z + 6, z);

    // One 7-cycle through each u_i; its six new vertices get consecutive labels.
    auto attach_cycle = [&g, &labels](int host, const std::string& stem, int first) {
        for (int j = 1; j <= 6; ++j)
            labels.push_back(stem + "(" + std::to_string(j) + ")");
        g.add_edge(host, first);
        for (int j = 0; j < 5; ++j) g.add_edge(first + j, first + j + 1);
        g.add_edge(first + 5, host);
    };
    int next = 2 * k + 7;
    for (int i = 0; i < k; ++i) {
        attach_cycle(i, "u" + std::to_string(i + 1), next);
        next += 6;
    }
    const int prime = next;
    labels.push_back("u1'");
    g.add_edge(prime, 0);          // u1' u1
    g.add_edge(prime, 2 * k + 1);  // u1' z1
    attach_cycle(prime, "u1'", prime + 1);
    return {std::move(g), std::move(labels)};
}

LabeledGraph f_k(int k) {
    require_at_least(k, 5, "f_k");
    const int order = 3 * k + 1;
    if (order > kMaxVertices)
        throw std::invalid_argument("f_k: order " + std::to_string(order) +
                                    " exceeds the 64-vertex cap");
    Graph g(order, "F" + std::to_string(k));
    std::vector<std::string> labels{"z"};
    for (const std::string& s : numbered("x", k)) labels.push_back(s);
    for (const std::string& s : numbered("y", 2 * k)) labels.push_back(s);
    for (int i = 1; i <= k; ++i) {
        g.add_edge(0, i);                  // z x_i
        g.add_edge(i, k + 2 * i - 1);      // x_i y_{2i-1}
        g.add_edge(i, k + 2 * i);          // x_i y_{2i}
    }
    for (int j = 1; j < 2 * k; ++j) g.add_edge(k + j, k + j + 1);
    return {std::move(g), std::move(labels)};
}

LabeledGraph cycle_with_leaves(int n, const std::vector<int>& attach) {
    require_at_least(n, 3, "cycle_with_leaves");
    const int order = n + static_cast<int>(attach.size());
    if (order > kMaxVertices)
        throw std::invalid_argument("cycle_with_leaves: order exceeds the 64-vertex cap");
    Graph g(order, "C" + std::to_string(n) + "^" + std::to_string(attach.size()));
    std::vector<std::string> labels = numbered("v", n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    std::map<int, int> seen;
    int next = n;
    for (int pos : attach) {
        if (pos < 1 || pos > n)
            throw std::invalid_argument("cycle_with_leaves: attach position " +
                                        std::to_string(pos) + " out of range");
        g.add_edge(pos - 1, next);
        std::string label = "u" + std::to_string(pos);
        label.append(static_cast<std::size_t>(seen[pos]++), '\'');
        labels.push_back(std::move(label));
        ++next;
    }
    return {std::move(g), std::move(labels)};
}

LabeledGraph j_graph() {
    LabeledGraph j = cycle_with_leaves(12, {1, 5, 9});
    j.graph.set_name("J");
    return j;
}

LabeledGraph cycle_plus(int q) {
    require_at_least(q, 4, "cycle_plus");
    LabeledGraph c = cycle_with_leaves(q - 1, {1});
    c.graph.set_name("C" + std::to_string(q - 1) + "+");
    return c;
}

LabeledGraph broom(int p, int q) {
    if (p < 2 || p >= q)
        throw std::invalid_argument("broom requires 2 <= p < q");
    const int spine = q - p + 1;
    Graph g(q, "B(" + std::to_string(p) + "," + std::to_string(q) + ")");
    std::vector<std::string> labels = numbered("s", spine);
    for (int i = 0; i + 1 < spine; ++i) g.add_edge(i, i + 1);
    for (int t = 1; t < p; ++t) {
        g.add_edge(spine - 1, spine - 1 + t);
        labels.push_back("t" + std::to_string(t));
    }
    return {std::move(g), std::move(labels)};
}

}  // namespace mutviz
