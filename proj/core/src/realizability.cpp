#include "mutviz/realizability.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mutviz {

namespace {

bool characterization(VisibilityKind kind, int p, int q) {
    if (p >= 2) return true;
    if (p == 1 && q == 1) return true;
    switch (kind) {
        case VisibilityKind::mutual:
        case VisibilityKind::outer:
            return false;
        case VisibilityKind::total:
            return (p == 1 && q >= 6) || (p == 0 && q >= 5);
        case VisibilityKind::dual:
            return (p == 1 && q >= 8) || (p == 0 && q >= 7);
    }
    return false;
}

LabeledGraph build_witness(int p, int q) {
    if (p == 0) return cycle(q);
    if (p == 1 && q == 1) return complete(1);
    if (p == 1) return cycle_plus(q);
    if (p == q) return complete(q);
    return broom(p, q);
}

}  // namespace

RealizabilityAnswer is_realizable(VisibilityKind kind, int p, int q) {
    if (q < 1 || p < 0 || p > q)
        throw std::invalid_argument("is_realizable requires 0 <= p <= q and q >= 1");
    RealizabilityAnswer out;
    out.kind = kind;
    out.p = p;
    out.q = q;
    out.realizable = characterization(kind, p, q);
    if (out.realizable) out.witness = build_witness(p, q);
    return out;
}

void enumerate_connected_graphs(int q, const std::function<void(const Graph&)>& yield) {
    if (q < 1)
        throw std::invalid_argument("enumerate_connected_graphs requires q >= 1");
    if (q > 7)
        throw std::invalid_argument(
            "enumerate_connected_graphs: orders above 7 are not supported");
    const int pair_count = q * (q - 1) / 2;
    std::array<std::pair<int, int>, 21> pairs{};
    {
        int t = 0;
        for (int j = 1; j < q; ++j)
            for (int i = 0; i < j; ++i) pairs[static_cast<std::size_t>(t++)] = {i, j};
    }
    std::vector<std::array<int, 7>> perms;
    {
        std::array<int, 7> perm{};
        std::iota(perm.begin(), perm.begin() + q, 0);
        do {
            perms.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.begin() + q));
    }

    std::array<std::uint64_t, 7> adj{};
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count); ++mask) {
        adj.fill(0);
        for (int t = 0; t < pair_count; ++t)
            if ((mask >> t) & 1u) {
                const auto [i, j] = pairs[static_cast<std::size_t>(t)];
                adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }

        std::uint64_t seen = 1, frontier = 1;
        while (frontier != 0) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m != 0; m &= m - 1)
                next |= adj[static_cast<std::size_t>(std::countr_zero(m))];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen != (std::uint64_t{1} << q) - 1) continue;

        // Emit only the lexicographically least representative of its class:
        // no relabeling may produce a smaller edge bitstring.
        bool canonical = true;
        for (std::size_t pi = 1; pi < perms.size() && canonical; ++pi) {
            const std::array<int, 7>& perm = perms[pi];
            for (int t = 0; t < pair_count; ++t) {
                const auto [i, j] = pairs[static_cast<std::size_t>(t)];
                const int orig = static_cast<int>((mask >> t) & 1u);
                const int image =
                    static_cast<int>((adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >>
                                      perm[static_cast<std::size_t>(j)]) &
                                     1u);
                if (image != orig) {
                    if (image < orig) canonical = false;  // permuted string is smaller
                    break;
                }
            }
        }
        if (!canonical) continue;

        Graph g(q);
        for (int t = 0; t < pair_count; ++t)
            if ((mask >> t) & 1u)
                g.add_edge(pairs[static_cast<std::size_t>(t)].first,
                           pairs[static_cast<std::size_t>(t)].second);
        yield(g);
    }
}

std::vector<Graph> connected_graph_census(int q) {
    std::vector<Graph> out;
    enumerate_connected_graphs(q, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

std::set<int> exhaustive_spectrum(int q, VisibilityKind kind, const SolverOptions& opts) {
    std::set<int> out;
    enumerate_connected_graphs(q, [&](const Graph& g) {
        out.insert(max_visibility_set(g, kind, opts).value);
    });
    return out;
}

}  // namespace mutviz
