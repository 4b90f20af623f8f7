#include "mutviz/visibility.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mutviz {

std::string_view kind_name(VisibilityKind kind) {
    switch (kind) {
        case VisibilityKind::mutual: return "mu";
        case VisibilityKind::outer: return "muo";
        case VisibilityKind::dual: return "mud";
        case VisibilityKind::total: return "mut";
    }
    return "?";
}

std::optional<VisibilityKind> kind_from_name(std::string_view name) {
    if (name == "mu") return VisibilityKind::mutual;
    if (name == "muo") return VisibilityKind::outer;
    if (name == "mud") return VisibilityKind::dual;
    if (name == "mut") return VisibilityKind::total;
    return std::nullopt;
}

VisibilityIndex::VisibilityIndex(const Graph& g)
    : n_(g.order()), d_(all_pairs_distances(g)) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) adj_[static_cast<std::size_t>(v)] = g.neighbors(v).bits();

    layer_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int s = 0; s < n_; ++s)
        for (int v = 0; v < n_; ++v) {
            const int dv = d_(s, v);
            if (dv < DistanceMatrix::kUnreachable && dv < n_)
                layer_[static_cast<std::size_t>(s) * n_ + dv] |= std::uint64_t{1} << v;
        }

    carrier_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) {
            if (!d_.reachable(u, v)) continue;
            std::uint64_t mask = 0;
            for (int w = 0; w < n_; ++w)
                if (d_.reachable(u, w) && d_.reachable(w, v) &&
                    d_(u, w) + d_(w, v) == d_(u, v))
                    mask |= std::uint64_t{1} << w;
            carrier_[static_cast<std::size_t>(u) * n_ + v] = mask;
        }
}

bool VisibilityIndex::visible(VertexSet x, int u, int v) const {
    const int len = d_(u, v);
    if (len >= DistanceMatrix::kUnreachable) return false;
    if (len <= 1) return true;
    const std::uint64_t endpoints =
        (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    const std::uint64_t usable =
        carrier_[static_cast<std::size_t>(u) * n_ + v] & ~(x.bits() & ~endpoints);
    std::uint64_t cur = std::uint64_t{1} << u;
    for (int ell = 1; ell < len; ++ell) {
        std::uint64_t next = 0;
        for (std::uint64_t m = cur; m != 0; m &= m - 1)
            next |= adj_[static_cast<std::size_t>(std::countr_zero(m))];
        next &= usable & layer_[static_cast<std::size_t>(u) * n_ + ell];
        if (next == 0) return false;
        cur = next;
    }
    // Any carrier vertex one step short of v is adjacent to v.
    return true;
}

bool pair_visible(const Graph& g, const DistanceMatrix& d, VertexSet x, int u, int v) {
    const int n = g.order();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("pair_visible: vertex out of range");
    if (u == v)
        throw std::invalid_argument("pair_visible: endpoints must differ");
    if (d.order() != n)
        throw std::invalid_argument("pair_visible: distance matrix order mismatch");
    const int len = d(u, v);
    if (len >= DistanceMatrix::kUnreachable) return false;
    if (len == 1) return true;
    const std::uint64_t endpoints =
        (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    const std::uint64_t blocked = x.bits() & ~endpoints;
    std::uint64_t cur = std::uint64_t{1} << u;
    for (int ell = 1; ell < len; ++ell) {
        std::uint64_t reach = 0;
        for (std::uint64_t m = cur; m != 0; m &= m - 1)
            reach |= g.neighbors(std::countr_zero(m)).bits();
        reach &= ~blocked;
        std::uint64_t next = 0;
        for (std::uint64_t m = reach; m != 0; m &= m - 1) {
            const int w = std::countr_zero(m);
            if (d(u, w) == ell && d(w, v) == len - ell)
                next |= std::uint64_t{1} << w;
        }
        if (next == 0) return false;
        cur = next;
    }
    return true;
}

namespace {

bool feasible_for_kind(const VisibilityIndex& idx, VertexSet x, VisibilityKind kind,
                       bool total_all_pairs) {
    const int n = idx.order();
    switch (kind) {
        case VisibilityKind::mutual: {
            const std::vector<int> m = x.members();
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = i + 1; j < m.size(); ++j)
                    if (!idx.visible(x, m[i], m[j])) return false;
            return true;
        }
        case VisibilityKind::outer: {
            for (int u : x.members())
                for (int v = 0; v < n; ++v) {
                    if (v == u) continue;
                    if (x.contains(v) && v < u) continue;
                    if (!idx.visible(x, u, v)) return false;
                }
            return true;
        }
        case VisibilityKind::dual: {
            const std::vector<int> in = x.members();
            for (std::size_t i = 0; i < in.size(); ++i)
                for (std::size_t j = i + 1; j < in.size(); ++j)
                    if (!idx.visible(x, in[i], in[j])) return false;
            const std::vector<int> out = x.complement_in(n).members();
            for (std::size_t i = 0; i < out.size(); ++i)
                for (std::size_t j = i + 1; j < out.size(); ++j)
                    if (!idx.visible(x, out[i], out[j])) return false;
            return true;
        }
        case VisibilityKind::total: {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    const int len = idx.distances()(u, v);
                    if (total_all_pairs ? len < 2 : len != 2) continue;
                    if (!idx.visible(x, u, v)) return false;
                }
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_visibility_set(const Graph& g, VertexSet x, VisibilityKind kind,
                       bool total_all_pairs) {
    if (!x.is_subset_of(g.vertices()))
        throw std::invalid_argument("is_visibility_set: set not within the graph");
    if (!is_connected(g))
        throw std::domain_error("is_visibility_set requires a connected graph");
    const VisibilityIndex idx(g);
    return feasible_for_kind(idx, x, kind, total_all_pairs);
}

VertexSet half_set(const Graph& g, VertexSet z, int x, int y) {
    const int n = g.order();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw std::invalid_argument("half_set: vertex out of range");
    if (!z.is_subset_of(g.vertices()))
        throw std::invalid_argument("half_set: set not within the graph");
    const std::vector<int> dx = bfs_distances(g, x);
    const std::vector<int> dy = bfs_distances(g, y);
    VertexSet out;
    for (int u : z.members())
        if (dx[static_cast<std::size_t>(u)] <= dy[static_cast<std::size_t>(u)]) out.add(u);
    return out;
}

BlockingSelection blocking_set(const Graph& g, VertexSet z, int w) {
    const int n = g.order();
    if (w < 0 || w >= n)
        throw std::invalid_argument("blocking_set: vertex out of range");
    if (!is_visibility_set(g, z, VisibilityKind::mutual))
        throw std::invalid_argument("blocking_set: z is not a mutual-visibility set");

    const VisibilityIndex idx(g);
    const DistanceMatrix& d = idx.distances();
    BlockingSelection sel;
    for (int u : z.members()) {
        if (u == w) {
            sel.paths.emplace_back(u, std::vector<int>{w});
            continue;
        }
        const int len = d(w, u);
        const VertexSet carrier = idx.geodesic_carrier(w, u);
        // cost[v]: fewest z-vertices strictly inside a shortest v,u-continuation.
        std::vector<int> cost(static_cast<std::size_t>(n), 0);
        for (int ell = len - 1; ell >= 0; --ell) {
            for (int v : (carrier & idx.layer(w, ell)).members()) {
                int best = DistanceMatrix::kUnreachable;
                for (int s : (idx.neighbors(v) & carrier & idx.layer(w, ell + 1)).members()) {
                    const int step = (s != u && z.contains(s)) ? 1 : 0;
                    best = std::min(best, step + cost[static_cast<std::size_t>(s)]);
                }
                cost[static_cast<std::size_t>(v)] = best;
            }
        }
        std::vector<int> path{w};
        int at = w;
        for (int ell = 0; ell < len; ++ell) {
            // Smallest-label next vertex among minimum-cost continuations.
            for (int s : (idx.neighbors(at) & carrier & idx.layer(w, ell + 1)).members()) {
                const int step = (s != u && z.contains(s)) ? 1 : 0;
                if (step + cost[static_cast<std::size_t>(s)] ==
                    cost[static_cast<std::size_t>(at)]) {
                    at = s;
                    break;
                }
            }
            path.push_back(at);
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            if (z.contains(path[i])) sel.blockers.add(path[i]);
        sel.paths.emplace_back(u, std::move(path));
    }
    return sel;
}

}  // namespace mutviz
