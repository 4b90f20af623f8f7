#pragma once

// X-visibility of vertex pairs and the four visibility-set varieties.
//
// A pair u, v is X-visible when some shortest u,v-path has no internal
// vertex in X (the endpoints themselves may lie in X).  The four set
// varieties differ only in which pairs must be visible:
//   mutual: pairs inside x
//   outer:  pairs with at least one endpoint in x
//   dual:   pairs inside x and pairs inside the complement of x
//   total:  all pairs

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "mutviz/graph.hpp"

namespace mutviz {

enum class VisibilityKind { mutual, outer, dual, total };

inline constexpr std::array<VisibilityKind, 4> kAllKinds = {
    VisibilityKind::mutual, VisibilityKind::outer, VisibilityKind::dual,
    VisibilityKind::total};

std::string_view kind_name(VisibilityKind kind);  // "mu", "muo", "mud", "mut"
std::optional<VisibilityKind> kind_from_name(std::string_view name);

// Precomputed geodesic structure for one graph: distances, per-source
// distance layers, and per-pair masks of vertices lying on some shortest path.
class VisibilityIndex {
public:
    explicit VisibilityIndex(const Graph& g);

    int order() const { return n_; }
    const DistanceMatrix& distances() const { return d_; }

    // Vertices w with d(u,w) + d(w,v) = d(u,v), endpoints included.
    VertexSet geodesic_carrier(int u, int v) const {
        return VertexSet::from_bits(carrier_[static_cast<std::size_t>(u) * n_ + v]);
    }

    VertexSet layer(int source, int dist) const {
        return VertexSet::from_bits(layer_[static_cast<std::size_t>(source) * n_ + dist]);
    }

    VertexSet neighbors(int v) const {
        return VertexSet::from_bits(adj_[static_cast<std::size_t>(v)]);
    }

    // Does some shortest u,v-path avoid x internally?
    bool visible(VertexSet x, int u, int v) const;

private:
    int n_;
    DistanceMatrix d_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> carrier_;
    std::vector<std::uint64_t> layer_;
};

// One-off pair query against a caller-supplied distance matrix.
// Throws std::invalid_argument when u == v or an index is out of range.
bool pair_visible(const Graph& g, const DistanceMatrix& d, VertexSet x, int u, int v);

// Feasibility of x for the given variety.  Requires a connected graph
// (std::domain_error otherwise).  For the total variety the check runs over
// distance-2 pairs only, which is equivalent; pass total_all_pairs = true to
// force the full-pairs definition for cross-validation.
bool is_visibility_set(const Graph& g, VertexSet x, VisibilityKind kind,
                       bool total_all_pairs = false);

// Members of z at least as close to x as to y.
VertexSet half_set(const Graph& g, VertexSet z, int x, int y);

struct BlockingSelection {
    // Members of z that appear as internal vertices on some chosen path.
    VertexSet blockers;
    // For each u in z (ascending), the chosen shortest w,u-path as a vertex
    // sequence starting at w.  Among paths minimizing the number of internal
    // z-vertices, the lexicographically smallest vertex sequence is chosen.
    std::vector<std::pair<int, std::vector<int>>> paths;
};
// Fix one shortest path from w to every member of the mutual-visibility set z.
// Throws std::invalid_argument when z is not a mutual-visibility set.
BlockingSelection blocking_set(const Graph& g, VertexSet z, int w);

}  // namespace mutviz
