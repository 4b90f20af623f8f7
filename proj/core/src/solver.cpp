#include "mutviz/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <numeric>
#include <thread>
#include <vector>

namespace mutviz {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

struct Ctx {
    const VisibilityIndex& idx;
    VisibilityKind kind;
    int n;
    std::uint64_t all;
    // Pairs the total variety watches: distance-2 pairs, or every pair when
    // the reduction is disabled.
    std::vector<std::pair<int, int>> total_pairs;

    bool carrier_has(int a, int b, int v) const {
        return idx.geodesic_carrier(a, b).contains(v);
    }
    bool see(std::uint64_t x, int a, int b) const {
        return idx.visible(VertexSet::from_bits(x), a, b);
    }
};

Ctx make_ctx(const VisibilityIndex& idx, VisibilityKind kind, bool total_all_pairs) {
    Ctx c{idx, kind, idx.order(), VertexSet::universe(idx.order()).bits(), {}};
    if (kind == VisibilityKind::total) {
        for (int u = 0; u < c.n; ++u)
            for (int v = u + 1; v < c.n; ++v) {
                const int len = idx.distances()(u, v);
                if (total_all_pairs ? len >= 2 : len == 2)
                    c.total_pairs.emplace_back(u, v);
            }
    }
    return c;
}

// Full feasibility of I for the kind.
bool feasible(const Ctx& c, std::uint64_t I) {
    switch (c.kind) {
        case VisibilityKind::mutual: {
            for (std::uint64_t ma = I; ma != 0; ma &= ma - 1) {
                const int a = std::countr_zero(ma);
                for (std::uint64_t mb = ma & (ma - 1); mb != 0; mb &= mb - 1)
                    if (!c.see(I, a, std::countr_zero(mb))) return false;
            }
            return true;
        }
        case VisibilityKind::outer: {
            for (std::uint64_t ma = I; ma != 0; ma &= ma - 1) {
                const int a = std::countr_zero(ma);
                for (int b = 0; b < c.n; ++b) {
                    if (b == a || (((I >> b) & 1u) != 0 && b < a)) continue;
                    if (!c.see(I, a, b)) return false;
                }
            }
            return true;
        }
        case VisibilityKind::dual: {
            for (std::uint64_t side : {I, c.all & ~I})
                for (std::uint64_t ma = side; ma != 0; ma &= ma - 1) {
                    const int a = std::countr_zero(ma);
                    for (std::uint64_t mb = ma & (ma - 1); mb != 0; mb &= mb - 1)
                        if (!c.see(I, a, std::countr_zero(mb))) return false;
                }
            return true;
        }
        case VisibilityKind::total: {
            for (const auto& [a, b] : c.total_pairs)
                if (!c.see(I, a, b)) return false;
            return true;
        }
    }
    return false;
}

// Visibility of a fixed pair is anti-monotone in the set: once a pair that
// the final set must keep visible is invisible with respect to I, it stays
// invisible for every superset, so the branch is dead in all four varieties
// (the dual variety needs no hereditary structure for this, only that the
// final set extends I and the final complement extends O).
bool include_ok(const Ctx& c, std::uint64_t I, std::uint64_t O, int v) {
    const std::uint64_t In = I | bit(v);
    switch (c.kind) {
        case VisibilityKind::mutual: {
            for (std::uint64_t ma = I; ma != 0; ma &= ma - 1)
                if (!c.see(In, std::countr_zero(ma), v)) return false;
            for (std::uint64_t ma = I; ma != 0; ma &= ma - 1) {
                const int a = std::countr_zero(ma);
                for (std::uint64_t mb = ma & (ma - 1); mb != 0; mb &= mb - 1) {
                    const int b = std::countr_zero(mb);
                    if (c.carrier_has(a, b, v) && !c.see(In, a, b)) return false;
                }
            }
            return true;
        }
        case VisibilityKind::outer: {
            const std::uint64_t decided = I | O;
            for (std::uint64_t mb = decided; mb != 0; mb &= mb - 1)
                if (!c.see(In, v, std::countr_zero(mb))) return false;
            for (std::uint64_t ma = I; ma != 0; ma &= ma - 1) {
                const int a = std::countr_zero(ma);
                for (std::uint64_t mb = decided; mb != 0; mb &= mb - 1) {
                    const int b = std::countr_zero(mb);
                    if (b == a || (((I >> b) & 1u) != 0 && b < a)) continue;
                    if (c.carrier_has(a, b, v) && !c.see(In, a, b)) return false;
                }
            }
            return true;
        }
        case VisibilityKind::dual: {
            for (std::uint64_t ma = I; ma != 0; ma &= ma - 1)
                if (!c.see(In, std::countr_zero(ma), v)) return false;
            for (std::uint64_t side : {I, O})
                for (std::uint64_t ma = side; ma != 0; ma &= ma - 1) {
                    const int a = std::countr_zero(ma);
                    for (std::uint64_t mb = ma & (ma - 1); mb != 0; mb &= mb - 1) {
                        const int b = std::countr_zero(mb);
                        if (c.carrier_has(a, b, v) && !c.see(In, a, b)) return false;
                    }
                }
            return true;
        }
        case VisibilityKind::total: {
            for (const auto& [a, b] : c.total_pairs) {
                if (a == v || b == v) continue;
                if (c.carrier_has(a, b, v) && !c.see(In, a, b)) return false;
            }
            return true;
        }
    }
    return false;
}

bool exclude_ok(const Ctx& c, std::uint64_t I, std::uint64_t O, int v) {
    switch (c.kind) {
        case VisibilityKind::mutual:
        case VisibilityKind::total:
            return true;
        case VisibilityKind::outer: {
            for (std::uint64_t ma = I; ma != 0; ma &= ma - 1)
                if (!c.see(I, std::countr_zero(ma), v)) return false;
            return true;
        }
        case VisibilityKind::dual: {
            for (std::uint64_t mo = O; mo != 0; mo &= mo - 1)
                if (!c.see(I, std::countr_zero(mo), v)) return false;
            return true;
        }
    }
    return false;
}

struct LimitHit {};

struct Shared {
    std::atomic<int> best{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::optional<std::uint64_t> node_limit;
};

class Search {
public:
    Search(const Ctx& c, const std::vector<int>& order, Shared* shared,
           std::optional<std::uint64_t> serial_limit, int best)
        : c_(c), order_(order), shared_(shared), serial_limit_(serial_limit),
          best_(best) {}

    void run(int depth, std::uint64_t I, std::uint64_t O) {
        ++nodes_;
        if (shared_ != nullptr) {
            if ((nodes_ & 0x1FFF) == 0) sync();
        } else if (serial_limit_ && nodes_ > *serial_limit_) {
            throw LimitHit{};
        }
        const std::uint64_t und = c_.all & ~(I | O);
        if (std::popcount(I) + std::popcount(und) <= best_) return;
        if (depth == c_.n) {
            // The bound above guarantees |I| > best_ here.
            if (feasible(c_, I)) improve(std::popcount(I), I);
            return;
        }
        const int v = order_[static_cast<std::size_t>(depth)];
        if (include_ok(c_, I, O, v)) run(depth + 1, I | bit(v), O);
        if (exclude_ok(c_, I, O, v)) run(depth + 1, I, O | bit(v));
    }

    void flush() {
        if (shared_ != nullptr) {
            shared_->nodes.fetch_add(nodes_ - flushed_, std::memory_order_relaxed);
            flushed_ = nodes_;
        }
    }

    std::uint64_t nodes() const { return nodes_; }
    int best() const { return best_; }
    bool has_witness() const { return has_witness_; }
    std::uint64_t witness() const { return witness_; }

private:
    void improve(int size, std::uint64_t I) {
        best_ = size;
        witness_ = I;
        has_witness_ = true;
        if (shared_ != nullptr) {
            int cur = shared_->best.load(std::memory_order_relaxed);
            while (cur < size &&
                   !shared_->best.compare_exchange_weak(cur, size,
                                                        std::memory_order_relaxed)) {
            }
        }
    }

    void sync() {
        flush();
        const std::uint64_t total = shared_->nodes.load(std::memory_order_relaxed);
        if (shared_->node_limit && total > *shared_->node_limit)
            shared_->stop.store(true, std::memory_order_relaxed);
        if (shared_->stop.load(std::memory_order_relaxed)) throw LimitHit{};
        best_ = std::max(best_, shared_->best.load(std::memory_order_relaxed));
    }

    const Ctx& c_;
    const std::vector<int>& order_;
    Shared* shared_;
    std::optional<std::uint64_t> serial_limit_;
    int best_;
    std::uint64_t nodes_ = 0;
    std::uint64_t flushed_ = 0;
    std::uint64_t witness_ = 0;
    bool has_witness_ = false;
};

std::vector<int> branch_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&g](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return order;
}

int greedy_seed(const Ctx& c, const std::vector<int>& order) {
    std::uint64_t I = 0;
    for (int v : order)
        if (feasible(c, I | bit(v))) I |= bit(v);
    return std::popcount(I);
}

struct PhaseOneResult {
    int best = 0;
    std::uint64_t nodes = 0;
    std::uint64_t witness = 0;
    bool has_witness = false;
    bool limited = false;
};

PhaseOneResult search_serial(const Ctx& c, const std::vector<int>& order, int seed,
                             std::optional<std::uint64_t> node_limit) {
    Search s(c, order, nullptr, node_limit, seed);
    PhaseOneResult out;
    try {
        s.run(0, 0, 0);
    } catch (const LimitHit&) {
        out.limited = true;
    }
    out.best = s.best();
    out.nodes = s.nodes();
    out.witness = s.witness();
    out.has_witness = s.has_witness();
    return out;
}

PhaseOneResult search_parallel(const Ctx& c, const std::vector<int>& order, int seed,
                               std::optional<std::uint64_t> node_limit, int threads) {
    struct Task {
        std::uint64_t I, O;
    };
    const std::size_t target = static_cast<std::size_t>(8) * threads;
    std::vector<Task> frontier{{0, 0}};
    std::uint64_t expand_nodes = 0;
    int depth = 0;
    while (depth < c.n && frontier.size() < target && !frontier.empty()) {
        std::vector<Task> next;
        next.reserve(frontier.size() * 2);
        for (const Task& t : frontier) {
            ++expand_nodes;
            const std::uint64_t und = c.all & ~(t.I | t.O);
            if (std::popcount(t.I) + std::popcount(und) <= seed) continue;
            const int v = order[static_cast<std::size_t>(depth)];
            if (include_ok(c, t.I, t.O, v)) next.push_back({t.I | bit(v), t.O});
            if (exclude_ok(c, t.I, t.O, v)) next.push_back({t.I, t.O | bit(v)});
        }
        frontier = std::move(next);
        ++depth;
    }

    Shared shared;
    shared.best.store(seed);
    shared.nodes.store(expand_nodes);
    shared.node_limit = node_limit;

    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> pool;
    const int workers = std::max(1, threads);
    std::vector<PhaseOneResult> locals(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            PhaseOneResult& mine = locals[static_cast<std::size_t>(w)];
            while (true) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= frontier.size()) break;
                Search s(c, order, &shared, std::nullopt,
                         shared.best.load(std::memory_order_relaxed));
                try {
                    s.run(depth, frontier[i].I, frontier[i].O);
                } catch (const LimitHit&) {
                    mine.limited = true;
                }
                s.flush();
                if (s.has_witness() && (!mine.has_witness || s.best() > mine.best)) {
                    mine.witness = s.witness();
                    mine.has_witness = true;
                }
                mine.best = std::max(mine.best, s.best());
                if (mine.limited) break;
            }
        });
    }
    for (std::thread& t : pool) t.join();

    PhaseOneResult out;
    out.best = shared.best.load();
    out.nodes = shared.nodes.load();
    for (const PhaseOneResult& mine : locals) {
        out.limited = out.limited || mine.limited;
        if (mine.has_witness && (!out.has_witness || mine.best >= out.best)) {
            out.witness = mine.witness;
            out.has_witness = true;
        }
    }
    return out;
}

// Lexicographically smallest feasible set of exactly the target size.
// Include-first descent in label order visits candidate sets of equal size in
// lexicographic order, so the first feasible leaf is the canonical witness.
std::optional<std::uint64_t> lex_min_witness(const Ctx& c, int target,
                                             std::uint64_t& nodes) {
    std::uint64_t found = 0;
    bool ok = false;
    std::function<bool(int, std::uint64_t, std::uint64_t)> rec =
        [&](int depth, std::uint64_t I, std::uint64_t O) -> bool {
        ++nodes;
        const int size = std::popcount(I);
        if (size > target) return false;
        if (size + (c.n - depth) < target) return false;
        if (depth == c.n) {
            if (size == target && feasible(c, I)) {
                found = I;
                ok = true;
                return true;
            }
            return false;
        }
        const int v = depth;
        if (include_ok(c, I, O, v) && rec(depth + 1, I | bit(v), O)) return true;
        if (exclude_ok(c, I, O, v) && rec(depth + 1, I, O | bit(v))) return true;
        return false;
    };
    rec(0, 0, 0);
    return ok ? std::optional<std::uint64_t>(found) : std::nullopt;
}

// Independent pair-visibility used only by the oracle: memoized depth-first
// descent of the shortest-path DAG instead of the layered frontier sweep.
bool oracle_visible(const Graph& g, const DistanceMatrix& d, std::uint64_t blocked,
                    int u, int v) {
    if (!d.reachable(u, v)) return false;
    std::uint64_t dead = 0;
    std::function<bool(int)> descend = [&](int w) -> bool {
        if (w == v) return true;
        for (int s : g.neighbors(w).members()) {
            if (d(u, s) != d(u, w) + 1 || d(s, v) != d(w, v) - 1) continue;
            if (s != v && ((blocked >> s) & 1u) != 0) continue;
            if (((dead >> s) & 1u) != 0) continue;
            if (descend(s)) return true;
            dead |= bit(s);
        }
        return false;
    };
    return descend(u);
}

bool oracle_feasible(const Graph& g, const DistanceMatrix& d, std::uint64_t X,
                     VisibilityKind kind) {
    const int n = g.order();
    const std::uint64_t co = VertexSet::universe(n).bits() & ~X;
    auto in = [](std::uint64_t m, int v) { return ((m >> v) & 1u) != 0; };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool needed = false;
            switch (kind) {
                case VisibilityKind::mutual: needed = in(X, u) && in(X, v); break;
                case VisibilityKind::outer: needed = in(X, u) || in(X, v); break;
                case VisibilityKind::dual:
                    needed = (in(X, u) && in(X, v)) || (in(co, u) && in(co, v));
                    break;
                case VisibilityKind::total: needed = true; break;
            }
            if (!needed) continue;
            const std::uint64_t blocked = X & ~(bit(u) | bit(v));
            if (!oracle_visible(g, d, blocked, u, v)) return false;
        }
    return true;
}

}  // namespace

InvariantResult max_visibility_set(const Graph& g, VisibilityKind kind,
                                   const SolverOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    if (!is_connected(g))
        throw std::domain_error("max_visibility_set requires a connected graph");
    const int n = g.order();
    InvariantResult res;
    res.kind = kind;

    if (kind == VisibilityKind::dual && n <= 2) {
        // With at most one pair, every subset is feasible on both sides.
        res.value = n;
        res.witness = VertexSet::universe(n);
        res.elapsed = std::chrono::steady_clock::now() - t0;
        return res;
    }

    const VisibilityIndex idx(g);
    const Ctx c = make_ctx(idx, kind, !opts.use_distance_two_reduction);
    const std::vector<int> order = branch_order(g);
    std::vector<int> reversed(order.rbegin(), order.rend());
    int seed = std::max(greedy_seed(c, order), greedy_seed(c, reversed));
    if (opts.initial_lower_bound)
        seed = std::max(seed, *opts.initial_lower_bound);

    const bool parallel = opts.parallel > 1;
    PhaseOneResult phase1 =
        parallel ? search_parallel(c, order, seed, opts.node_limit, opts.parallel)
                 : search_serial(c, order, seed, opts.node_limit);
    res.value = phase1.best;
    res.nodes_explored = phase1.nodes;
    if (phase1.limited) {
        res.witness = VertexSet::from_bits(phase1.has_witness ? phase1.witness : 0);
        res.elapsed = std::chrono::steady_clock::now() - t0;
        throw NodeLimitError(res);
    }

    if (res.value == 0) {
        res.witness = VertexSet{};
    } else {
        std::uint64_t extra = 0;
        const std::optional<std::uint64_t> canon = lex_min_witness(c, res.value, extra);
        res.nodes_explored += extra;
        if (!canon) {
            if (opts.initial_lower_bound && *opts.initial_lower_bound == res.value)
                throw std::invalid_argument(
                    "initial_lower_bound exceeds the actual maximum");
            throw std::logic_error("no witness found at the computed optimum");
        }
        res.witness = VertexSet::from_bits(*canon);
    }
    res.elapsed = std::chrono::steady_clock::now() - t0;
    return res;
}

int brute_force_invariant(const Graph& g, VisibilityKind kind) {
    if (!is_connected(g))
        throw std::domain_error("brute_force_invariant requires a connected graph");
    const int n = g.order();
    if (n > 24)
        throw std::invalid_argument("brute_force_invariant: order above 24 is not supported");
    const DistanceMatrix d = all_pairs_distances(g);
    for (int size = n; size >= 1; --size) {
        // Gosper's hack walks the size-element subsets in increasing mask order.
        std::uint64_t m = (std::uint64_t{1} << size) - 1;
        const std::uint64_t last = m << (n - size);
        while (true) {
            if (oracle_feasible(g, d, m, kind)) return size;
            if (m == last) break;
            const std::uint64_t carry = m & (~m + 1);
            const std::uint64_t ripple = m + carry;
            m = (((ripple ^ m) >> 2) / carry) | ripple;
        }
    }
    return 0;
}

AllFour all_four(const Graph& g, const SolverOptions& opts) {
    AllFour out{max_visibility_set(g, VisibilityKind::mutual, opts),
                max_visibility_set(g, VisibilityKind::outer, opts),
                max_visibility_set(g, VisibilityKind::dual, opts),
                max_visibility_set(g, VisibilityKind::total, opts)};
    const int mu = out.mutual.value, muo = out.outer.value, mud = out.dual.value,
              mut = out.total.value;
    if (!(mut <= muo && muo <= mu && mut <= mud && mud <= mu))
        throw std::logic_error("containment chain violated: mu=" + std::to_string(mu) +
                               " muo=" + std::to_string(muo) + " mud=" +
                               std::to_string(mud) + " mut=" + std::to_string(mut));
    return out;
}

}  // namespace mutviz
