#include "mutviz/removal.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace mutviz {

namespace {

// Integer-exact comparisons for the fractional bounds.
BoundVerdict verdict(std::string formula, bool holds, bool conjecture = false) {
    return BoundVerdict{std::move(formula), holds, conjecture};
}

void fold(ExtremalStats& ex, const RemovalRecord& rec) {
    if (rec.ratio) {
        if (!ex.min_ratio || *rec.ratio < *ex.min_ratio) ex.min_ratio = rec.ratio;
        if (!ex.max_ratio || *rec.ratio > *ex.max_ratio) ex.max_ratio = rec.ratio;
    }
    if (!ex.min_diff || rec.diff < *ex.min_diff) ex.min_diff = rec.diff;
    if (!ex.max_diff || rec.diff > *ex.max_diff) ex.max_diff = rec.diff;
}

}  // namespace

std::vector<BoundVerdict> evaluate_edge_bounds(VisibilityKind kind, int base, int after) {
    std::vector<BoundVerdict> out;
    switch (kind) {
        case VisibilityKind::mutual:
            out.push_back(verdict("mu(G-e) >= 1/2*mu(G)", 2 * after >= base));
            out.push_back(verdict("mu(G-e) <= 2*mu(G)", after <= 2 * base));
            out.push_back(
                verdict("mu(G-e) >= 1/2*mu(G)+1", 2 * after >= base + 2, true));
            break;
        case VisibilityKind::outer:
            out.push_back(verdict("muo(G-e) >= 1/6*muo(G)", 6 * after >= base));
            out.push_back(verdict("muo(G-e) <= 2*muo(G)+1", after <= 2 * base + 1));
            break;
        case VisibilityKind::dual:
            // Unbounded in both directions; values are recorded without verdicts.
            break;
        case VisibilityKind::total:
            out.push_back(verdict("mut(G-e) <= mut(G)+2", after <= base + 2));
            break;
    }
    return out;
}

std::vector<BoundVerdict> evaluate_vertex_bounds(VisibilityKind kind, int base, int after,
                                                 int graph_diameter) {
    std::vector<BoundVerdict> out;
    if (kind == VisibilityKind::mutual) {
        out.push_back(verdict("mu(G-x) <= 2*mu(G)", after <= 2 * base));
        if (graph_diameter == 2)
            out.push_back(verdict("mu(G-x) <= mu(G) [diam 2]", after <= base));
    }
    return out;
}

RemovalReport edge_scan(const Graph& g, VisibilityKind kind, const SolverOptions& opts) {
    RemovalReport report;
    report.kind = kind;
    report.vertex_scan = false;
    report.base_value = max_visibility_set(g, kind, opts).value;

    const auto edges = g.edges();
    report.records.resize(edges.size());

    auto solve_one = [&](std::size_t i) {
        const auto [u, v] = edges[i];
        RemovalRecord rec;
        rec.element = std::to_string(u) + "-" + std::to_string(v);
        const Graph removed = remove_edge(g, u, v);
        if (!is_connected(removed)) {
            rec.skipped = true;
            rec.skip_reason = "bridge";
        } else {
            SolverOptions serial = opts;
            serial.parallel = 0;
            rec.after_value = max_visibility_set(removed, kind, serial).value;
            rec.diff = rec.after_value - report.base_value;
            if (report.base_value > 0)
                rec.ratio = static_cast<double>(rec.after_value) / report.base_value;
            rec.verdicts = evaluate_edge_bounds(kind, report.base_value, rec.after_value);
        }
        report.records[i] = std::move(rec);
    };

    if (opts.parallel > 1 && edges.size() > 1) {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < opts.parallel; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = cursor.fetch_add(1); i < edges.size();
                     i = cursor.fetch_add(1))
                    solve_one(i);
            });
        for (std::thread& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < edges.size(); ++i) solve_one(i);
    }

    for (const RemovalRecord& rec : report.records)
        if (!rec.skipped) fold(report.extremal, rec);
    return report;
}

RemovalReport vertex_scan(const Graph& g, VisibilityKind kind, const SolverOptions& opts,
                          std::optional<std::pair<double, double>> outer_probe_ab) {
    RemovalReport report;
    report.kind = kind;
    report.vertex_scan = true;
    report.base_value = max_visibility_set(g, kind, opts).value;
    const int diam = diameter(g);

    const int n = g.order();
    report.records.resize(static_cast<std::size_t>(n));

    auto solve_one = [&](std::size_t i) {
        const int x = static_cast<int>(i);
        RemovalRecord rec;
        rec.element = std::to_string(x);
        if (n == 1) {
            rec.skipped = true;
            rec.skip_reason = "cut vertex";
            report.records[i] = std::move(rec);
            return;
        }
        const VertexRemoval removed = remove_vertex(g, x);
        if (!is_connected(removed.graph)) {
            rec.skipped = true;
            rec.skip_reason = "cut vertex";
        } else {
            SolverOptions serial = opts;
            serial.parallel = 0;
            rec.after_value = max_visibility_set(removed.graph, kind, serial).value;
            rec.diff = rec.after_value - report.base_value;
            if (report.base_value > 0)
                rec.ratio = static_cast<double>(rec.after_value) / report.base_value;
            rec.verdicts =
                evaluate_vertex_bounds(kind, report.base_value, rec.after_value, diam);
        }
        report.records[i] = std::move(rec);
    };

    if (opts.parallel > 1 && n > 1) {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < opts.parallel; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = cursor.fetch_add(1);
                     i < static_cast<std::size_t>(n); i = cursor.fetch_add(1))
                    solve_one(i);
            });
        for (std::thread& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) solve_one(i);
    }

    for (const RemovalRecord& rec : report.records)
        if (!rec.skipped) fold(report.extremal, rec);

    if (kind == VisibilityKind::outer && outer_probe_ab) {
        OuterVertexProbe probe;
        probe.a = outer_probe_ab->first;
        probe.b = outer_probe_ab->second;
        bool any = false;
        for (const RemovalRecord& rec : report.records) {
            if (rec.skipped) continue;
            const double excess =
                rec.after_value - probe.a * report.base_value - probe.b;
            if (!any || excess > probe.max_excess) {
                probe.max_excess = excess;
                probe.argmax_element = rec.element;
                any = true;
            }
        }
        if (any) report.outer_probe = probe;
    }
    return report;
}

MudOneCheck check_mud_one_removal(const Graph& g, const SolverOptions& opts) {
    MudOneCheck out;
    const InvariantResult mud = max_visibility_set(g, VisibilityKind::dual, opts);
    out.mud_value = mud.value;
    if (mud.value != 1) {
        out.reason = "mud is " + std::to_string(mud.value) + ", not 1";
        return out;
    }
    const int x = mud.witness.lowest();
    out.removed_vertex = x;
    if (g.order() == 1) {
        out.reason = "removing the witness would empty the graph";
        return out;
    }
    const VertexRemoval removed = remove_vertex(g, x);
    if (!is_connected(removed.graph)) {
        out.reason = "witness is a cut vertex";
        return out;
    }
    out.applicable = true;
    out.total_after = max_visibility_set(removed.graph, VisibilityKind::total, opts).value;
    out.holds = (*out.total_after == 0);
    return out;
}

}  // namespace mutviz
