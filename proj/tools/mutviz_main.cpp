// mutviz: exact computation of the four mutual-visibility invariants.
//
// Subcommands: compute, family, scan-edges, scan-vertices, realize, census,
// verify.  Exit codes: 0 success, 1 verification failure, 2 usage or input
// error.  Default output is byte-deterministic; timings go to stderr.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mutviz/families.hpp"
#include "mutviz/io.hpp"
#include "mutviz/realizability.hpp"
#include "mutviz/removal.hpp"
#include "mutviz/solver.hpp"
#include "mutviz/verification.hpp"

namespace {

using namespace mutviz;

int env_parallel() {
    const char* s = std::getenv("MUTVIZ_PARALLEL");
    if (!s) return 0;
    int v = std::atoi(s);
    return v > 0 ? v : 0;
}

std::optional<GraphFormat> format_from_flag(const std::string& flag) {
    if (flag.empty()) return {};
    if (flag == "el") return GraphFormat::edge_list;
    if (flag == "g6") return GraphFormat::graph6;
    throw std::invalid_argument("unknown format: " + flag);
}

VisibilityKind parse_kind(const std::string& s) {
    auto k = kind_from_name(s);
    if (!k) throw std::invalid_argument("unknown kind: " + s);
    return *k;
}

struct ComputeArgs {
    std::string kind = "all";
    std::string input;
    std::string format;
    bool json = false;
    int parallel = env_parallel();
    std::uint64_t node_limit = 0;
};

void run_compute(const ComputeArgs& a) {
    GraphDocument doc = load_graph_document(a.input, format_from_flag(a.format));
    SolverOptions opts;
    opts.parallel = a.parallel;
    if (a.node_limit > 0) opts.node_limit = a.node_limit;

    std::vector<InvariantResult> results;
    if (a.kind == "all") {
        AllFour r = all_four(doc.graph, opts);
        results = {r.mutual, r.outer, r.dual, r.total};
    } else {
        results = {max_visibility_set(doc.graph, parse_kind(a.kind), opts)};
    }

    for (const auto& r : results)
        std::cerr << kind_name(r.kind) << ": " << r.nodes_explored << " nodes, "
                  << r.elapsed.count() << "s\n";

    if (a.json) {
        std::cout << invariant_results_json(results) << "\n";
        return;
    }
    if (a.kind == "all") {
        for (std::size_t i = 0; i < results.size(); ++i)
            std::cout << (i ? " " : "") << kind_name(results[i].kind) << "="
                      << results[i].value;
        std::cout << "\n";
    } else {
        const auto& r = results.front();
        std::cout << kind_name(r.kind) << "=" << r.value << "\n";
        std::cout << "witness:";
        for (int v : r.witness.members()) std::cout << " " << v;
        std::cout << "\n";
    }
}

struct FamilyArgs {
    std::string name;
    std::optional<int> k, n, p, q;
    std::vector<int> attach;
    std::string emit;
};

LabeledGraph build_family(const FamilyArgs& a) {
    auto need = [&](const std::optional<int>& v, const char* flag) {
        if (!v)
            throw std::invalid_argument("family " + a.name + " requires " + flag);
        return *v;
    };
    if (a.name == "path") return path(need(a.n, "--n"));
    if (a.name == "cycle") return cycle(need(a.n, "--n"));
    if (a.name == "complete") return complete(need(a.n, "--n"));
    if (a.name == "star") return star(need(a.p, "--p"));
    if (a.name == "subdivided_star") return subdivided_star(need(a.p, "--p"));
    if (a.name == "Hk") return h_k(need(a.k, "--k"));
    if (a.name == "Lk") return l_k(need(a.k, "--k"));
    if (a.name == "Fk") return f_k(need(a.k, "--k"));
    if (a.name == "J") return j_graph();
    if (a.name == "cycle_with_leaves") {
        if (a.attach.empty())
            throw std::invalid_argument("family cycle_with_leaves requires --attach");
        return cycle_with_leaves(need(a.n, "--n"), a.attach);
    }
    if (a.name == "cycle_plus") return cycle_plus(need(a.q, "--q"));
    if (a.name == "broom") return broom(need(a.p, "--p"), need(a.q, "--q"));
    throw std::invalid_argument("unknown family: " + a.name);
}

void run_family(const FamilyArgs& a) {
    LabeledGraph l = build_family(a);
    const Graph& g = l.graph;
    if (a.emit == "el") {
        std::cout << emit_edge_list(g);
        return;
    }
    if (a.emit == "g6") {
        std::cout << emit_graph6(g) << "\n";
        return;
    }
    std::cout << g.name() << ": order " << g.order() << "\n";
    std::cout << "vertices:";
    for (int v = 0; v < g.order(); ++v) std::cout << " " << l.label_of(v);
    std::cout << "\n";
    auto edges = g.edges();
    std::cout << "edges (" << edges.size() << "):\n";
    for (auto [u, v] : edges)
        std::cout << "  " << l.label_of(u) << "-" << l.label_of(v) << "\n";
}

struct ScanArgs {
    std::string kind;
    std::string input;
    std::string format;
    bool json = false;
    int parallel = env_parallel();
    std::optional<double> probe_a, probe_b;
};

void run_scan(const ScanArgs& a, bool vertices) {
    GraphDocument doc = load_graph_document(a.input, format_from_flag(a.format));
    SolverOptions opts;
    opts.parallel = a.parallel;

    RemovalReport report;
    if (vertices) {
        std::optional<std::pair<double, double>> probe;
        if (a.probe_a && a.probe_b) probe = {{*a.probe_a, *a.probe_b}};
        else if (a.probe_a || a.probe_b)
            throw std::invalid_argument("--probe-a and --probe-b go together");
        report = vertex_scan(doc.graph, parse_kind(a.kind), opts, probe);
    } else {
        report = edge_scan(doc.graph, parse_kind(a.kind), opts);
    }

    if (a.json)
        std::cout << removal_report_json(report) << "\n";
    else
        std::cout << removal_report_table(report);
}

struct RealizeArgs {
    std::string kind;
    int p = 0, q = 0;
    std::string emit = "el";
};

void run_realize(const RealizeArgs& a) {
    RealizabilityAnswer ans = is_realizable(parse_kind(a.kind), a.p, a.q);
    if (!ans.realizable) {
        std::cout << "not realizable\n";
        return;
    }
    std::cout << "realizable\n";
    if (!ans.witness) return;
    const Graph& g = ans.witness->graph;
    std::cout << "witness: " << g.name() << ", order " << g.order() << "\n";
    if (a.emit == "g6")
        std::cout << emit_graph6(g) << "\n";
    else
        std::cout << emit_edge_list(g);
}

struct CensusArgs {
    int q = 0;
    std::string out;
};

void run_census(const CensusArgs& a) {
    std::ofstream file;
    std::ostream* sink = &std::cout;
    if (!a.out.empty()) {
        file.open(a.out);
        if (!file) throw std::runtime_error("cannot open " + a.out);
        sink = &file;
    }
    int count = 0;
    enumerate_connected_graphs(a.q, [&](const Graph& g) {
        *sink << emit_graph6(g) << "\n";
        ++count;
    });
    std::cerr << count << " connected graphs of order " << a.q << "\n";
}

struct VerifyArgs {
    bool include_long = false;
    int parallel = env_parallel();
};

int run_verify(const VerifyArgs& a) {
    VerificationOptions opts;
    opts.include_long = a.include_long;
    opts.parallel = a.parallel;
    opts.on_result = [](const CriterionResult& r) {
        char head[16];
        std::snprintf(head, sizeof head, "[%2d] ", r.id);
        std::string name = r.name;
        if (name.size() < 28) name.resize(28, ' ');
        std::cout << head << name << " "
                  << (r.skipped ? "SKIP" : r.passed ? "PASS" : "FAIL") << "\n";
        if (!r.detail.empty()) std::cout << "     " << r.detail << "\n";
        std::cout.flush();
        std::cerr << "criterion " << r.id << ": " << r.seconds << "s\n";
    };
    auto results = run_verification(opts);
    int failures = 0;
    for (const auto& r : results)
        if (!r.passed) ++failures;
    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " of " << results.size() << " criteria failed\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact mutual-visibility invariants: compute, scan, realize"};
    app.require_subcommand(1);

    ComputeArgs compute_args;
    auto* compute = app.add_subcommand("compute", "solve invariants on a graph file");
    compute->add_option("--kind", compute_args.kind, "mu|muo|mud|mut|all")
        ->check(CLI::IsMember({"mu", "muo", "mud", "mut", "all"}));
    compute->add_option("--input", compute_args.input, "graph file")->required();
    compute->add_option("--format", compute_args.format, "el|g6 (default: by extension)")
        ->check(CLI::IsMember({"el", "g6"}));
    compute->add_flag("--json", compute_args.json, "JSON output");
    compute->add_option("--parallel", compute_args.parallel, "worker threads (0 = serial)");
    compute->add_option("--node-limit", compute_args.node_limit, "abort after N search nodes");

    FamilyArgs family_args;
    auto* family = app.add_subcommand("family", "construct a named graph family");
    family->add_option("name", family_args.name, "family name")->required();
    family->add_option("--k", family_args.k, "family size parameter");
    family->add_option("--n", family_args.n, "order parameter");
    family->add_option("--p", family_args.p, "leaf / first parameter");
    family->add_option("--q", family_args.q, "order / second parameter");
    family->add_option("--attach", family_args.attach, "leaf positions (1-based)")
        ->delimiter(',');
    family->add_option("--emit", family_args.emit, "el|g6 (default: labeled listing)")
        ->check(CLI::IsMember({"el", "g6"}));

    ScanArgs edge_args;
    auto* scan_edges = app.add_subcommand("scan-edges", "invariant after each edge removal");
    scan_edges->add_option("--kind", edge_args.kind, "mu|muo|mud|mut")->required()
        ->check(CLI::IsMember({"mu", "muo", "mud", "mut"}));
    scan_edges->add_option("--input", edge_args.input, "graph file")->required();
    scan_edges->add_option("--format", edge_args.format, "el|g6")
        ->check(CLI::IsMember({"el", "g6"}));
    scan_edges->add_flag("--json", edge_args.json, "JSON output");
    scan_edges->add_option("--parallel", edge_args.parallel, "worker threads");

    ScanArgs vertex_args;
    auto* scan_vertices =
        app.add_subcommand("scan-vertices", "invariant after each vertex removal");
    scan_vertices->add_option("--kind", vertex_args.kind, "mu|muo|mud|mut")->required()
        ->check(CLI::IsMember({"mu", "muo", "mud", "mut"}));
    scan_vertices->add_option("--input", vertex_args.input, "graph file")->required();
    scan_vertices->add_option("--format", vertex_args.format, "el|g6")
        ->check(CLI::IsMember({"el", "g6"}));
    scan_vertices->add_flag("--json", vertex_args.json, "JSON output");
    scan_vertices->add_option("--parallel", vertex_args.parallel, "worker threads");
    scan_vertices->add_option("--probe-a", vertex_args.probe_a,
                              "outer probe: report max muo(G-x) - a*muo(G) - b");
    scan_vertices->add_option("--probe-b", vertex_args.probe_b, "outer probe offset");

    RealizeArgs realize_args;
    auto* realize = app.add_subcommand("realize", "is (p, q) attained as (invariant, order)?");
    realize->add_option("--kind", realize_args.kind, "mu|muo|mud|mut")->required()
        ->check(CLI::IsMember({"mu", "muo", "mud", "mut"}));
    realize->add_option("--p", realize_args.p, "target invariant value")->required();
    realize->add_option("--q", realize_args.q, "target order")->required();
    realize->add_option("--emit", realize_args.emit, "witness format, el|g6")
        ->check(CLI::IsMember({"el", "g6"}));

    CensusArgs census_args;
    auto* census = app.add_subcommand("census", "connected graphs of order q, one per class");
    census->add_option("--q", census_args.q, "order, at most 7")->required();
    census->add_option("--out", census_args.out, "output file (default: stdout)");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the acceptance suite");
    verify->add_flag("--long", verify_args.include_long, "include the long-running checks");
    verify->add_option("--parallel", verify_args.parallel, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) run_compute(compute_args);
        if (family->parsed()) run_family(family_args);
        if (scan_edges->parsed()) run_scan(edge_args, false);
        if (scan_vertices->parsed()) run_scan(vertex_args, true);
        if (realize->parsed()) run_realize(realize_args);
        if (census->parsed()) run_census(census_args);
        if (verify->parsed()) return run_verify(verify_args);
    } catch (const NodeLimitError& e) {
        std::cerr << "error: " << e.what() << " (best lower bound "
                  << e.best_so_far().value << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
