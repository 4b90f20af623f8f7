#include "mutviz/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mutviz {

namespace {

int parse_int(std::string_view token, const char* context) {
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw std::invalid_argument(std::string(context) + ": bad integer '" +
                                    std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::optional<int> declared_order;
    std::vector<std::pair<int, int>> edges;
    int max_index = -1;
    bool first_content = true;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::vector<std::string_view> tokens = split_ws(line);
        if (tokens.empty()) continue;

        if (first_content && tokens.size() == 2 && tokens[0] == "n") {
            declared_order = parse_int(tokens[1], "edge list header");
            if (*declared_order < 1 || *declared_order > kMaxVertices)
                throw std::invalid_argument("edge list header: order out of range");
            first_content = false;
            continue;
        }
        first_content = false;

        if (tokens.size() != 2)
            throw std::invalid_argument("edge list: expected 'u v', got '" +
                                        std::string(line) + "'");
        const int u = parse_int(tokens[0], "edge list");
        const int v = parse_int(tokens[1], "edge list");
        if (u < 0 || v < 0)
            throw std::invalid_argument("edge list: negative vertex index");
        if (u == v)
            throw std::invalid_argument("edge list: loop at " + std::to_string(u));
        max_index = std::max({max_index, u, v});
        edges.emplace_back(u, v);
    }

    const int order = declared_order.value_or(max_index + 1);
    if (order < 1)
        throw std::invalid_argument("edge list: no vertices (empty input needs a header)");
    if (max_index >= order)
        throw std::invalid_argument("edge list: vertex " + std::to_string(max_index) +
                                    " outside declared order " + std::to_string(order));
    Graph g(order);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw std::invalid_argument("graph6: empty input");

    const unsigned char head = static_cast<unsigned char>(line[0]);
    if (head == 126)
        throw std::invalid_argument("graph6: extended order form is not supported");
    if (head < 63 || head > 125)
        throw std::invalid_argument("graph6: bad order byte");
    const int n = head - 63;
    if (n < 1)
        throw std::invalid_argument("graph6: order 0 is not supported");

    const int bit_count = n * (n - 1) / 2;
    const int payload = (bit_count + 5) / 6;
    if (static_cast<int>(line.size()) - 1 < payload)
        throw std::invalid_argument("graph6: truncated bit payload");
    if (static_cast<int>(line.size()) - 1 > payload)
        throw std::invalid_argument("graph6: trailing characters");

    Graph g(n);
    int t = 0;
    for (int byte = 0; byte < payload; ++byte) {
        const unsigned char c = static_cast<unsigned char>(line[static_cast<std::size_t>(byte) + 1]);
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: payload byte out of range");
        const int group = c - 63;
        for (int b = 5; b >= 0 && t < bit_count; --b, ++t) {
            if ((group >> b) & 1) {
                // Bit t covers the pair (i, j) in column-major upper-triangle order.
                int j = 1;
                while ((j + 1) * j / 2 <= t) ++j;
                const int i = t - j * (j - 1) / 2;
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > 62)
        throw std::invalid_argument("graph6: orders above 62 are not supported");
    std::string out(1, static_cast<char>(n + 63));
    int group = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

GraphDocument load_graph_document(const std::string& path,
                                  std::optional<GraphFormat> format) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    GraphDocument doc{Graph(1), GraphFormat::edge_list, buffer.str()};
    const bool g6 = format ? *format == GraphFormat::graph6
                           : path.size() >= 3 && path.substr(path.size() - 3) == ".g6";
    doc.source_format = g6 ? GraphFormat::graph6 : GraphFormat::edge_list;
    doc.graph = g6 ? parse_graph6(doc.original_text) : parse_edge_list(doc.original_text);
    return doc;
}

namespace {

nlohmann::ordered_json witness_json(const VertexSet& witness) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int v : witness.members()) arr.push_back(v);
    return arr;
}

}  // namespace

std::string invariant_results_json(const std::vector<InvariantResult>& results,
                                   const std::vector<std::string>* labels) {
    nlohmann::ordered_json doc;
    doc["schema"] = "mutviz/1";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const InvariantResult& r : results) {
        nlohmann::ordered_json item;
        item["kind"] = std::string(kind_name(r.kind));
        item["value"] = r.value;
        item["witness"] = witness_json(r.witness);
        if (labels != nullptr) {
            nlohmann::ordered_json named = nlohmann::ordered_json::array();
            for (int v : r.witness.members())
                named.push_back((*labels)[static_cast<std::size_t>(v)]);
            item["witness_labels"] = named;
        }
        item["nodes"] = r.nodes_explored;
        arr.push_back(std::move(item));
    }
    doc["results"] = std::move(arr);
    return doc.dump(2) + "\n";
}

std::string removal_report_json(const RemovalReport& report) {
    nlohmann::ordered_json doc;
    doc["schema"] = "mutviz/1";
    doc["scan"] = report.vertex_scan ? "vertices" : "edges";
    doc["kind"] = std::string(kind_name(report.kind));
    doc["base"] = report.base_value;
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (const RemovalRecord& rec : report.records) {
        nlohmann::ordered_json item;
        item["element"] = rec.element;
        item["skipped"] = rec.skipped;
        if (rec.skipped) {
            item["reason"] = rec.skip_reason;
        } else {
            item["after"] = rec.after_value;
            item["ratio"] = rec.ratio ? nlohmann::ordered_json(*rec.ratio)
                                      : nlohmann::ordered_json(nullptr);
            item["diff"] = rec.diff;
            nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
            for (const BoundVerdict& v : rec.verdicts) {
                nlohmann::ordered_json vj;
                vj["bound"] = v.bound;
                vj["holds"] = v.holds;
                vj["conjecture"] = v.conjecture;
                verdicts.push_back(std::move(vj));
            }
            item["verdicts"] = std::move(verdicts);
        }
        records.push_back(std::move(item));
    }
    doc["records"] = std::move(records);
    nlohmann::ordered_json ex;
    ex["min_ratio"] = report.extremal.min_ratio
                          ? nlohmann::ordered_json(*report.extremal.min_ratio)
                          : nlohmann::ordered_json(nullptr);
    ex["max_ratio"] = report.extremal.max_ratio
                          ? nlohmann::ordered_json(*report.extremal.max_ratio)
                          : nlohmann::ordered_json(nullptr);
    ex["min_diff"] = report.extremal.min_diff
                         ? nlohmann::ordered_json(*report.extremal.min_diff)
                         : nlohmann::ordered_json(nullptr);
    ex["max_diff"] = report.extremal.max_diff
                         ? nlohmann::ordered_json(*report.extremal.max_diff)
                         : nlohmann::ordered_json(nullptr);
    doc["extremal"] = std::move(ex);
    if (report.outer_probe) {
        nlohmann::ordered_json probe;
        probe["a"] = report.outer_probe->a;
        probe["b"] = report.outer_probe->b;
        probe["max_excess"] = report.outer_probe->max_excess;
        probe["argmax"] = report.outer_probe->argmax_element;
        doc["outer_probe"] = std::move(probe);
    }
    return doc.dump(2) + "\n";
}

std::string removal_report_table(const RemovalReport& report) {
    const std::string inv(kind_name(report.kind));
    const std::string gone = report.vertex_scan ? "G-x" : "G-e";
    std::ostringstream out;
    out << inv << "(" << gone << ") scan, base " << inv << "(G) = "
        << report.base_value << "\n";

    std::vector<std::string> bounds;
    for (const RemovalRecord& rec : report.records)
        if (!rec.skipped) {
            for (const BoundVerdict& v : rec.verdicts)
                bounds.push_back(v.bound + (v.conjecture ? " (conj)" : ""));
            break;
        }

    std::vector<std::vector<std::string>> rows;
    rows.push_back({"element", "after", "ratio", "diff"});
    for (const std::string& b : bounds) rows.back().push_back(b);
    for (const RemovalRecord& rec : report.records) {
        std::vector<std::string> row{rec.element};
        if (rec.skipped) {
            row.push_back("skipped: " + rec.skip_reason);
        } else {
            row.push_back(std::to_string(rec.after_value));
            if (rec.ratio) {
                std::ostringstream r;
                r.setf(std::ios::fixed);
                r.precision(3);
                r << *rec.ratio;
                row.push_back(r.str());
            } else {
                row.push_back("undef");
            }
            row.push_back(std::to_string(rec.diff));
            for (const BoundVerdict& v : rec.verdicts)
                row.push_back(v.holds ? "ok" : v.conjecture ? "refuted" : "VIOLATED");
        }
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> width;
    for (const std::vector<std::string>& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    for (const std::vector<std::string>& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << "  ";
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(width[i] - row[i].size(), ' ');
        }
        out << "\n";
    }

    out << "extremal: ratio [";
    auto num = [](std::optional<double> v) -> std::string {
        if (!v) return "undef";
        std::ostringstream s;
        s.setf(std::ios::fixed);
        s.precision(3);
        s << *v;
        return s.str();
    };
    out << num(report.extremal.min_ratio) << ", " << num(report.extremal.max_ratio)
        << "], diff [";
    out << (report.extremal.min_diff ? std::to_string(*report.extremal.min_diff)
                                     : std::string("undef"))
        << ", "
        << (report.extremal.max_diff ? std::to_string(*report.extremal.max_diff)
                                     : std::string("undef"))
        << "]\n";
    if (report.outer_probe) {
        out << "outer probe: max(muo(G-x) - " << report.outer_probe->a << "*muo(G) - "
            << report.outer_probe->b << ") = " << report.outer_probe->max_excess
            << " at " << report.outer_probe->argmax_element << "\n";
    }
    return out.str();
}

}  // namespace mutviz
