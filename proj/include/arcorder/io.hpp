#pragma once

// Document formats. The canonical encoding is JSON with insertion-ordered keys, two-space
// indentation and a trailing newline; the edge-list text form is an importer convenience.
//
//   graph:     {"x": [...], "y": [...], "edges": [[x, y], ...]}
//   ordering:  {"ordering": [...]}
//   model:     {"clock": m, "arcs": {"name": [start, end], ...}}
//   edge list: "X: a b c" / "Y: d e" header lines, then one "u v" pair per line; '#' comments

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "arcorder/checkers.hpp"
#include "arcorder/construction.hpp"
#include "arcorder/core.hpp"
#include "arcorder/generators.hpp"
#include "arcorder/recognizer.hpp"

namespace arcorder {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view tool_name = "arcorder";
inline constexpr std::string_view tool_version = "1.0.0";

/// Syntax or content error in a document, with a 1-based line number when known.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line_no = 0)
        : InputError(line_no ? "line " + std::to_string(line_no) + ": " + what : what), line(line_no)
    {
    }

    std::size_t line;
};

namespace detail {

inline void write_pretty(std::string& out, const Json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        std::size_t i = 0;
        for (const auto& [k, v] : j.items()) {
            out += pad + Json(k).dump() + ": ";
            write_pretty(out, v, indent + 2);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
        return;
    }
    const bool flat = j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); });
    if (j.is_array() && !flat) {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out += pad;
            write_pretty(out, j[i], indent + 2);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
        return;
    }
    if (flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
        out += "]";
        return;
    }
    out += j.dump();
}

}  // namespace detail

/// Canonical text form: two-space indentation, scalar lists kept on one line, trailing newline.
inline std::string dump(const Json& j)
{
    std::string out;
    detail::write_pretty(out, j, 0);
    return out + "\n";
}

namespace detail {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

inline Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), line_of_offset(text, e.byte));
    }
}

inline const Json& member(const Json& j, const char* key, std::string_view doc)
{
    if (!j.is_object()) throw ParseError(std::string(doc) + " document must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string(doc) + " document lacks key \"" + key + "\"");
    return *it;
}

inline std::vector<std::string> name_list(const Json& j, std::string_view where)
{
    if (!j.is_array()) throw ParseError(std::string(where) + " must be a list of names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_string()) throw ParseError(std::string(where) + "[" + std::to_string(i) + "] is not a string");
        out.push_back(j[i].get<std::string>());
    }
    return out;
}

inline Json names_json(const Bigraph& g, const std::vector<PlacedVertex>& vs)
{
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(Json{{"vertex", g.name(v.vertex)}, {"position", v.position}});
    return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graphs

inline Json graph_to_json(const Bigraph& g)
{
    Json xs = Json::array(), ys = Json::array(), edges = Json::array();
    for (VertexIndex v = 0; v < g.size(); ++v) (g.side(v) == Side::X ? xs : ys).push_back(g.name(v));
    for (auto x : g.vertices_on(Side::X))
        for (auto y : g.vertices_on(Side::Y))
            if (g.adjacent(x, y)) edges.push_back(Json::array({g.name(x), g.name(y)}));
    return Json{{"x", xs}, {"y", ys}, {"edges", edges}};
}

inline Bigraph graph_from_json(const Json& j)
{
    auto xs = detail::name_list(detail::member(j, "x", "graph"), "x");
    auto ys = detail::name_list(detail::member(j, "y", "graph"), "y");
    const auto& edges = detail::member(j, "edges", "graph");
    if (!edges.is_array()) throw ParseError("edges must be a list of [x, y] pairs");

    Bigraph bare;
    try {
        bare = Bigraph::from_names(xs, ys, {});
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ParseError(where + " must be a pair of names");
        auto a = e[0].get<std::string>(), b = e[1].get<std::string>();
        for (const auto& name : {a, b})
            if (!bare.find(name)) throw ParseError(where + " references undeclared vertex '" + name + "'");
        if (bare.side(bare.index_of(a)) != Side::X || bare.side(bare.index_of(b)) != Side::Y)
            throw ParseError(where + " must list an x vertex then a y vertex");
        pairs.emplace_back(std::move(a), std::move(b));
    }
    try {
        return Bigraph::from_names(xs, ys, pairs);
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

inline std::string emit_graph(const Bigraph& g) { return dump(graph_to_json(g)); }

inline Bigraph parse_graph(std::string_view text) { return graph_from_json(detail::parse_json(text)); }

inline std::string emit_edgelist(const Bigraph& g)
{
    std::string out = "X:";
    for (auto v : g.vertices_on(Side::X)) out += " " + g.name(v);
    out += "\nY:";
    for (auto v : g.vertices_on(Side::Y)) out += " " + g.name(v);
    out += "\n";
    for (auto x : g.vertices_on(Side::X))
        for (auto y : g.vertices_on(Side::Y))
            if (g.adjacent(x, y)) out += g.name(x) + " " + g.name(y) + "\n";
    return out;
}

inline Bigraph parse_edgelist(std::string_view text)
{
    std::vector<std::string> xs, ys;
    bool have_x = false, have_y = false;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::size_t> edge_lines;

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) tokens.push_back(w);
        if (tokens.empty()) continue;
        if (tokens[0] == "X:" || tokens[0] == "Y:") {
            bool& seen = tokens[0] == "X:" ? have_x : have_y;
            if (seen) throw ParseError("repeated " + tokens[0] + " header", line_no);
            if (!edges.empty()) throw ParseError("side headers must precede edges", line_no);
            seen = true;
            auto& names = tokens[0] == "X:" ? xs : ys;
            names.assign(tokens.begin() + 1, tokens.end());
            continue;
        }
        if (tokens.size() != 2) throw ParseError("expected an edge 'u v', got " + std::to_string(tokens.size()) + " tokens", line_no);
        if (!have_x || !have_y) throw ParseError("edge before both X: and Y: headers", line_no);
        edges.emplace_back(tokens[0], tokens[1]);
        edge_lines.push_back(line_no);
    }
    if (!have_x || !have_y) throw ParseError("missing X: or Y: header");

    Bigraph bare;
    try {
        bare = Bigraph::from_names(xs, ys, {});
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
    std::vector<std::pair<std::string, std::string>> oriented;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        for (const auto& name : {a, b})
            if (!bare.find(name)) throw ParseError("edge references undeclared vertex '" + name + "'", edge_lines[i]);
        if (bare.side(bare.index_of(a)) == Side::Y) std::swap(a, b);
        if (bare.side(bare.index_of(a)) != Side::X || bare.side(bare.index_of(b)) != Side::Y)
            throw ParseError("edge '" + a + " " + b + "' joins two vertices on the same side", edge_lines[i]);
        for (std::size_t k = 0; k < oriented.size(); ++k)
            if (oriented[k] == std::make_pair(a, b)) throw ParseError("duplicate edge '" + a + " " + b + "'", edge_lines[i]);
        oriented.emplace_back(std::move(a), std::move(b));
    }
    return Bigraph::from_names(xs, ys, oriented);
}

// ---------------------------------------------------------------------------
// Orderings and models

inline Json ordering_to_json(const Bigraph& g, const CircularOrdering& ord)
{
    return Json{{"ordering", ord.names(g)}};
}

inline std::vector<std::string> ordering_names_from_json(const Json& j)
{
    return detail::name_list(detail::member(j, "ordering", "ordering"), "ordering");
}

inline CircularOrdering ordering_from_json(const Json& j, const Bigraph& g)
{
    auto names = ordering_names_from_json(j);
    for (std::size_t i = 0; i < names.size(); ++i)
        if (!g.find(names[i])) throw ParseError("ordering[" + std::to_string(i) + "] names unknown vertex '" + names[i] + "'");
    try {
        return CircularOrdering::from_names(g, names);
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

inline std::string emit_ordering(const Bigraph& g, const CircularOrdering& ord) { return dump(ordering_to_json(g, ord)); }

inline CircularOrdering parse_ordering(std::string_view text, const Bigraph& g)
{
    return ordering_from_json(detail::parse_json(text), g);
}

inline Json model_to_json(const ArcModel& model)
{
    Json arcs = Json::object();
    for (std::size_t i = 0; i < model.size(); ++i)
        arcs[model.names()[i]] = Json::array({model.arc(i).start, model.arc(i).end});
    return Json{{"clock", model.clock_size()}, {"arcs", arcs}};
}

inline ArcModel model_from_json(const Json& j)
{
    const auto& clock = detail::member(j, "clock", "model");
    if (!clock.is_number_integer() || clock.get<long long>() < 1) throw ParseError("clock must be a positive integer");
    const int m = clock.get<int>();
    const auto& arcs = detail::member(j, "arcs", "model");
    if (!arcs.is_object()) throw ParseError("arcs must map vertex names to [start, end]");
    std::vector<std::string> names;
    std::vector<Arc> out;
    for (const auto& [name, a] : arcs.items()) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
            throw ParseError("arc of '" + name + "' must be [start, end]");
        try {
            out.push_back(make_arc(a[0].get<int>(), a[1].get<int>(), m));
        } catch (const InputError& e) {
            throw ParseError("arc of '" + name + "': " + e.what());
        }
        names.push_back(name);
    }
    return ArcModel(m, std::move(names), std::move(out));
}

inline std::string emit_model(const ArcModel& model) { return dump(model_to_json(model)); }

inline ArcModel parse_model(std::string_view text) { return model_from_json(detail::parse_json(text)); }

// ---------------------------------------------------------------------------
// Witnesses, runs, certificates

inline Json witness_to_json(const Bigraph& g, const Witness& w)
{
    Json j{{"kind", to_string(w.kind)}};
    if (w.pattern) j["pattern"] = to_string(*w.pattern);
    j["vertices"] = detail::names_json(g, w.vertices);
    if (w.kind == WitnessKind::edge_violation) {
        j["x_branch_blockers"] = detail::names_json(g, w.x_branch_blockers);
        j["y_branch_blockers"] = detail::names_json(g, w.y_branch_blockers);
    }
    return j;
}

/// W-run table in position order.
inline Json w_runs_to_json(const Bigraph& g, const CircularOrdering& ord, const std::vector<WRun>& runs)
{
    Json table = Json::array();
    for (auto v : ord.sequence()) {
        Json cells = Json::array();
        for (auto c : runs[v].cells) cells.push_back(g.name(c));
        table.push_back(Json{{"owner", g.name(v)}, {"position", ord.position(v)}, {"run", cells}});
    }
    return table;
}

inline Json mismatches_to_json(const Bigraph& g, const std::vector<Mismatch>& ms)
{
    Json a = Json::array();
    for (const auto& m : ms) a.push_back(Json{{"x", g.name(m.x)}, {"y", g.name(m.y)}, {"kind", to_string(m.kind)}});
    return a;
}

inline Json certificate_to_json(const Bigraph& g, const Certificate& c)
{
    Json j{{"method", to_string(c.method)}, {"graph_hash", c.graph_hash}, {"ordering", c.ordering.names(g)}};
    j["model"] = c.model ? model_to_json(*c.model) : Json(nullptr);
    return j;
}

inline Certificate certificate_from_json(const Json& j, const Bigraph& g)
{
    Certificate c;
    const auto& method = detail::member(j, "method", "certificate");
    if (!method.is_string()) throw ParseError("certificate method must be a string");
    try {
        c.method = parse_method(method.get<std::string>());
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
    const auto& hash = detail::member(j, "graph_hash", "certificate");
    if (!hash.is_string()) throw ParseError("graph_hash must be a string");
    c.graph_hash = hash.get<std::string>();
    c.ordering = ordering_from_json(j, g);
    if (auto it = j.find("model"); it != j.end() && !it->is_null()) c.model = model_from_json(*it);
    return c;
}

inline Json discrepancy_to_json(const TheoremDiscrepancy& d)
{
    return Json{{"kind", "theorem-discrepancy"},
                {"method", to_string(d.method)},
                {"graph", graph_to_json(d.graph)},
                {"ordering", d.ordering.names(d.graph)},
                {"model", model_to_json(d.model)},
                {"mismatches", mismatches_to_json(d.graph, d.mismatches)}};
}

// ---------------------------------------------------------------------------
// Reports

inline Json report_header(std::string_view command)
{
    return Json{{"tool", Json{{"name", tool_name}, {"version", tool_version}}}, {"command", command}};
}

/// Report of `check`: the method's verdict on one ordering; bicirc adds the W-run table.
inline Json check_report(const Bigraph& g, const CircularOrdering& ord, Method method, std::size_t limit)
{
    Json j = report_header("check");
    j["method"] = to_string(method);
    PositionView view(g, ord);
    std::vector<Witness> witnesses;
    if (method == Method::pattern) {
        witnesses = find_ca_patterns(view, limit);
    } else if (method == Method::interval3 || method == Method::interval4) {
        witnesses = find_interval_patterns(view, method == Method::interval3 ? IntervalVariant::triple : IntervalVariant::quad, limit);
    } else if (auto v = check(view, method); !v.pass) {
        witnesses.push_back(*v.witness);
    }
    j["verdict"] = witnesses.empty() ? "pass" : "fail";
    if (!witnesses.empty()) {
        j["witness"] = witness_to_json(g, witnesses.front());
        if (witnesses.size() > 1) {
            Json more = Json::array();
            for (std::size_t i = 1; i < witnesses.size(); ++i) more.push_back(witness_to_json(g, witnesses[i]));
            j["additional_witnesses"] = more;
        }
    }
    if (method == Method::bicirc) j["w_runs"] = w_runs_to_json(g, ord, compute_w_runs(g, ord));
    j["counters"] = Json{{"vertices", g.size()}, {"edges", g.edge_count()}, {"witnesses", witnesses.size()}};
    j["input"] = Json{{"graph_hash", fingerprint_hex(g)}, {"ordering", ord.names(g)}, {"limit", limit == all_matches ? Json("all") : Json(limit)}};
    return j;
}

/// Report of `model`: realization of one ordering by the canonical arc model.
inline Json model_report(const Bigraph& g, const CircularOrdering& ord, Method method, const Realization& r)
{
    Json j = report_header("model");
    j["method"] = to_string(method);
    if (const auto* cert = std::get_if<Certificate>(&r)) {
        j["verdict"] = "pass";
        j["certificate"] = certificate_to_json(g, *cert);
    } else if (const auto* rej = std::get_if<CheckerRejected>(&r)) {
        j["verdict"] = "fail";
        j["witness"] = witness_to_json(g, *rej->verdict.witness);
    } else {
        j["verdict"] = "fail";
        j["witness"] = discrepancy_to_json(std::get<TheoremDiscrepancy>(r));
    }
    j["counters"] = Json{{"vertices", g.size()}, {"edges", g.edge_count()}};
    j["input"] = Json{{"graph_hash", fingerprint_hex(g)}, {"ordering", ord.names(g)}};
    return j;
}

inline Json recognize_body(const Bigraph& g, const RecognizeResult& r)
{
    Json j{{"method", to_string(r.method)}, {"status", to_string(r.status)}};
    j["verdict"] = r.status == RecognizeResult::Status::found ? "pass" : "fail";
    if (r.certificate) j["certificate"] = certificate_to_json(g, *r.certificate);
    if (r.status == RecognizeResult::Status::not_found)
        j["witness"] = Json{{"kind", "non-membership"}, {"statement", r.statement}};
    if (r.discrepancy) j["witness"] = discrepancy_to_json(*r.discrepancy);
    j["counters"] = Json{{"search_space", r.search_space},
                         {"candidates_examined", r.candidates_examined},
                         {"enumeration", r.mode == EnumerationMode::rotation_fixed ? "rotation-fixed" : "all-linear"}};
    j["statement"] = r.statement;
    return j;
}

inline Json recognize_report(const Bigraph& g, const RecognizeResult& r, const SearchOptions& opts)
{
    Json j = report_header("recognize");
    const Json body = recognize_body(g, r);
    for (const auto& [k, v] : body.items()) j[k] = v;
    j["input"] = Json{{"graph_hash", fingerprint_hex(g)}, {"budget", opts.budget}};
    return j;
}

inline Json cross_report_to_json(const CrossReport& r, std::size_t index)
{
    Json j = report_header("crossval");
    j["index"] = index;
    j["verdict"] = r.agreement ? "pass" : "fail";
    Json methods = Json::array();
    for (const auto& o : r.outcomes) {
        Json m{{"method", to_string(o.method)}, {"status", to_string(o.status)}, {"candidates_examined", o.candidates_examined}};
        if (o.certificate) m["ordering"] = o.certificate->ordering.names(r.graph);
        if (o.discrepancy) m["discrepancy"] = discrepancy_to_json(*o.discrepancy);
        methods.push_back(m);
    }
    j["methods"] = methods;
    if (!r.agreement) {
        Json rows = Json::array();
        for (const auto& c : r.counterexamples)
            rows.push_back(Json{{"kind", to_string(c.kind)},
                                {"methods", Json::array({to_string(c.first), to_string(c.second)})},
                                {"exists", Json::array({c.first_exists, c.second_exists})}});
        j["witness"] = Json{{"kind", "cross-disagreement"}, {"graph", graph_to_json(r.graph)}, {"counterexamples", rows}};
    }
    j["counters"] = Json{{"rotations_checked", r.rotations_checked}, {"rotations_failing", r.rotations_failing}};
    j["input"] = Json{{"graph_hash", r.graph_hash}, {"vertices", r.graph.size()}, {"edges", r.graph.edge_count()}};
    return j;
}

inline Json generator_spec_to_json(const GeneratorSpec& spec)
{
    switch (spec.kind) {
    case GeneratorSpec::Kind::family: return Json{{"kind", "family"}, {"family", spec.family}, {"sizes", spec.sizes}};
    case GeneratorSpec::Kind::exhaustive: return Json{{"kind", "exhaustive"}, {"sizes", spec.sizes}};
    case GeneratorSpec::Kind::random_graph:
        return Json{{"kind", "random-graph"}, {"nx", spec.nx}, {"ny", spec.ny}, {"p", spec.p},
                    {"seed", spec.seed}, {"count", spec.count}, {"scheme", random_scheme}};
    case GeneratorSpec::Kind::random_model:
        return Json{{"kind", "random-model"}, {"n", spec.n}, {"m", spec.m == 0 ? 2 * spec.n : spec.m},
                    {"seed", spec.seed}, {"count", spec.count}, {"scheme", random_scheme}};
    }
    return Json::object();
}

inline Json sweep_summary_to_json(const SweepAggregate& agg, const GeneratorSpec& spec, const CrossOptions& opts)
{
    Json j = report_header("sweep");
    j["verdict"] = agg.agreement() ? "pass" : "fail";
    if (!agg.agreement())
        j["witness"] = Json{{"kind", "cross-disagreement"}, {"counterexamples", agg.counterexamples},
                            {"discrepancies", agg.discrepancies}};
    Json exists = Json::object();
    for (const auto& [m, c] : agg.exists_counts) exists[std::string(to_string(m))] = c;
    j["counters"] = Json{{"graphs", agg.graphs},
                         {"agreeing", agg.agreeing},
                         {"counterexamples", agg.counterexamples},
                         {"discrepancies", agg.discrepancies},
                         {"exists", exists},
                         {"rotation_sensitive_graphs", agg.rotation_sensitive_graphs},
                         {"rotations_checked", agg.rotations_checked},
                         {"rotations_failing", agg.rotations_failing}};
    j["input"] = Json{{"spec", generator_spec_to_json(spec)}, {"budget", opts.search.budget},
                      {"interval", opts.include_interval}};
    return j;
}

}  // namespace arcorder
