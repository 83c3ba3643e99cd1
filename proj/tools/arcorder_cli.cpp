// arcorder command-line interface.
//
// Exit status: 0 pass/found, 1 fail/not-found, 2 usage or input error, 3 budget refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "arcorder/arcorder.hpp"

namespace {

using namespace arcorder;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;
constexpr int exit_budget = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
}

Bigraph load_graph(const std::string& path, const std::string& format)
{
    const auto text = read_file(path);
    try {
        return format == "edgelist" ? parse_edgelist(text) : parse_graph(text);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

template <typename F>
auto with_path(const std::string& path, F&& parse)
{
    try {
        return parse(read_file(path));
    } catch (const InputError& e) {
        if (std::string(e.what()).rfind(path, 0) == 0) throw;
        throw InputError(path + ": " + e.what());
    }
}

std::vector<std::string> split_csv(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) out.push_back(item);
    return out;
}

std::vector<int> int_list(const std::string& s, const std::string& flag)
{
    std::vector<int> out;
    if (s.empty()) return out;
    for (const auto& item : split_csv(s)) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError(flag + ": '" + item + "' is not an integer");
        }
    }
    return out;
}

struct SpecFlags {
    std::string family;
    std::string sizes;
    std::string random;      // nx,ny,p
    std::string model;       // n[,m]
    std::string exhaustive;  // max_n or nx,ny
    std::uint64_t seed = 0;
    std::size_t count = 1;

    void attach(CLI::App* cmd)
    {
        cmd->add_option("--family", family, "named family (complete, path, even-cycle, star, matching, fig1, fig2)");
        cmd->add_option("--sizes", sizes, "comma-separated family sizes");
        cmd->add_option("--random", random, "random bigraph: nx,ny,p");
        cmd->add_option("--model", model, "random arc model: n[,m] (m defaults to 2n)");
        cmd->add_option("--exhaustive", exhaustive, "every labelled bigraph: max_n, or nx,ny");
        cmd->add_option("--seed", seed, "seed for random corpora");
        cmd->add_option("--count", count, "number of random instances");
    }

    GeneratorSpec build() const
    {
        const int chosen = !family.empty() + !random.empty() + !model.empty() + !exhaustive.empty();
        if (chosen != 1) throw InputError("choose exactly one of --family, --random, --model, --exhaustive");
        GeneratorSpec spec;
        spec.seed = seed;
        spec.count = count;
        if (!family.empty()) {
            spec.kind = GeneratorSpec::Kind::family;
            spec.family = family;
            spec.sizes = int_list(sizes, "--sizes");
        } else if (!exhaustive.empty()) {
            spec.kind = GeneratorSpec::Kind::exhaustive;
            spec.sizes = int_list(exhaustive, "--exhaustive");
        } else if (!random.empty()) {
            auto parts = split_csv(random);
            if (parts.size() != 3) throw InputError("--random expects nx,ny,p");
            auto ints = int_list(parts[0] + "," + parts[1], "--random");
            spec.kind = GeneratorSpec::Kind::random_graph;
            spec.nx = ints[0];
            spec.ny = ints[1];
            try {
                spec.p = std::stod(parts[2]);
            } catch (const std::exception&) {
                throw InputError("--random: '" + parts[2] + "' is not a probability");
            }
        } else {
            auto ints = int_list(model, "--model");
            if (ints.empty() || ints.size() > 2) throw InputError("--model expects n[,m]");
            spec.kind = GeneratorSpec::Kind::random_model;
            spec.n = ints[0];
            spec.m = ints.size() == 2 ? ints[1] : 0;
        }
        spec.validate();
        return spec;
    }
};

std::size_t parse_limit(const std::string& s)
{
    if (s == "all") return all_matches;
    auto v = int_list(s, "--limit");
    if (v.size() != 1 || v[0] < 1) throw InputError("--limit expects a positive count or 'all'");
    return static_cast<std::size_t>(v[0]);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Recognize and certify circular-arc bigraphs through vertex orderings"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tool_version));

    std::string graph_path, ordering_path, model_path, cert_path, out_path;
    std::string method_name = "total";
    std::string format = "canonical";
    std::string limit = "1";
    std::size_t budget = 10;
    unsigned threads = 1;
    bool no_interval = false;
    SpecFlags spec_flags;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "graph encoding")->check(CLI::IsMember({"canonical", "edgelist"}));
    };
    auto add_method = [&](CLI::App* cmd) {
        cmd->add_option("--method", method_name, "total|bicirc|pattern|interval3|interval4")
            ->check(CLI::IsMember({"total", "bicirc", "pattern", "interval3", "interval4"}));
    };

    auto* check_cmd = app.add_subcommand("check", "check one ordering against a characterization");
    check_cmd->add_option("graph", graph_path, "graph file")->required();
    check_cmd->add_option("ordering", ordering_path, "ordering file")->required();
    add_method(check_cmd);
    add_format(check_cmd);
    check_cmd->add_option("--limit", limit, "number of pattern witnesses to report, or 'all'");

    auto* model_cmd = app.add_subcommand("model", "build and verify the canonical arc model of an ordering");
    model_cmd->add_option("graph", graph_path, "graph file")->required();
    model_cmd->add_option("ordering", ordering_path, "ordering file")->required();
    add_method(model_cmd);
    add_format(model_cmd);
    model_cmd->add_option("--out", out_path, "write the model document here");

    auto* recognize_cmd = app.add_subcommand("recognize", "search all orderings for a certificate");
    recognize_cmd->add_option("graph", graph_path, "graph file")->required();
    add_method(recognize_cmd);
    add_format(recognize_cmd);
    recognize_cmd->add_option("--budget", budget, "largest vertex count searched");
    recognize_cmd->add_option("--threads", threads, "worker threads");
    recognize_cmd->add_option("--out", out_path, "write the certificate here");

    auto* crossval_cmd = app.add_subcommand("crossval", "cross-validate the characterizations over a corpus");
    spec_flags.attach(crossval_cmd);
    crossval_cmd->add_option("--budget", budget, "largest vertex count searched");
    crossval_cmd->add_option("--threads", threads, "worker threads");
    crossval_cmd->add_flag("--no-interval", no_interval, "skip the interval-bigraph methods");

    auto* gen_cmd = app.add_subcommand("gen", "generate a graph document");
    spec_flags.attach(gen_cmd);
    add_format(gen_cmd);
    gen_cmd->add_option("--out", out_path, "output file (default standard output)");

    auto* render_cmd = app.add_subcommand("render", "draw an arc model as SVG");
    render_cmd->add_option("model", model_path, "model file")->required();
    render_cmd->add_option("graph", graph_path, "graph file (colours vertices by side)");
    add_format(render_cmd);
    render_cmd->add_option("--out", out_path, "output file (default standard output)");

    auto* replay_cmd = app.add_subcommand("replay", "re-verify a certificate from its serialized form");
    replay_cmd->add_option("graph", graph_path, "graph file")->required();
    replay_cmd->add_option("certificate", cert_path, "certificate file")->required();
    add_format(replay_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "compare an arc model's intersection bigraph with a graph");
    verify_cmd->add_option("graph", graph_path, "graph file")->required();
    verify_cmd->add_option("model", model_path, "model file")->required();
    add_format(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_input;
    }

    try {
        const Method method = parse_method(method_name);

        if (*check_cmd) {
            auto g = load_graph(graph_path, format);
            auto ord = with_path(ordering_path, [&](const std::string& t) { return parse_ordering(t, g); });
            auto report = check_report(g, ord, method, parse_limit(limit));
            std::cout << dump(report);
            return report["verdict"] == "pass" ? exit_pass : exit_fail;
        }

        if (*model_cmd) {
            if (!is_circular_arc_method(method)) throw InputError("model needs --method total, bicirc or pattern");
            auto g = load_graph(graph_path, format);
            auto ord = with_path(ordering_path, [&](const std::string& t) { return parse_ordering(t, g); });
            auto realized = realize(g, ord, method);
            std::cout << dump(model_report(g, ord, method, realized));
            if (const auto* cert = std::get_if<Certificate>(&realized)) {
                if (!out_path.empty()) write_file(out_path, emit_model(*cert->model));
                return exit_pass;
            }
            if (std::holds_alternative<TheoremDiscrepancy>(realized))
                std::cerr << "THEOREM DISCREPANCY: the checker accepted the ordering but the canonical model fails\n";
            return exit_fail;
        }

        if (*recognize_cmd) {
            auto g = load_graph(graph_path, format);
            SearchOptions opts{budget, threads};
            RecognizeResult result;
            try {
                result = recognize(g, method, opts);
            } catch (const BudgetExceeded& e) {
                std::cerr << "refused: " << e.what() << "\n";
                return exit_budget;
            }
            std::cout << dump(recognize_report(g, result, opts));
            if (result.status == RecognizeResult::Status::discrepancy)
                std::cerr << "THEOREM DISCREPANCY: see the witness in the report\n";
            if (result.certificate && !out_path.empty()) write_file(out_path, dump(certificate_to_json(g, *result.certificate)));
            return result.status == RecognizeResult::Status::found ? exit_pass : exit_fail;
        }

        if (*crossval_cmd) {
            auto spec = spec_flags.build();
            CrossOptions opts{{budget, threads}, !no_interval};
            SweepAggregate agg;
            try {
                agg = sweep(spec, opts, [](std::size_t i, const CrossReport& r) {
                    std::cout << cross_report_to_json(r, i).dump() << "\n";
                });
            } catch (const BudgetExceeded& e) {
                std::cerr << "refused: " << e.what() << "\n";
                return exit_budget;
            }
            std::cout << sweep_summary_to_json(agg, spec, opts).dump() << "\n";
            return agg.agreement() ? exit_pass : exit_fail;
        }

        if (*gen_cmd) {
            auto spec = spec_flags.build();
            if (spec.kind == GeneratorSpec::Kind::exhaustive) throw InputError("gen emits one graph; use crossval for corpora");
            spec.count = 1;
            const auto g = generate_corpus(spec).front();
            const auto text = format == "edgelist" ? emit_edgelist(g) : emit_graph(g);
            if (out_path.empty()) std::cout << text;
            else write_file(out_path, text);
            return exit_pass;
        }

        if (*render_cmd) {
            auto model = with_path(model_path, [](const std::string& t) { return parse_model(t); });
            std::optional<std::vector<Side>> sides;
            if (!graph_path.empty()) {
                auto g = load_graph(graph_path, format);
                std::vector<Side> s;
                for (const auto& name : model.names()) s.push_back(g.side(g.index_of(name)));
                sides = std::move(s);
            }
            const auto svg = render_svg(model, sides);
            if (out_path.empty()) std::cout << svg;
            else write_file(out_path, svg);
            return exit_pass;
        }

        if (*replay_cmd) {
            auto g = load_graph(graph_path, format);
            auto cert = with_path(cert_path, [&](const std::string& t) { return certificate_from_json(detail::parse_json(t), g); });
            auto result = replay_certificate(g, cert);
            Json j = report_header("replay");
            j["method"] = to_string(cert.method);
            j["verdict"] = result.pass ? "pass" : "fail";
            if (!result.pass) j["witness"] = Json{{"kind", "replay-failure"}, {"reason", result.reason}};
            j["counters"] = Json{{"vertices", g.size()}, {"edges", g.edge_count()}};
            j["input"] = Json{{"graph_hash", fingerprint_hex(g)}};
            std::cout << dump(j);
            return result.pass ? exit_pass : exit_fail;
        }

        if (*verify_cmd) {
            auto g = load_graph(graph_path, format);
            auto model = with_path(model_path, [](const std::string& t) { return parse_model(t); });
            auto result = verify_model(g, model);
            Json j = report_header("verify");
            j["verdict"] = result.pass ? "pass" : "fail";
            if (!result.pass) j["witness"] = Json{{"kind", "model-mismatch"}, {"mismatches", mismatches_to_json(g, result.mismatches)}};
            j["counters"] = Json{{"vertices", g.size()}, {"edges", g.edge_count()}, {"mismatches", result.mismatches.size()}};
            j["input"] = Json{{"graph_hash", fingerprint_hex(g)}, {"clock", model.clock_size()}};
            std::cout << dump(j);
            return result.pass ? exit_pass : exit_fail;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return exit_budget;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
