#include "boolnet/cli.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolnet/builtins.hpp"
#include "boolnet/core.hpp"
#include "boolnet/interaction_graph.hpp"
#include "boolnet/iteration_graph.hpp"
#include "boolnet/markov.hpp"
#include "boolnet/prng.hpp"
#include "boolnet/search.hpp"
#include "boolnet/stats.hpp"

namespace boolnet {

namespace {

using nlohmann::json;

Norm parse_norm(const std::string& name) {
    if (name == "l1") return Norm::L1;
    if (name == "l2") return Norm::L2;
    if (name == "linf") return Norm::LInf;
    throw std::invalid_argument("norm must be one of l1, l2, linf");
}

StartVector parse_start(const std::string& name) {
    if (name == "basis") return StartVector::Basis;
    if (name == "paper") return StartVector::ScaledBasis;
    throw std::invalid_argument("start vector must be 'basis' or 'paper'");
}

void require_report_format(const std::string& format) {
    if (format != "text" && format != "csv" && format != "jsonl")
        throw std::invalid_argument("--format must be text, csv or jsonl");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open '" + path + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

// Routes primary output to --out when given, else to the session stream.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) throw std::invalid_argument("cannot open '" + path + "' for writing");
            stream_ = file_.get();
        } else {
            stream_ = &fallback;
        }
    }
    std::ostream& stream() { return *stream_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* stream_ = nullptr;
};

struct AnalyzeOptions {
    std::string function;
    double tol = 1e-4;
    std::string norm = "l2";
    std::string start = "basis";
    std::string format = "text";
    std::string out_path;
    std::string emit_adjacency;
    std::string emit_markov;
    std::string emit_graph;
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out) {
    require_report_format(opt.format);
    const BooleanMap f = load_map(opt.function);
    const IterationGraph graph = build_iteration_graph(f);
    const bool chaotic = strongly_connected(graph);
    const bool doubly = is_doubly_stochastic(graph);
    const bool regular = is_regular(graph);

    std::string b_text = "n/a";
    if (regular) {
        MixingOptions mix;
        mix.tolerance = opt.tol;
        mix.norm = parse_norm(opt.norm);
        mix.start = parse_start(opt.start);
        b_text = std::to_string(mixing_time(TransitionMatrix::from_graph(graph), mix));
    }

    if (!opt.emit_adjacency.empty())
        write_file(opt.emit_adjacency, format_adjacency(unlabeled_adjacency(graph)));
    if (!opt.emit_markov.empty())
        write_file(opt.emit_markov, TransitionMatrix::from_graph(graph).format_rational());
    if (!opt.emit_graph.empty())
        write_file(opt.emit_graph, build_interaction_graph(f).format());

    OutputTarget target(opt.out_path, out);
    std::ostream& os = target.stream();
    const auto bool_text = [](bool v) { return v ? "true" : "false"; };
    if (opt.format == "csv") {
        os << "function,n,chaotic,doubly_stochastic,regular,b\n"
           << opt.function << ',' << f.n() << ',' << bool_text(chaotic) << ','
           << bool_text(doubly) << ',' << bool_text(regular) << ',' << b_text << '\n';
    } else if (opt.format == "jsonl") {
        json j{{"function", opt.function}, {"n", f.n()},       {"chaotic", chaotic},
               {"doubly_stochastic", doubly}, {"regular", regular}};
        if (regular)
            j["b"] = std::stoi(b_text);
        else
            j["b"] = nullptr;
        os << j.dump() << '\n';
    } else {
        os << "function: " << opt.function << '\n'
           << "n: " << f.n() << '\n'
           << "chaotic: " << bool_text(chaotic) << '\n'
           << "doubly_stochastic: " << bool_text(doubly) << '\n'
           << "regular: " << bool_text(regular) << '\n'
           << "b: " << b_text << '\n';
    }
    return 0;
}

struct ConditionsOptions {
    std::string graph_path;
    std::string function;
    int vertex_count = 0;
    std::string emit_graph;
    std::string out_path;
};

int cmd_check_conditions(const ConditionsOptions& opt, std::ostream& out) {
    SignedDigraph g = opt.graph_path.empty()
                          ? build_interaction_graph(load_map(opt.function))
                          : SignedDigraph::parse(read_file(opt.graph_path), opt.vertex_count);
    if (!opt.emit_graph.empty()) write_file(opt.emit_graph, g.format());

    const ConnectivityConditions conditions = connectivity_conditions(g);

    OutputTarget target(opt.out_path, out);
    std::ostream& os = target.stream();
    const auto bool_text = [](bool v) { return v ? "true" : "false"; };
    os << "vertices: " << g.n() << '\n'
       << "no_cycle_length_ge2: " << bool_text(conditions.cycle_free) << '\n'
       << "positive_loops_negatively_covered: " << bool_text(conditions.positive_loops_covered)
       << '\n'
       << "reachable_from_negative_loops: " << bool_text(conditions.negative_loops_reach_all)
       << '\n'
       << "sufficient conditions: " << (conditions.all() ? "satisfied" : "not satisfied")
       << '\n';
    return 0;
}

struct SearchOptions {
    int n = 4;
    double rate = 0.5;
    std::uint64_t seed = 0;
    int max_attempts = 1000;
    std::string out_path;
};

int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
    SearchParams params;
    params.n = opt.n;
    params.target_removal_rate = opt.rate;
    params.rng_seed = opt.seed;
    params.max_attempts = opt.max_attempts;
    const SearchResult result = generate_chaotic_map(params);
    OutputTarget target(opt.out_path, out);
    target.stream() << result.map.format() << '\n';
    err << "removed " << result.removed_arcs << '/' << result.initial_arcs
        << " arcs; target rate " << (result.rate_reached ? "reached" : "not reached")
        << '\n';
    return 0;
}

struct EnumerateOptions {
    std::string graph_path;
    int vertex_count = 0;
    bool equal = false;
    bool doubly_stochastic = false;
    bool dedup = false;
    std::uint64_t limit = 0;
    std::string out_path;
};

int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
    const SignedDigraph target =
        SignedDigraph::parse(read_file(opt.graph_path), opt.vertex_count);
    CompatibleMapEnumerator enumerator(target, opt.equal);
    OutputTarget out_target(opt.out_path, out);

    // Dedup needs the whole collection; otherwise stream results as found.
    std::vector<BooleanMap> collected;
    std::uint64_t found = 0;
    while (auto f = enumerator.next()) {
        if (opt.doubly_stochastic && !induces_doubly_stochastic_chain(*f)) continue;
        if (opt.dedup)
            collected.push_back(std::move(*f));
        else
            out_target.stream() << f->format() << '\n';
        if (opt.limit && ++found >= opt.limit) break;
    }
    if (opt.dedup) {
        collected = dedupe_by_relabeling(collected, target);
        for (const BooleanMap& f : collected) out_target.stream() << f.format() << '\n';
        found = collected.size();
    }
    err << found << " function(s)\n";
    return 0;
}

struct MixingOptionsCli {
    std::string function;
    double tol = 1e-4;
    std::string norm = "l2";
    std::string start = "basis";
    std::string format = "text";
    std::string out_path;
};

int cmd_mixing_time(const MixingOptionsCli& opt, std::ostream& out) {
    require_report_format(opt.format);
    const BooleanMap f = load_map(opt.function);
    MixingOptions mix;
    mix.tolerance = opt.tol;
    mix.norm = parse_norm(opt.norm);
    mix.start = parse_start(opt.start);
    const int b = mixing_time(TransitionMatrix::from_graph(build_iteration_graph(f)), mix);
    OutputTarget target(opt.out_path, out);
    std::ostream& os = target.stream();
    if (opt.format == "csv") {
        os << "function,b,norm,start\n"
           << opt.function << ',' << b << ',' << opt.norm << ',' << opt.start << '\n';
    } else if (opt.format == "jsonl") {
        os << json{{"function", opt.function}, {"b", b}, {"norm", opt.norm},
                   {"start", opt.start}}
                  .dump()
           << '\n';
    } else {
        os << "b: " << b << '\n';
    }
    return 0;
}

struct GenOptions {
    std::string function;
    int b = 0;
    std::uint32_t seed = 0;
    std::uint32_t seed2 = 0;
    bool shared_rng = false;
    std::string x0;
    std::uint64_t nbits = 0;
    std::string format = "ascii01";
    std::string out_path;
};

Configuration parse_x0(const std::string& text, int n) {
    if (text.empty()) return Configuration(n, 0);
    if (static_cast<int>(text.size()) != n)
        throw std::invalid_argument("--x0 must have exactly " + std::to_string(n) + " bits");
    std::uint32_t bits = 0;
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("--x0 must be a bit string");
        bits = (bits << 1) | static_cast<std::uint32_t>(c - '0');
    }
    return Configuration(n, bits);
}

int cmd_gen(const GenOptions& opt, std::ostream& out) {
    const BooleanMap f = load_map(opt.function);
    GeneratorConfig config{f,
                           opt.b,
                           parse_x0(opt.x0, f.n()),
                           opt.seed,
                           opt.seed2 ? opt.seed2 : derive_strategy_seed(opt.seed),
                           opt.shared_rng};
    ChaoticGenerator generator(std::move(config));
    const std::vector<std::uint8_t> bits = generator.bitstream(opt.nbits);

    std::string payload;
    if (opt.format == "ascii01") {
        payload = BitSequence(bits).to_ascii();
    } else if (opt.format == "binary") {
        payload.assign((bits.size() + 7) / 8, '\0');
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i]) payload[i / 8] |= static_cast<char>(0x80u >> (i % 8));
    } else {
        throw std::invalid_argument("--format must be ascii01 or binary");
    }
    OutputTarget target(opt.out_path, out);
    target.stream().write(payload.data(), static_cast<std::streamsize>(payload.size()));
    return 0;
}

struct TestOptions {
    std::string in_path;
    std::string function;
    int b = 0;
    std::uint32_t seed = 0;
    std::string x0;
    std::uint64_t nbits = 1000000;
    double alpha = 0.01;
    int block_length = 128;
    int serial_m = 2;
    int entropy_m = 2;
    std::string format = "text";
    std::string out_path;
};

int cmd_test(const TestOptions& opt, std::ostream& out) {
    require_report_format(opt.format);
    BitSequence bits;
    if (!opt.in_path.empty()) {
        bits = BitSequence::parse_ascii(read_file(opt.in_path));
    } else {
        const BooleanMap f = load_map(opt.function);
        ChaoticGenerator generator(f, opt.b, parse_x0(opt.x0, f.n()), opt.seed);
        bits = BitSequence(generator.bitstream(opt.nbits));
    }
    TestParams params;
    params.alpha = opt.alpha;
    params.block_length = opt.block_length;
    params.serial_m = opt.serial_m;
    params.entropy_m = opt.entropy_m;
    const std::vector<TestReport> reports = run_battery(bits, params);

    OutputTarget target(opt.out_path, out);
    std::ostream& os = target.stream();
    std::size_t passed = 0;
    for (const TestReport& r : reports)
        if (r.pass) ++passed;
    if (opt.format == "csv") {
        os << reports_csv(reports);
    } else if (opt.format == "jsonl") {
        for (const TestReport& r : reports) {
            json j{{"test", r.name}, {"params", r.params}, {"pass", r.pass}};
            j["p_values"] = r.p_values;
            if (!r.error.empty()) j["error"] = r.error;
            os << j.dump() << '\n';
        }
    } else {
        for (const TestReport& r : reports) {
            os << r.name << ": ";
            if (!r.error.empty()) {
                os << r.error;
            } else {
                os << "p=";
                for (std::size_t i = 0; i < r.p_values.size(); ++i) {
                    if (i) os << ';';
                    char buf[32];
                    std::snprintf(buf, sizeof buf, "%.6g", r.p_values[i]);
                    os << buf;
                }
            }
            os << ' ' << (r.pass ? "PASS" : "FAIL") << '\n';
        }
        os << "passed " << passed << '/' << reports.size() << " at alpha=" << opt.alpha
           << '\n';
    }
    return passed == reports.size() ? 0 : 1;
}

struct DotOptions {
    std::string function;
    std::string graph_path;
    int vertex_count = 0;
    std::string what = "iteration";
    std::string out_path;
};

int cmd_export_dot(const DotOptions& opt, std::ostream& out) {
    std::string dot;
    if (!opt.graph_path.empty()) {
        dot = SignedDigraph::parse(read_file(opt.graph_path), opt.vertex_count).to_dot();
    } else if (opt.what == "iteration") {
        dot = to_dot(build_iteration_graph(load_map(opt.function)));
    } else if (opt.what == "interaction") {
        dot = build_interaction_graph(load_map(opt.function)).to_dot();
    } else {
        throw std::invalid_argument("--what must be 'iteration' or 'interaction'");
    }
    OutputTarget target(opt.out_path, out);
    target.stream() << dot;
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boolean network chaos toolkit: builds maps whose asynchronous\n"
                 "iterations are chaotic, analyzes the induced Markov chains, and\n"
                 "uses them as a pseudo-random bit generator with a built-in\n"
                 "statistical test battery. Builtin functions F1..F16 are 4-bit\n"
                 "maps with doubly stochastic chains."};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    auto* analyze_cmd = app.add_subcommand(
        "analyze", "Report chaoticity, double stochasticity, regularity and mixing time");
    analyze_cmd->add_option("--function", analyze.function, "Builtin name (F1..F16) or truth-table file")
        ->required();
    analyze_cmd->add_option("--tol", analyze.tol, "Mixing tolerance")->capture_default_str();
    analyze_cmd->add_option("--norm", analyze.norm, "Deviation norm: l1, l2, linf")
        ->capture_default_str();
    analyze_cmd->add_option("--start", analyze.start, "Start vectors: basis, paper")
        ->capture_default_str();
    analyze_cmd->add_option("--format", analyze.format, "Output format: text, csv, jsonl")
        ->capture_default_str();
    analyze_cmd->add_option("--out", analyze.out_path, "Write the report to a file");
    analyze_cmd->add_option("--emit-adjacency", analyze.emit_adjacency,
                            "Write the 0/1 adjacency matrix to a file");
    analyze_cmd->add_option("--emit-markov", analyze.emit_markov,
                            "Write the transition matrix (p/q entries) to a file");
    analyze_cmd->add_option("--emit-graph", analyze.emit_graph,
                            "Write the interaction graph (\"j s i\" lines) to a file");

    ConditionsOptions conditions;
    auto* conditions_cmd = app.add_subcommand(
        "check-conditions", "Check the interaction-graph conditions that force chaos");
    conditions_cmd->add_option("--graph", conditions.graph_path,
                               "Interaction graph file (\"j s i\" lines)");
    conditions_cmd->add_option("--function", conditions.function,
                               "Compute the interaction graph of this map instead");
    conditions_cmd->add_option("--n", conditions.vertex_count,
                               "Vertex count when the graph file has isolated vertices");
    conditions_cmd->add_option("--emit-graph", conditions.emit_graph,
                               "Write the parsed/computed graph back out");
    conditions_cmd->add_option("--out", conditions.out_path, "Write the report to a file");

    SearchOptions search;
    auto* search_cmd = app.add_subcommand(
        "search", "Generate a chaotic map by random arc removal from the negation graph");
    search_cmd->add_option("--n", search.n, "Component count")->required();
    search_cmd->add_option("--rate", search.rate, "Target fraction of removed arcs, in [0,1)")
        ->capture_default_str();
    search_cmd->add_option("--seed", search.seed, "Search RNG seed")->capture_default_str();
    search_cmd->add_option("--max-attempts", search.max_attempts,
                           "Consecutive rejected removals before stopping")
        ->capture_default_str();
    search_cmd->add_option("--out", search.out_path, "Write the truth table to a file");

    EnumerateOptions enumerate;
    auto* enumerate_cmd = app.add_subcommand(
        "enumerate", "List maps compatible with a target interaction graph (n <= 4)");
    enumerate_cmd->add_option("--graph", enumerate.graph_path, "Target interaction graph file")
        ->required();
    enumerate_cmd->add_option("--n", enumerate.vertex_count, "Vertex count override");
    enumerate_cmd->add_flag("--equal", enumerate.equal,
                            "Require the interaction graph to equal the target exactly");
    enumerate_cmd->add_flag("--doubly-stochastic", enumerate.doubly_stochastic,
                            "Keep only maps with doubly stochastic chains");
    enumerate_cmd->add_flag("--dedup", enumerate.dedup,
                            "Quotient by component relabelings that fix the target graph");
    enumerate_cmd->add_option("--limit", enumerate.limit, "Stop after this many maps (0 = all)")
        ->capture_default_str();
    enumerate_cmd->add_option("--out", enumerate.out_path, "Write truth tables to a file");

    MixingOptionsCli mixing;
    auto* mixing_cmd =
        app.add_subcommand("mixing-time", "Iterations until every start is within --tol of stationary");
    mixing_cmd->add_option("--function", mixing.function, "Builtin name or truth-table file")
        ->required();
    mixing_cmd->add_option("--tol", mixing.tol, "Deviation tolerance")->capture_default_str();
    mixing_cmd->add_option("--norm", mixing.norm, "Deviation norm: l1, l2, linf")
        ->capture_default_str();
    mixing_cmd->add_option("--start", mixing.start, "Start vectors: basis, paper")
        ->capture_default_str();
    mixing_cmd->add_option("--format", mixing.format, "Output format: text, csv, jsonl")
        ->capture_default_str();
    mixing_cmd->add_option("--out", mixing.out_path, "Write the report to a file");

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate pseudo-random bits from a chaotic map");
    gen_cmd->add_option("--function", gen.function, "Builtin name or truth-table file")
        ->required();
    gen_cmd->add_option("--b", gen.b, "Iteration parameter; each output takes b+1..2b+1 updates")
        ->required();
    gen_cmd->add_option("--seed", gen.seed, "Nonzero 32-bit seed")->required();
    gen_cmd->add_option("--seed2", gen.seed2,
                        "Nonzero 32-bit seed of the component RNG (default: derived)");
    gen_cmd->add_flag("--shared-rng", gen.shared_rng,
                      "Draw lengths and components from a single RNG instance");
    gen_cmd->add_option("--x0", gen.x0, "Initial configuration bits (default: all zeros)");
    gen_cmd->add_option("--nbits", gen.nbits, "Number of bits to emit")->required();
    gen_cmd->add_option("--format", gen.format, "Output format: ascii01, binary")
        ->capture_default_str();
    gen_cmd->add_option("--out", gen.out_path, "Write the stream to a file");

    TestOptions test;
    auto* test_cmd =
        app.add_subcommand("test", "Run the statistical battery on a bitstream");
    test_cmd->add_option("--in", test.in_path, "ASCII '0'/'1' bitstream file");
    test_cmd->add_option("--function", test.function, "Generate the stream from this map");
    test_cmd->add_option("--b", test.b, "Iteration parameter for generation");
    test_cmd->add_option("--seed", test.seed, "Seed for generation");
    test_cmd->add_option("--x0", test.x0, "Initial configuration for generation");
    test_cmd->add_option("--nbits", test.nbits, "Stream length for generation")
        ->capture_default_str();
    test_cmd->add_option("--alpha", test.alpha, "Significance level")->capture_default_str();
    test_cmd->add_option("--block-size", test.block_length, "Block frequency block length")
        ->capture_default_str();
    test_cmd->add_option("--serial-m", test.serial_m, "Serial pattern length")
        ->capture_default_str();
    test_cmd->add_option("--entropy-m", test.entropy_m, "Approximate entropy pattern length")
        ->capture_default_str();
    test_cmd->add_option("--format", test.format, "Output format: text, csv, jsonl")
        ->capture_default_str();
    test_cmd->add_option("--out", test.out_path, "Write the report to a file");

    DotOptions dot;
    auto* dot_cmd = app.add_subcommand("export-dot", "Write a graph in DOT format");
    dot_cmd->add_option("--function", dot.function, "Builtin name or truth-table file");
    dot_cmd->add_option("--graph", dot.graph_path, "Interaction graph file to convert");
    dot_cmd->add_option("--n", dot.vertex_count, "Vertex count override for --graph");
    dot_cmd->add_option("--what", dot.what, "Graph to export: iteration, interaction")
        ->capture_default_str();
    dot_cmd->add_option("--out", dot.out_path, "Write the DOT text to a file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (analyze_cmd->parsed()) return cmd_analyze(analyze, out);
        if (conditions_cmd->parsed()) {
            if (conditions.graph_path.empty() == conditions.function.empty())
                throw std::invalid_argument("check-conditions needs exactly one of --graph, --function");
            return cmd_check_conditions(conditions, out);
        }
        if (search_cmd->parsed()) return cmd_search(search, out, err);
        if (enumerate_cmd->parsed()) return cmd_enumerate(enumerate, out, err);
        if (mixing_cmd->parsed()) return cmd_mixing_time(mixing, out);
        if (gen_cmd->parsed()) return cmd_gen(gen, out);
        if (test_cmd->parsed()) {
            if (test.in_path.empty() && test.function.empty())
                throw std::invalid_argument("test needs --in or --function");
            return cmd_test(test, out);
        }
        if (dot_cmd->parsed()) {
            if (dot.graph_path.empty() && dot.function.empty())
                throw std::invalid_argument("export-dot needs --function or --graph");
            return cmd_export_dot(dot, out);
        }
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace boolnet
