// Acceptance suite: one line per criterion, nonzero exit when any fails.
// The optional --long flag adds the full-period walk of the 32-bit
// shift-xor generator (a few seconds of extra runtime).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "boolnet/builtins.hpp"
#include "boolnet/markov.hpp"
#include "boolnet/prng.hpp"
#include "boolnet/search.hpp"
#include "boolnet/stats.hpp"
#include "oracles.hpp"

using namespace boolnet;

namespace {

int g_failures = 0;

class Criterion {
public:
    explicit Criterion(int number, std::string title)
        : number_(number), title_(std::move(title)),
          start_(std::chrono::steady_clock::now()) {}

    void expect(bool ok, const std::string& detail) {
        if (!ok) {
            ok_ = false;
            if (!detail.empty()) details_.push_back(detail);
        }
    }

    void note(const std::string& text) { notes_.push_back(text); }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

    ~Criterion() {
        const double elapsed = seconds();
        std::printf("[%s] criterion %2d: %s (%.2fs)", ok_ ? "PASS" : "FAIL", number_,
                    title_.c_str(), elapsed);
        for (const std::string& n : notes_) std::printf(" | %s", n.c_str());
        std::printf("\n");
        for (const std::string& d : details_) std::printf("       - %s\n", d.c_str());
        if (!ok_) ++g_failures;
    }

private:
    int number_;
    std::string title_;
    std::chrono::steady_clock::time_point start_;
    bool ok_ = true;
    std::vector<std::string> notes_;
    std::vector<std::string> details_;
};

const std::vector<int> kExpectedB{206, 94, 69, 56, 48, 86, 58, 46, 42, 69, 58, 35,
                                  56, 94, 86, 206};

void criterion_1_catalog() {
    Criterion c(1, "all 16 builtins are chaotic with doubly stochastic chains");
    for (const std::string& name : builtin_names()) {
        const IterationGraph graph = build_iteration_graph(*builtin_map(name));
        c.expect(strongly_connected(graph), name + " not chaotic");
        c.expect(is_doubly_stochastic(graph), name + " not doubly stochastic");
    }
    c.expect(c.seconds() < 1.0, "runtime exceeded 1s");
}

void criterion_2_mixing_times() {
    Criterion c(2, "mixing-time column reproduced under a documented convention");
    struct Result {
        Norm norm;
        std::vector<int> b;
        int exact = 0;
    };
    std::vector<Result> results;
    for (Norm norm : {Norm::L1, Norm::L2, Norm::LInf}) {
        Result r;
        r.norm = norm;
        for (int i = 1; i <= 16; ++i) {
            MixingOptions opt;
            opt.norm = norm;
            const TransitionMatrix m = TransitionMatrix::from_graph(
                build_iteration_graph(*builtin_map("F" + std::to_string(i))));
            r.b.push_back(mixing_time(m, opt));
            if (r.b.back() == kExpectedB[static_cast<std::size_t>(i - 1)]) ++r.exact;
        }
        results.push_back(std::move(r));
    }
    // The start vector printed as 1/n * e_j cannot mix; record the outcome.
    try {
        MixingOptions opt;
        opt.start = StartVector::ScaledBasis;
        mixing_time(TransitionMatrix::from_graph(build_iteration_graph(*builtin_map("F5"))),
                    opt);
        c.expect(false, "scaled-basis start unexpectedly converged");
    } catch (const NotMixingError&) {
        c.note("start=paper: not-mixing (documented)");
    }

    const Result* best = &results[0];
    for (const Result& r : results)
        if (r.exact > best->exact) best = &r;
    c.note(std::string("best convention: norm=") + to_string(best->norm) +
           ", start=basis, " + std::to_string(best->exact) + "/16 exact");
    if (best->exact == 16) {
        c.expect(true, "");
    } else {
        c.expect(best->exact >= 13, "fewer than 13 exact matches");
        const auto max_it = std::max_element(best->b.begin(), best->b.end());
        const auto min_it = std::min_element(best->b.begin(), best->b.end());
        c.expect(best->b[0] == best->b[15] && max_it - best->b.begin() == 0,
                 "extremal symmetry F1 = F16 = max broken");
        c.expect(min_it - best->b.begin() == 11, "F12 is not the minimum");
    }
    c.expect(c.seconds() < 10.0, "runtime exceeded 10s");
}

void criterion_3_worked_example() {
    Criterion c(3, "two-component worked example: matrices, stationary vectors, filter");
    const BooleanMap g(2, {2, 2, 1, 0});
    const BooleanMap h(2, {2, 3, 1, 0});
    const auto rows_of = [](const AdjacencyMatrix& m) {
        std::vector<std::string> rows;
        for (std::size_t r = 0; r < m.dim(); ++r) {
            std::string row;
            for (std::size_t col = 0; col < m.dim(); ++col)
                row.push_back(m.at(r, col) ? '1' : '0');
            rows.push_back(row);
        }
        return rows;
    };
    const std::vector<std::string> expected_g{"1010", "1001", "1001", "0110"};
    const std::vector<std::string> expected_h{"1010", "0101", "1001", "0110"};
    c.expect(rows_of(unlabeled_adjacency(build_iteration_graph(g))) == expected_g,
             "adjacency of the first map is off");
    c.expect(rows_of(unlabeled_adjacency(build_iteration_graph(h))) == expected_h,
             "adjacency of the second map is off");

    const auto pi_g = stationary_distribution(TransitionMatrix::from_graph(build_iteration_graph(g)));
    const std::vector<double> expected_pi{0.4, 0.1, 0.3, 0.2};
    for (std::size_t i = 0; i < 4; ++i)
        c.expect(std::abs(pi_g[i] - expected_pi[i]) < 1e-12, "pi_g entry off");
    const auto pi_h = stationary_distribution(TransitionMatrix::from_graph(build_iteration_graph(h)));
    for (double v : pi_h) c.expect(std::abs(v - 0.25) < 1e-12, "pi_h not uniform");

    const auto kept = filter_double_stochastic({g, h});
    c.expect(kept.size() == 1 && kept[0] == h, "double-stochastic filter picked wrong maps");
}

void criterion_4_sufficient_conditions() {
    Criterion c(4, "10^4 condition-satisfying interaction graphs all yield chaotic maps");
    std::mt19937_64 rng(20110401);
    int accepted = 0;
    long tried = 0;
    int failures = 0;
    while (accepted < 10000) {
        ++tried;
        const int n = 1 + static_cast<int>(rng() % 4);
        const auto f = oracles::sample_condition_candidate(n, rng);
        if (!f) continue;
        ++accepted;
        if (!is_chaotic(*f)) ++failures;
    }
    c.note("accept ratio " + std::to_string(accepted) + "/" + std::to_string(tried));
    c.expect(failures == 0, std::to_string(failures) + " counterexamples");
}

void criterion_5_restriction_properties() {
    Criterion c(5, "restriction: G(f^a) = G(f) minus n, and the slice graphs match");
    std::mt19937_64 rng(20110405);
    int failures_graph = 0, failures_slice = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);  // up to 5 components
        const BooleanMap f = oracles::random_map_last_detached(n, rng);
        const SignedDigraph cut = remove_vertex(build_interaction_graph(f), n);
        const IterationGraph graph = build_iteration_graph(f);
        for (bool alpha : {false, true}) {
            const BooleanMap restricted = restrict_last(f, alpha);
            if (build_interaction_graph(restricted) != cut) ++failures_graph;
            if (build_iteration_graph(restricted) != induced_subgraph(graph, alpha))
                ++failures_slice;
        }
    }
    c.expect(failures_graph == 0,
             std::to_string(failures_graph) + " interaction-graph mismatches");
    c.expect(failures_slice == 0, std::to_string(failures_slice) + " slice mismatches");
}

void criterion_6_search() {
    Criterion c(6, "500 seeded searches stay chaotic and round-trip through the graph");
    const double rates[] = {0.1, 0.5, 0.9};
    int run_index = 0;
    for (int i = 0; i < 500; ++i) {
        SearchParams params;
        params.n = 1 + i % 6;
        params.target_removal_rate = rates[i % 3];
        params.rng_seed = static_cast<std::uint64_t>(9000 + i);
        params.max_attempts = 50;
        const SearchResult result = generate_chaotic_map(params);
        const IterationGraph graph = build_iteration_graph(result.map);
        if (!strongly_connected(graph)) {
            c.expect(false, "non-chaotic output at run " + std::to_string(run_index));
            break;
        }
        const BooleanMap recovered = graph_to_map(graph);
        if (!(recovered == result.map) || !(build_iteration_graph(recovered) == graph)) {
            c.expect(false, "round-trip mismatch at run " + std::to_string(run_index));
            break;
        }
        ++run_index;
    }
}

void criterion_7_scc_oracle() {
    Criterion c(7, "Tarjan agrees with the reachability-closure oracle on 10^4 maps");
    std::mt19937_64 rng(20110407);
    int disagreements = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const IterationGraph graph = build_iteration_graph(oracles::random_map(n, rng));
        if (strongly_connected(graph) != oracles::scc_by_closure(graph)) ++disagreements;
    }
    c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
}

void criterion_8_xorshift(bool run_long) {
    Criterion c(8, "shift-xor generator: fixed round value, injectivity, period");
    XorShift32 probe(1);
    c.expect(probe.round() == 270369u, "round(1) != 270369");

    std::mt19937_64 seeds(20110408);
    std::unordered_set<std::uint32_t> inputs, outputs;
    inputs.reserve(2000000);
    outputs.reserve(2000000);
    while (inputs.size() < 1000000) {
        const std::uint32_t z = static_cast<std::uint32_t>(seeds());
        if (z == 0 || !inputs.insert(z).second) continue;
        XorShift32 x(z);
        outputs.insert(x.round());
    }
    c.expect(outputs.size() == inputs.size(), "collision found: rounds are not injective");

    if (run_long) {
        XorShift32 walker(1);
        std::uint64_t steps = 0;
        do {
            walker.round();
            ++steps;
        } while (walker.state() != 1u);
        c.expect(steps == 0xFFFFFFFFull, "orbit length " + std::to_string(steps));
        c.note("full-period walk: 2^32-1 confirmed");
    } else {
        c.note("full-period walk skipped; run with --long");
    }
}

void criterion_9_statistical_quality() {
    Criterion c(9, "10^6-bit streams from F5/F12 pass the battery; zeros fail everything");
    struct Instance {
        const char* name;
        int b;
    };
    for (const Instance& inst : {Instance{"F5", 48}, Instance{"F12", 35}}) {
        ChaoticGenerator gen(*builtin_map(inst.name), inst.b, Configuration(4, 0),
                             123456789);
        const BitSequence bits{gen.bitstream(1000000)};
        for (const TestReport& r : run_battery(bits, 0.01))
            c.expect(r.pass && r.error.empty(),
                     std::string(inst.name) + ": " + r.name + " failed");
    }

    // symbol equidistribution over one million outputs
    ChaoticGenerator gen(*builtin_map("F5"), 48, Configuration(4, 0), 987654321);
    std::vector<std::uint64_t> counts(16, 0);
    for (int i = 0; i < 1000000; ++i) ++counts[gen.next().bits()];
    const double p = chi_square_uniform_pvalue(counts);
    c.note("symbol chi-square p = " + std::to_string(p));
    c.expect(p >= 0.01, "symbol distribution rejected");

    const BitSequence zeros(std::vector<std::uint8_t>(1000000, 0));
    for (const TestReport& r : run_battery(zeros, 0.01))
        c.expect(!r.pass, "all-zero stream passed " + r.name);
}

void criterion_10_known_gap() {
    Criterion c(10, "1-bit negation: strongly connected yet periodic, mixing undefined");
    const IterationGraph graph = build_iteration_graph(BooleanMap::negation(1));
    c.expect(strongly_connected(graph), "2-cycle not strongly connected");
    c.expect(!is_regular(graph), "periodic chain misreported as regular");
    bool raised = false;
    try {
        mixing_time(TransitionMatrix::from_graph(graph));
    } catch (const NotMixingError&) {
        raised = true;
    }
    c.expect(raised, "mixing_time did not raise not-mixing");
}

}  // namespace

int main(int argc, char** argv) {
    bool run_long = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--long") run_long = true;

    criterion_1_catalog();
    criterion_2_mixing_times();
    criterion_3_worked_example();
    criterion_4_sufficient_conditions();
    criterion_5_restriction_properties();
    criterion_6_search();
    criterion_7_scc_oracle();
    criterion_8_xorshift(run_long);
    criterion_9_statistical_quality();
    criterion_10_known_gap();

    if (g_failures == 0) {
        std::printf("ACCEPTANCE: all 10 criteria passed\n");
        return 0;
    }
    std::printf("ACCEPTANCE: %d criterion(s) FAILED\n", g_failures);
    return 1;
}
