#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolnet/iteration_graph.hpp"

namespace boolnet {

// Transition matrix of the random walk that picks the updated component
// uniformly: every labeled arc carries probability 1/n. Entries are exact
// multiples of 1/n and are stored as integer counts (sparse, row-major), so
// each row sums to exactly n counts.
class TransitionMatrix {
public:
    static TransitionMatrix from_graph(const IterationGraph& g);

    int components() const { return n_; }        // the denominator n
    std::size_t dim() const { return dim_; }     // 2^n states

    int count(std::size_t row, std::size_t col) const;  // numerator of M[row][col]
    double value(std::size_t row, std::size_t col) const;

    struct Entry {
        std::uint32_t col;
        std::uint8_t count;
    };
    std::size_t row_size(std::size_t row) const;
    Entry row_entry(std::size_t row, std::size_t k) const;

    // Row-vector product v * M.
    std::vector<double> apply(const std::vector<double>& v) const;

    // Exact column sums, in counts (column c is stochastic iff sum == n).
    std::vector<std::int64_t> column_count_sums() const;

    // Rows of reduced "p/q" fractions separated by spaces; limited to n <= 12.
    std::string format_rational() const;

private:
    TransitionMatrix() = default;

    int n_ = 0;
    std::size_t dim_ = 0;
    std::vector<std::size_t> row_start_;   // dim + 1 offsets into cols_/counts_
    std::vector<std::uint32_t> cols_;
    std::vector<std::uint8_t> counts_;
};

// Regular chain: irreducible (the graph is strongly connected) and
// aperiodic (the gcd of its directed cycle lengths is 1). Note that the
// walk on a strongly connected graph can still be periodic — the negation
// map is the standard example — so this is strictly stronger than
// strongly_connected().
bool is_regular(const IterationGraph& g);

// Exact integer criterion: every vertex has as many non-loop predecessors
// as non-loop successors in the label-collapsed digraph. Equivalent to all
// column sums of the transition matrix being 1.
bool is_doubly_stochastic(const IterationGraph& g);

// Unique stationary row vector pi with pi * M = pi, found by direct linear
// solve for dim <= 4096 and by power iteration above; the L1 residual of the
// returned vector is below 1e-12. NotRegularError if the chain is not
// regular.
std::vector<double> stationary_distribution(const TransitionMatrix& m);

enum class Norm { L1, L2, LInf };
enum class StartVector {
    Basis,        // e_j
    ScaledBasis,  // e_j / 2^n; kept for completeness, cannot mix (see below)
};

const char* to_string(Norm norm);
const char* to_string(StartVector start);

struct MixingOptions {
    double tolerance = 1e-4;
    Norm norm = Norm::L2;
    StartVector start = StartVector::Basis;
    std::uint64_t max_iterations = 1'000'000;
};

// Smallest k such that every start vector is within `tolerance` of the
// stationary distribution after k steps; the worst start vector decides.
// NotMixingError when the chain is not regular, when the iteration
// stagnates away from the tolerance band (the ScaledBasis start converges
// to pi / 2^n, not pi, so it always stagnates), or when max_iterations is
// exceeded.
int mixing_time(const TransitionMatrix& m, const MixingOptions& options = {});

}  // namespace boolnet
