#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "boolnet/core.hpp"

namespace boolnet {

// Asynchronous iteration graph of a map: 2^n vertices (the configurations)
// and one labeled arc (x, i) -> target per vertex and component. The arc for
// label i can only point to x itself or to x with component i flipped;
// self-loops are kept because they carry the chain's holding probability.
class IterationGraph {
public:
    // Validates the arc table; InvalidGraphError if some arc (x, i) targets
    // a vertex that differs from x in a bit other than i.
    IterationGraph(int n, std::vector<std::uint32_t> arcs);

    static IterationGraph from_map(const BooleanMap& f);

    int n() const { return n_; }
    std::size_t vertex_count() const { return std::size_t{1} << n_; }
    std::size_t arc_count() const { return arcs_.size(); }

    std::uint32_t target(std::uint32_t x, int i) const;
    void set_target(std::uint32_t x, int i, std::uint32_t y);

    std::size_t non_loop_arc_count() const;

    friend bool operator==(const IterationGraph&, const IterationGraph&) = default;

private:
    void check_arc(std::uint32_t x, int i, std::uint32_t y) const;

    int n_;
    std::vector<std::uint32_t> arcs_;  // arcs_[x * n_ + (i - 1)]
};

IterationGraph build_iteration_graph(const BooleanMap& f);

// True iff the label-collapsed digraph is one strongly connected component
// covering every configuration. Iterative Tarjan; no recursion, so n = 16
// (65536 vertices) is fine.
bool strongly_connected(const IterationGraph& g);

// The induced dynamics are Devaney-chaotic exactly when the iteration graph
// is strongly connected.
bool is_chaotic(const BooleanMap& f);

// Subgraph on the configurations with component n fixed to alpha, relabeled
// to n-1 components. Arcs keep their labels 1..n-1; the label-n arcs cannot
// be expressed on n-1 components and are dropped (they are self-loops or
// leave the slice, so connectivity within the slice is unaffected).
IterationGraph induced_subgraph(const IterationGraph& g, bool alpha);

// Dense 0/1 adjacency of the label-collapsed digraph.
class AdjacencyMatrix {
public:
    explicit AdjacencyMatrix(std::size_t dim);

    std::size_t dim() const { return dim_; }
    bool at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, bool value);

    friend bool operator==(const AdjacencyMatrix&, const AdjacencyMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<std::uint8_t> cells_;
};

// Dense matrices are only reasonable up to n = 12 (4096 x 4096);
// UnsupportedSizeError above that.
AdjacencyMatrix unlabeled_adjacency(const IterationGraph& g);

// Rows of '0'/'1' characters, one vertex per line.
std::string format_adjacency(const AdjacencyMatrix& m);

// DOT digraph; vertices named by their binary strings, arcs labeled by the
// updated component.
std::string to_dot(const IterationGraph& g);

}  // namespace boolnet
