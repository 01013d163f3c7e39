#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "boolnet/core.hpp"

namespace boolnet {

// Discrete Jacobian at one configuration: entry (i, j) in {-1, 0, +1} is the
// exact finite difference of f_i along component j. All arithmetic here is
// integer arithmetic.
class JacobianMatrix {
public:
    explicit JacobianMatrix(int n);

    int n() const { return n_; }
    int at(int i, int j) const;        // 1-based (row = output, col = input)
    void set(int i, int j, int value);

    friend bool operator==(const JacobianMatrix&, const JacobianMatrix&) = default;

private:
    int n_;
    std::vector<std::int8_t> entries_;
};

JacobianMatrix discrete_jacobian(const BooleanMap& f, Configuration x);

// Signed digraph on the component indices 1..n. An arc (j, s, i) records that
// flipping x_j moves f_i in direction s at some configuration; a pair of
// vertices may carry both a positive and a negative arc.
class SignedDigraph {
public:
    explicit SignedDigraph(int n);

    int n() const { return n_; }
    void add_arc(int from, int sign, int to);
    bool has_arc(int from, int sign, int to) const;
    bool has_any_arc(int from, int to) const;

    // (from, sign, to) sorted by (from, to, sign).
    std::vector<std::tuple<int, int, int>> arcs() const;

    // Text format: one arc per line, "j s i" with s in {+, -}.
    static SignedDigraph parse(std::string_view text, int vertex_count = 0);
    std::string format() const;

    // DOT export; negative arcs drawn red, positive arcs black.
    std::string to_dot() const;

    friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

private:
    std::size_t cell(int from, int to) const;

    int n_;
    std::vector<std::uint8_t> positive_, negative_;
};

SignedDigraph build_interaction_graph(const BooleanMap& f);

// True iff the sign-forgetting digraph without loop arcs contains a directed
// cycle through at least two distinct vertices.
bool has_multi_vertex_cycle(const SignedDigraph& g);

struct LoopSigns {
    bool positive = false;
    bool negative = false;
};
LoopSigns loop_signs(const SignedDigraph& g, int i);

// The three conditions that force a strongly connected iteration graph:
//   1. no cycle through two or more distinct vertices,
//   2. every vertex with a positive loop also has a negative loop,
//   3. every vertex is reachable (reflexively, signs ignored) from a vertex
//      carrying a negative loop.
struct ConnectivityConditions {
    bool cycle_free = false;
    bool positive_loops_covered = false;
    bool negative_loops_reach_all = false;

    bool all() const {
        return cycle_free && positive_loops_covered && negative_loops_reach_all;
    }
};
ConnectivityConditions connectivity_conditions(const SignedDigraph& g);
bool satisfies_connectivity_conditions(const SignedDigraph& g);

// G without vertex v, remaining vertices relabeled to [1, n-1] in order.
SignedDigraph remove_vertex(const SignedDigraph& g, int v);

}  // namespace boolnet
