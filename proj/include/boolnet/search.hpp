#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boolnet/interaction_graph.hpp"
#include "boolnet/iteration_graph.hpp"

namespace boolnet {

struct SearchParams {
    int n = 4;
    double target_removal_rate = 0.5;  // fraction of the n * 2^n initial arcs
    std::uint64_t rng_seed = 0;
    int max_attempts = 1000;           // consecutive rejected removals before stopping
};

struct SearchResult {
    BooleanMap map;
    bool rate_reached;          // false if max_attempts ended the search first
    std::size_t removed_arcs;
    std::size_t initial_arcs;   // n * 2^n
};

// Starts from the negation map, whose iteration graph is strongly connected,
// and keeps turning randomly chosen non-loop arcs into self-loops as long as
// strong connectivity survives. Whatever happens, the returned map is
// chaotic.
SearchResult generate_chaotic_map(const SearchParams& params);

// The unique map whose iteration graph is g: component i of f(x) is read off
// the label-i arc leaving x.
BooleanMap graph_to_map(const IterationGraph& g);

// Enumerates every map whose interaction graph is contained in (or, with
// require_equality, equal to) the target. Per component the candidates range
// over functions of that component's in-neighbors only, filtered by the
// allowed dependency signs; the overall stream is their cartesian product in
// lexicographic order. Exhaustive enumeration is limited to n <= 4.
class CompatibleMapEnumerator {
public:
    CompatibleMapEnumerator(SignedDigraph target, bool require_equality);

    std::optional<BooleanMap> next();

private:
    int n_;
    // candidates_[i] holds full-width component tables: bit x of an entry is
    // f_{i+1}(x).
    std::vector<std::vector<std::uint32_t>> candidates_;
    std::vector<std::size_t> odometer_;
    bool exhausted_ = false;
};

// Keeps the maps whose induced chain is doubly stochastic.
bool induces_doubly_stochastic_chain(const BooleanMap& f);
std::vector<BooleanMap> filter_double_stochastic(const std::vector<BooleanMap>& maps);

// Optional quotient of an enumeration result: two maps are identified when a
// simultaneous component relabeling that is an automorphism of the target
// graph carries one to the other. Keeps the lexicographically smallest
// member of each orbit, preserving first-seen order.
std::vector<BooleanMap> dedupe_by_relabeling(const std::vector<BooleanMap>& maps,
                                             const SignedDigraph& target);

}  // namespace boolnet
