#include "boolnet/search.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "boolnet/markov.hpp"

namespace boolnet {

namespace {

// Bounded draw by rejection, so pinned seeds reproduce across standard
// library implementations (std::uniform_int_distribution does not).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

}  // namespace

SearchResult generate_chaotic_map(const SearchParams& params) {
    if (params.target_removal_rate < 0.0 || params.target_removal_rate >= 1.0)
        throw std::invalid_argument("removal rate must lie in [0, 1)");
    if (params.max_attempts < 1)
        throw std::invalid_argument("max_attempts must be positive");

    IterationGraph graph = build_iteration_graph(BooleanMap::negation(params.n));
    const std::size_t initial = graph.arc_count();  // all non-loop for negation

    std::mt19937_64 rng(params.rng_seed);
    // (x, i) pairs that are still non-loop arcs.
    std::vector<std::pair<std::uint32_t, int>> candidates;
    candidates.reserve(initial);
    for (std::uint32_t x = 0; x < graph.vertex_count(); ++x)
        for (int i = 1; i <= params.n; ++i) candidates.emplace_back(x, i);

    std::size_t removed = 0;
    int consecutive_failures = 0;
    const auto rate = [&] { return static_cast<double>(removed) / static_cast<double>(initial); };

    bool rate_reached = rate() >= params.target_removal_rate;
    while (!rate_reached && !candidates.empty()) {
        const std::size_t pick = bounded(rng, candidates.size());
        const auto [x, i] = candidates[pick];
        const std::uint32_t old_target = graph.target(x, i);
        graph.set_target(x, i, x);
        if (strongly_connected(graph)) {
            candidates[pick] = candidates.back();
            candidates.pop_back();
            ++removed;
            consecutive_failures = 0;
            rate_reached = rate() >= params.target_removal_rate;
        } else {
            graph.set_target(x, i, old_target);
            if (++consecutive_failures >= params.max_attempts) break;
        }
    }
    return SearchResult{graph_to_map(graph), rate_reached, removed, initial};
}

BooleanMap graph_to_map(const IterationGraph& g) {
    std::vector<std::uint32_t> table(g.vertex_count());
    for (std::uint32_t x = 0; x < g.vertex_count(); ++x) {
        std::uint32_t image = x;
        for (int i = 1; i <= g.n(); ++i) {
            const std::uint32_t mask = 1u << (g.n() - i);
            image = (image & ~mask) | (g.target(x, i) & mask);
        }
        table[x] = image;
    }
    return BooleanMap(g.n(), std::move(table));
}

CompatibleMapEnumerator::CompatibleMapEnumerator(SignedDigraph target,
                                                 bool require_equality)
    : n_(target.n()) {
    if (n_ > 4)
        throw UnsupportedSizeError("exhaustive enumeration is limited to n <= 4");
    const std::uint32_t size = 1u << n_;

    for (int i = 1; i <= n_; ++i) {
        std::vector<int> inputs;  // in-neighbors of i
        for (int j = 1; j <= n_; ++j)
            if (target.has_any_arc(j, i)) inputs.push_back(j);

        std::vector<std::uint32_t> list;
        const std::uint32_t sub_size = 1u << inputs.size();
        // Every truth table over the in-neighbors, lifted to full width.
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << sub_size); ++sub) {
            std::uint32_t lifted = 0;
            for (std::uint32_t x = 0; x < size; ++x) {
                std::uint32_t key = 0;
                for (std::size_t b = 0; b < inputs.size(); ++b) {
                    const std::uint32_t bit = (x >> (n_ - inputs[b])) & 1u;
                    key |= bit << b;
                }
                if ((sub >> key) & 1u) lifted |= 1u << x;
            }
            // Realized dependency signs of this component.
            bool ok = true;
            SignedDigraph realized(n_);
            for (std::uint32_t x = 0; x < size && ok; ++x) {
                const int fx = (lifted >> x) & 1;
                for (int j = 1; j <= n_; ++j) {
                    const std::uint32_t y = x ^ (1u << (n_ - j));
                    const int fy = (lifted >> y) & 1;
                    if (fx == fy) continue;
                    const int xj = (x >> (n_ - j)) & 1;
                    const int sign = (fy - fx) * (xj ? -1 : 1);  // (f(x^j)-f(x))/(x^j_j-x_j)
                    if (!target.has_arc(j, sign, i)) {
                        ok = false;
                        break;
                    }
                    realized.add_arc(j, sign, i);
                }
            }
            if (!ok) continue;
            if (require_equality) {
                for (int j = 1; j <= n_ && ok; ++j) {
                    if (target.has_arc(j, +1, i) != realized.has_arc(j, +1, i)) ok = false;
                    if (target.has_arc(j, -1, i) != realized.has_arc(j, -1, i)) ok = false;
                }
                if (!ok) continue;
            }
            list.push_back(lifted);
        }
        if (list.empty()) {
            exhausted_ = true;
            return;
        }
        candidates_.push_back(std::move(list));
    }
    odometer_.assign(candidates_.size(), 0);
}

std::optional<BooleanMap> CompatibleMapEnumerator::next() {
    if (exhausted_) return std::nullopt;
    const std::uint32_t size = 1u << n_;
    std::vector<std::uint32_t> table(size, 0);
    for (int i = 1; i <= n_; ++i) {
        const std::uint32_t component = candidates_[i - 1][odometer_[i - 1]];
        const std::uint32_t mask = 1u << (n_ - i);
        for (std::uint32_t x = 0; x < size; ++x)
            if ((component >> x) & 1u) table[x] |= mask;
    }
    // Advance the odometer, least significant position last.
    for (std::size_t pos = candidates_.size(); pos-- > 0;) {
        if (++odometer_[pos] < candidates_[pos].size()) break;
        odometer_[pos] = 0;
        if (pos == 0) exhausted_ = true;
    }
    return BooleanMap(n_, std::move(table));
}

bool induces_doubly_stochastic_chain(const BooleanMap& f) {
    return is_doubly_stochastic(build_iteration_graph(f));
}

std::vector<BooleanMap> filter_double_stochastic(const std::vector<BooleanMap>& maps) {
    std::vector<BooleanMap> out;
    for (const BooleanMap& f : maps)
        if (induces_doubly_stochastic_chain(f)) out.push_back(f);
    return out;
}

namespace {

bool is_automorphism(const SignedDigraph& g, const std::vector<int>& perm) {
    for (int from = 1; from <= g.n(); ++from)
        for (int to = 1; to <= g.n(); ++to)
            for (int sign : {-1, +1})
                if (g.has_arc(from, sign, to) !=
                    g.has_arc(perm[from - 1], sign, perm[to - 1]))
                    return false;
    return true;
}

}  // namespace

std::vector<BooleanMap> dedupe_by_relabeling(const std::vector<BooleanMap>& maps,
                                             const SignedDigraph& target) {
    std::vector<std::vector<int>> automorphisms;
    std::vector<int> perm(static_cast<std::size_t>(target.n()));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (is_automorphism(target, perm)) automorphisms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<BooleanMap> out;
    std::vector<std::vector<std::uint32_t>> seen;  // canonical tables
    for (const BooleanMap& f : maps) {
        std::vector<std::uint32_t> canonical = f.table();
        for (const auto& sigma : automorphisms)
            canonical = std::min(canonical, relabel_components(f, sigma).table());
        if (std::find(seen.begin(), seen.end(), canonical) == seen.end()) {
            seen.push_back(canonical);
            out.push_back(f);
        }
    }
    return out;
}

}  // namespace boolnet
