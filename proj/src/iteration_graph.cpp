#include "boolnet/iteration_graph.hpp"

#include <sstream>
#include <stdexcept>

namespace boolnet {

IterationGraph::IterationGraph(int n, std::vector<std::uint32_t> arcs)
    : n_(n), arcs_(std::move(arcs)) {
    if (n < 1 || n > kMaxComponents)
        throw std::invalid_argument("component count must be in [1, 16]");
    if (arcs_.size() != (std::size_t{1} << n) * static_cast<std::size_t>(n))
        throw InvalidGraphError("arc table has the wrong size");
    for (std::uint32_t x = 0; x < vertex_count(); ++x)
        for (int i = 1; i <= n_; ++i)
            check_arc(x, i, arcs_[x * n_ + (i - 1)]);
}

void IterationGraph::check_arc(std::uint32_t x, int i, std::uint32_t y) const {
    const std::uint32_t flip = 1u << (n_ - i);
    if (y != x && y != (x ^ flip))
        throw InvalidGraphError("arc (" + std::to_string(x) + ", " + std::to_string(i) +
                                ") targets " + std::to_string(y) +
                                ", which differs in a bit other than component " +
                                std::to_string(i));
}

IterationGraph IterationGraph::from_map(const BooleanMap& f) {
    const std::size_t count = std::size_t{1} << f.n();
    std::vector<std::uint32_t> arcs(count * static_cast<std::size_t>(f.n()));
    for (std::uint32_t x = 0; x < count; ++x) {
        const std::uint32_t fx = f.image(x);
        for (int i = 1; i <= f.n(); ++i) {
            const std::uint32_t mask = 1u << (f.n() - i);
            arcs[x * f.n() + (i - 1)] = (x & ~mask) | (fx & mask);
        }
    }
    return IterationGraph(f.n(), std::move(arcs));
}

std::uint32_t IterationGraph::target(std::uint32_t x, int i) const {
    if (x >= vertex_count()) throw std::invalid_argument("vertex out of range");
    if (i < 1 || i > n_) throw std::invalid_argument("component index out of range");
    return arcs_[x * n_ + (i - 1)];
}

void IterationGraph::set_target(std::uint32_t x, int i, std::uint32_t y) {
    if (x >= vertex_count()) throw std::invalid_argument("vertex out of range");
    if (i < 1 || i > n_) throw std::invalid_argument("component index out of range");
    check_arc(x, i, y);
    arcs_[x * n_ + (i - 1)] = y;
}

std::size_t IterationGraph::non_loop_arc_count() const {
    std::size_t count = 0;
    for (std::uint32_t x = 0; x < vertex_count(); ++x)
        for (int i = 0; i < n_; ++i)
            if (arcs_[x * n_ + i] != x) ++count;
    return count;
}

IterationGraph build_iteration_graph(const BooleanMap& f) {
    return IterationGraph::from_map(f);
}

bool strongly_connected(const IterationGraph& g) {
    const std::size_t count = g.vertex_count();
    const int n = g.n();

    constexpr std::uint32_t kUnvisited = 0xFFFFFFFFu;
    std::vector<std::uint32_t> index(count, kUnvisited);
    std::vector<std::uint32_t> lowlink(count, 0);
    std::vector<std::uint8_t> on_stack(count, 0);
    std::vector<std::uint32_t> scc_stack;
    scc_stack.reserve(count);

    struct Frame {
        std::uint32_t v;
        int next_label;  // next arc label to explore, 0-based
    };
    std::vector<Frame> frames;
    frames.reserve(64);

    std::uint32_t next_index = 0;
    frames.push_back({0, 0});
    index[0] = lowlink[0] = next_index++;
    scc_stack.push_back(0);
    on_stack[0] = 1;

    while (!frames.empty()) {
        Frame& frame = frames.back();
        const std::uint32_t v = frame.v;
        if (frame.next_label < n) {
            const std::uint32_t w = g.target(v, frame.next_label + 1);
            ++frame.next_label;
            if (index[w] == kUnvisited) {
                index[w] = lowlink[w] = next_index++;
                scc_stack.push_back(w);
                on_stack[w] = 1;
                frames.push_back({w, 0});
            } else if (on_stack[w]) {
                if (index[w] < lowlink[v]) lowlink[v] = index[w];
            }
        } else {
            frames.pop_back();
            if (!frames.empty() && lowlink[v] < lowlink[frames.back().v])
                lowlink[frames.back().v] = lowlink[v];
            if (lowlink[v] == index[v]) {
                // v roots a complete component; the first one decides.
                std::size_t size = 0;
                std::uint32_t w;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[w] = 0;
                    ++size;
                } while (w != v);
                return size == count && next_index == count;
            }
        }
    }
    return false;  // unreachable
}

bool is_chaotic(const BooleanMap& f) {
    return strongly_connected(build_iteration_graph(f));
}

IterationGraph induced_subgraph(const IterationGraph& g, bool alpha) {
    if (g.n() < 2)
        throw std::invalid_argument("cannot induce on a single-component graph");
    const int m = g.n() - 1;
    const std::uint32_t low = alpha ? 1u : 0u;
    std::vector<std::uint32_t> arcs((std::size_t{1} << m) * static_cast<std::size_t>(m));
    for (std::uint32_t x = 0; x < (std::uint32_t{1} << m); ++x) {
        const std::uint32_t full = (x << 1) | low;
        for (int i = 1; i <= m; ++i)
            arcs[x * m + (i - 1)] = g.target(full, i) >> 1;
    }
    return IterationGraph(m, std::move(arcs));
}

AdjacencyMatrix::AdjacencyMatrix(std::size_t dim)
    : dim_(dim), cells_(dim * dim, 0) {}

bool AdjacencyMatrix::at(std::size_t row, std::size_t col) const {
    return cells_[row * dim_ + col] != 0;
}

void AdjacencyMatrix::set(std::size_t row, std::size_t col, bool value) {
    cells_[row * dim_ + col] = value ? 1 : 0;
}

AdjacencyMatrix unlabeled_adjacency(const IterationGraph& g) {
    if (g.n() > 12)
        throw UnsupportedSizeError("dense adjacency is limited to n <= 12");
    AdjacencyMatrix m(g.vertex_count());
    for (std::uint32_t x = 0; x < g.vertex_count(); ++x)
        for (int i = 1; i <= g.n(); ++i)
            m.set(x, g.target(x, i), true);
    return m;
}

std::string format_adjacency(const AdjacencyMatrix& m) {
    std::string out;
    out.reserve((m.dim() + 1) * m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c)
            out.push_back(m.at(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

std::string to_dot(const IterationGraph& g) {
    std::ostringstream out;
    out << "digraph iteration {\n";
    for (std::uint32_t x = 0; x < g.vertex_count(); ++x)
        out << "  \"" << Configuration(g.n(), x).to_string() << "\";\n";
    for (std::uint32_t x = 0; x < g.vertex_count(); ++x)
        for (int i = 1; i <= g.n(); ++i)
            out << "  \"" << Configuration(g.n(), x).to_string() << "\" -> \""
                << Configuration(g.n(), g.target(x, i)).to_string()
                << "\" [label=\"" << i << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace boolnet
