#include "boolnet/interaction_graph.hpp"

#include <sstream>
#include <stdexcept>

namespace boolnet {

namespace {

void check_vertex(int i, int n) {
    if (i < 1 || i > n)
        throw std::invalid_argument("vertex " + std::to_string(i) + " out of [1, " +
                                    std::to_string(n) + "]");
}

}  // namespace

JacobianMatrix::JacobianMatrix(int n)
    : n_(n), entries_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1 || n > kMaxComponents)
        throw std::invalid_argument("component count must be in [1, 16]");
}

int JacobianMatrix::at(int i, int j) const {
    check_vertex(i, n_);
    check_vertex(j, n_);
    return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

void JacobianMatrix::set(int i, int j, int value) {
    check_vertex(i, n_);
    check_vertex(j, n_);
    if (value < -1 || value > 1)
        throw std::invalid_argument("Jacobian entries lie in {-1, 0, +1}");
    entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] =
        static_cast<std::int8_t>(value);
}

JacobianMatrix discrete_jacobian(const BooleanMap& f, Configuration x) {
    if (f.n() != x.n())
        throw std::invalid_argument("map and configuration disagree on n");
    JacobianMatrix jac(f.n());
    for (int j = 1; j <= f.n(); ++j) {
        const Configuration xj = x.flipped(j);
        const int denom = (xj.component(j) ? 1 : 0) - (x.component(j) ? 1 : 0);
        for (int i = 1; i <= f.n(); ++i) {
            const int numer = (f.component_image(i, xj.bits()) ? 1 : 0) -
                              (f.component_image(i, x.bits()) ? 1 : 0);
            jac.set(i, j, numer / denom);  // denom is +1 or -1, division exact
        }
    }
    return jac;
}

SignedDigraph::SignedDigraph(int n)
    : n_(n),
      positive_(static_cast<std::size_t>(n) * n, 0),
      negative_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1 || n > kMaxComponents)
        throw std::invalid_argument("vertex count must be in [1, 16]");
}

std::size_t SignedDigraph::cell(int from, int to) const {
    check_vertex(from, n_);
    check_vertex(to, n_);
    return static_cast<std::size_t>(from - 1) * n_ + (to - 1);
}

void SignedDigraph::add_arc(int from, int sign, int to) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("arc sign must be +1 or -1");
    (sign > 0 ? positive_ : negative_)[cell(from, to)] = 1;
}

bool SignedDigraph::has_arc(int from, int sign, int to) const {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("arc sign must be +1 or -1");
    return (sign > 0 ? positive_ : negative_)[cell(from, to)] != 0;
}

bool SignedDigraph::has_any_arc(int from, int to) const {
    const std::size_t c = cell(from, to);
    return positive_[c] != 0 || negative_[c] != 0;
}

std::vector<std::tuple<int, int, int>> SignedDigraph::arcs() const {
    std::vector<std::tuple<int, int, int>> out;
    for (int from = 1; from <= n_; ++from)
        for (int to = 1; to <= n_; ++to) {
            if (has_arc(from, -1, to)) out.emplace_back(from, -1, to);
            if (has_arc(from, +1, to)) out.emplace_back(from, +1, to);
        }
    return out;
}

SignedDigraph SignedDigraph::parse(std::string_view text, int vertex_count) {
    struct RawArc {
        int from, sign, to;
    };
    std::vector<RawArc> raw;
    int max_vertex = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string from_s, sign_s, to_s;
        if (!(fields >> from_s)) continue;  // blank line
        if (!(fields >> sign_s >> to_s))
            throw std::invalid_argument("interaction graph line " + std::to_string(line_no) +
                                        ": expected \"j s i\"");
        std::string extra;
        if (fields >> extra)
            throw std::invalid_argument("interaction graph line " + std::to_string(line_no) +
                                        ": trailing tokens");
        int sign;
        if (sign_s == "+" || sign_s == "+1")
            sign = 1;
        else if (sign_s == "-" || sign_s == "-1")
            sign = -1;
        else
            throw std::invalid_argument("interaction graph line " + std::to_string(line_no) +
                                        ": sign must be + or -");
        int from, to;
        try {
            from = std::stoi(from_s);
            to = std::stoi(to_s);
        } catch (const std::exception&) {
            throw std::invalid_argument("interaction graph line " + std::to_string(line_no) +
                                        ": vertices must be small integers");
        }
        if (from < 1 || to < 1)
            throw std::invalid_argument("interaction graph vertices are 1-based");
        raw.push_back({from, sign, to});
        max_vertex = std::max({max_vertex, from, to});
    }
    const int n = vertex_count > 0 ? vertex_count : max_vertex;
    if (n == 0) throw std::invalid_argument("interaction graph: no arcs and no vertex count");
    SignedDigraph g(n);
    for (const RawArc& a : raw) g.add_arc(a.from, a.sign, a.to);
    return g;
}

std::string SignedDigraph::format() const {
    std::ostringstream out;
    for (const auto& [from, sign, to] : arcs())
        out << from << ' ' << (sign > 0 ? '+' : '-') << ' ' << to << '\n';
    return out.str();
}

std::string SignedDigraph::to_dot() const {
    std::ostringstream out;
    out << "digraph interaction {\n";
    for (int v = 1; v <= n_; ++v) out << "  " << v << ";\n";
    for (const auto& [from, sign, to] : arcs())
        out << "  " << from << " -> " << to << " [color=" << (sign > 0 ? "black" : "red")
            << ", label=\"" << (sign > 0 ? '+' : '-') << "\"];\n";
    out << "}\n";
    return out.str();
}

SignedDigraph build_interaction_graph(const BooleanMap& f) {
    SignedDigraph g(f.n());
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        const JacobianMatrix jac = discrete_jacobian(f, Configuration(f.n(), x));
        for (int i = 1; i <= f.n(); ++i)
            for (int j = 1; j <= f.n(); ++j)
                if (const int s = jac.at(i, j); s != 0) g.add_arc(j, s, i);
    }
    return g;
}

bool has_multi_vertex_cycle(const SignedDigraph& g) {
    // Depth-first search on the loop-free sign-forgetting digraph.
    enum class Mark : std::uint8_t { White, Grey, Black };
    std::vector<Mark> mark(static_cast<std::size_t>(g.n()) + 1, Mark::White);

    struct Frame {
        int v;
        int next;  // next out-neighbor candidate
    };
    std::vector<Frame> frames;
    for (int root = 1; root <= g.n(); ++root) {
        if (mark[root] != Mark::White) continue;
        frames.push_back({root, 1});
        mark[root] = Mark::Grey;
        while (!frames.empty()) {
            Frame& frame = frames.back();
            bool advanced = false;
            while (frame.next <= g.n()) {
                const int w = frame.next++;
                if (w == frame.v || !g.has_any_arc(frame.v, w)) continue;
                if (mark[w] == Mark::Grey) return true;
                if (mark[w] == Mark::White) {
                    mark[w] = Mark::Grey;
                    frames.push_back({w, 1});
                    advanced = true;
                    break;
                }
            }
            if (!advanced && frame.next > g.n()) {
                mark[frame.v] = Mark::Black;
                frames.pop_back();
            }
        }
    }
    return false;
}

LoopSigns loop_signs(const SignedDigraph& g, int i) {
    return LoopSigns{g.has_arc(i, +1, i), g.has_arc(i, -1, i)};
}

ConnectivityConditions connectivity_conditions(const SignedDigraph& g) {
    ConnectivityConditions out;
    out.cycle_free = !has_multi_vertex_cycle(g);

    out.positive_loops_covered = true;
    for (int v = 1; v <= g.n(); ++v) {
        const LoopSigns signs = loop_signs(g, v);
        if (signs.positive && !signs.negative) out.positive_loops_covered = false;
    }

    // Reflexive reachability from the set of negative-loop vertices.
    std::vector<std::uint8_t> reached(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<int> queue;
    for (int v = 1; v <= g.n(); ++v)
        if (loop_signs(g, v).negative) {
            reached[v] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        for (int w = 1; w <= g.n(); ++w)
            if (!reached[w] && g.has_any_arc(v, w)) {
                reached[w] = 1;
                queue.push_back(w);
            }
    }
    out.negative_loops_reach_all = true;
    for (int v = 1; v <= g.n(); ++v)
        if (!reached[v]) out.negative_loops_reach_all = false;
    return out;
}

bool satisfies_connectivity_conditions(const SignedDigraph& g) {
    return connectivity_conditions(g).all();
}

SignedDigraph remove_vertex(const SignedDigraph& g, int v) {
    check_vertex(v, g.n());
    if (g.n() < 2)
        throw std::invalid_argument("cannot remove the only vertex");
    SignedDigraph out(g.n() - 1);
    const auto relabel = [v](int w) { return w < v ? w : w - 1; };
    for (const auto& [from, sign, to] : g.arcs())
        if (from != v && to != v) out.add_arc(relabel(from), sign, relabel(to));
    return out;
}

}  // namespace boolnet
