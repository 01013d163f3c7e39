#include "boolnet/markov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace boolnet {

TransitionMatrix TransitionMatrix::from_graph(const IterationGraph& g) {
    TransitionMatrix m;
    m.n_ = g.n();
    m.dim_ = g.vertex_count();
    m.row_start_.reserve(m.dim_ + 1);
    m.row_start_.push_back(0);

    std::vector<std::uint32_t> targets(static_cast<std::size_t>(g.n()));
    for (std::uint32_t x = 0; x < m.dim_; ++x) {
        for (int i = 1; i <= g.n(); ++i) targets[i - 1] = g.target(x, i);
        std::sort(targets.begin(), targets.end());
        for (std::size_t k = 0; k < targets.size();) {
            std::size_t run = 1;
            while (k + run < targets.size() && targets[k + run] == targets[k]) ++run;
            m.cols_.push_back(targets[k]);
            m.counts_.push_back(static_cast<std::uint8_t>(run));
            k += run;
        }
        m.row_start_.push_back(m.cols_.size());
    }
    return m;
}

int TransitionMatrix::count(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_) throw std::invalid_argument("matrix index out of range");
    for (std::size_t k = row_start_[row]; k < row_start_[row + 1]; ++k)
        if (cols_[k] == col) return counts_[k];
    return 0;
}

double TransitionMatrix::value(std::size_t row, std::size_t col) const {
    return static_cast<double>(count(row, col)) / n_;
}

std::size_t TransitionMatrix::row_size(std::size_t row) const {
    if (row >= dim_) throw std::invalid_argument("matrix row out of range");
    return row_start_[row + 1] - row_start_[row];
}

TransitionMatrix::Entry TransitionMatrix::row_entry(std::size_t row, std::size_t k) const {
    if (row >= dim_ || k >= row_size(row))
        throw std::invalid_argument("matrix entry out of range");
    const std::size_t idx = row_start_[row] + k;
    return Entry{cols_[idx], counts_[idx]};
}

std::vector<double> TransitionMatrix::apply(const std::vector<double>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length mismatch");
    std::vector<double> out(dim_, 0.0);
    const double inv_n = 1.0 / n_;
    for (std::size_t row = 0; row < dim_; ++row) {
        const double weight = v[row] * inv_n;
        if (weight == 0.0) continue;
        for (std::size_t k = row_start_[row]; k < row_start_[row + 1]; ++k)
            out[cols_[k]] += weight * counts_[k];
    }
    return out;
}

std::vector<std::int64_t> TransitionMatrix::column_count_sums() const {
    std::vector<std::int64_t> sums(dim_, 0);
    for (std::size_t row = 0; row < dim_; ++row)
        for (std::size_t k = row_start_[row]; k < row_start_[row + 1]; ++k)
            sums[cols_[k]] += counts_[k];
    return sums;
}

std::string TransitionMatrix::format_rational() const {
    if (n_ > 12) throw UnsupportedSizeError("rational export is limited to n <= 12");
    std::ostringstream out;
    for (std::size_t row = 0; row < dim_; ++row) {
        for (std::size_t col = 0; col < dim_; ++col) {
            const int c = count(row, col);
            const int g = c == 0 ? n_ : std::gcd(c, n_);
            if (col) out << ' ';
            if (c == 0)
                out << "0/1";
            else
                out << c / g << '/' << n_ / g;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

// Period of a strongly connected digraph: gcd over all arcs (u, v) of
// dist(u) + 1 - dist(v), with dist taken from any breadth-first search.
int chain_period(const IterationGraph& g) {
    const std::size_t count = g.vertex_count();
    constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
    std::vector<std::uint32_t> dist(count, kUnset);
    std::vector<std::uint32_t> queue;
    queue.reserve(count);
    queue.push_back(0);
    dist[0] = 0;
    std::size_t head = 0;
    std::int64_t gcd_acc = 0;
    while (head < queue.size()) {
        const std::uint32_t u = queue[head++];
        for (int i = 1; i <= g.n(); ++i) {
            const std::uint32_t v = g.target(u, i);
            if (dist[v] == kUnset) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
            const std::int64_t delta =
                static_cast<std::int64_t>(dist[u]) + 1 - static_cast<std::int64_t>(dist[v]);
            gcd_acc = std::gcd(gcd_acc, delta);
        }
    }
    return static_cast<int>(gcd_acc);
}

double deviation_norm(const std::vector<double>& v, const std::vector<double>& pi,
                      Norm norm) {
    double acc = 0.0;
    switch (norm) {
        case Norm::L1:
            for (std::size_t i = 0; i < v.size(); ++i) acc += std::abs(v[i] - pi[i]);
            return acc;
        case Norm::L2:
            for (std::size_t i = 0; i < v.size(); ++i) {
                const double d = v[i] - pi[i];
                acc += d * d;
            }
            return std::sqrt(acc);
        case Norm::LInf:
            for (std::size_t i = 0; i < v.size(); ++i)
                acc = std::max(acc, std::abs(v[i] - pi[i]));
            return acc;
    }
    return acc;
}

bool is_regular_matrix(const TransitionMatrix& m) {
    // Irreducibility and aperiodicity straight off the sparsity pattern:
    // every state reaches every state, and the cycle length gcd is 1.
    const std::size_t dim = m.dim();
    std::vector<std::vector<std::uint32_t>> reverse(dim);
    for (std::size_t row = 0; row < dim; ++row)
        for (std::size_t k = 0; k < m.row_size(row); ++k)
            reverse[m.row_entry(row, k).col].push_back(static_cast<std::uint32_t>(row));

    const auto bfs_covers_all = [&](bool forward) {
        std::vector<std::uint8_t> seen(dim, 0);
        std::vector<std::uint32_t> queue{0};
        seen[0] = 1;
        std::size_t head = 0;
        while (head < queue.size()) {
            const std::uint32_t u = queue[head++];
            const auto visit = [&](std::uint32_t v) {
                if (!seen[v]) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            };
            if (forward)
                for (std::size_t k = 0; k < m.row_size(u); ++k) visit(m.row_entry(u, k).col);
            else
                for (std::uint32_t v : reverse[u]) visit(v);
        }
        return queue.size() == dim;
    };
    if (!bfs_covers_all(true) || !bfs_covers_all(false)) return false;

    constexpr std::uint32_t kUnset = 0xFFFFFFFFu;
    std::vector<std::uint32_t> dist(dim, kUnset);
    std::vector<std::uint32_t> queue{0};
    dist[0] = 0;
    std::size_t head = 0;
    std::int64_t gcd_acc = 0;
    while (head < queue.size()) {
        const std::uint32_t u = queue[head++];
        for (std::size_t k = 0; k < m.row_size(u); ++k) {
            const std::uint32_t v = m.row_entry(u, k).col;
            if (dist[v] == kUnset) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
            gcd_acc = std::gcd(gcd_acc, static_cast<std::int64_t>(dist[u]) + 1 -
                                            static_cast<std::int64_t>(dist[v]));
        }
    }
    return gcd_acc == 1;
}

// Gaussian elimination for pi * M = pi with sum(pi) = 1, i.e. solve
// (M^T - I) x = 0 with the last row replaced by the normalization.
std::vector<double> solve_stationary_dense(const TransitionMatrix& m) {
    const std::size_t dim = m.dim();
    std::vector<double> a(dim * dim, 0.0);
    std::vector<double> b(dim, 0.0);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            double v = m.value(c, r);  // transpose
            if (r == c) v -= 1.0;
            a[r * dim + c] = v;
        }
    for (std::size_t c = 0; c < dim; ++c) a[(dim - 1) * dim + c] = 1.0;
    b[dim - 1] = 1.0;

    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < dim; ++r)
            if (std::abs(a[r * dim + col]) > std::abs(a[pivot * dim + col])) pivot = r;
        if (pivot != col) {
            for (std::size_t c = 0; c < dim; ++c)
                std::swap(a[pivot * dim + c], a[col * dim + c]);
            std::swap(b[pivot], b[col]);
        }
        const double diag = a[col * dim + col];
        if (std::abs(diag) < 1e-14) continue;  // rank deficiency handled by last row
        for (std::size_t r = col + 1; r < dim; ++r) {
            const double factor = a[r * dim + col] / diag;
            if (factor == 0.0) continue;
            for (std::size_t c = col; c < dim; ++c) a[r * dim + c] -= factor * a[col * dim + c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<double> x(dim, 0.0);
    for (std::size_t r = dim; r-- > 0;) {
        double acc = b[r];
        for (std::size_t c = r + 1; c < dim; ++c) acc -= a[r * dim + c] * x[c];
        const double diag = a[r * dim + r];
        x[r] = std::abs(diag) < 1e-14 ? 0.0 : acc / diag;
    }
    return x;
}

double residual_l1(const TransitionMatrix& m, const std::vector<double>& pi) {
    const std::vector<double> next = m.apply(pi);
    double acc = 0.0;
    for (std::size_t i = 0; i < pi.size(); ++i) acc += std::abs(next[i] - pi[i]);
    return acc;
}

}  // namespace

bool is_regular(const IterationGraph& g) {
    return strongly_connected(g) && chain_period(g) == 1;
}

bool is_doubly_stochastic(const IterationGraph& g) {
    const std::size_t count = g.vertex_count();
    std::vector<std::int32_t> in_degree(count, 0), out_degree(count, 0);
    for (std::uint32_t x = 0; x < count; ++x)
        for (int i = 1; i <= g.n(); ++i) {
            const std::uint32_t y = g.target(x, i);
            if (y == x) continue;
            // Two labels never reach the same non-loop target, so counting
            // labeled arcs counts collapsed arcs.
            ++out_degree[x];
            ++in_degree[y];
        }
    for (std::size_t x = 0; x < count; ++x)
        if (in_degree[x] != out_degree[x]) return false;
    return true;
}

std::vector<double> stationary_distribution(const TransitionMatrix& m) {
    if (!is_regular_matrix(m))
        throw NotRegularError("chain is not regular; no unique stationary vector");

    std::vector<double> pi;
    if (m.dim() <= 4096) {
        pi = solve_stationary_dense(m);
        // Clean tiny negatives from elimination round-off and renormalize.
        double sum = 0.0;
        for (double& v : pi) {
            if (v < 0.0 && v > -1e-13) v = 0.0;
            sum += v;
        }
        for (double& v : pi) v /= sum;
    } else {
        pi.assign(m.dim(), 1.0 / static_cast<double>(m.dim()));
    }
    for (int round = 0; round < 100000 && residual_l1(m, pi) >= 1e-12; ++round)
        pi = m.apply(pi);
    if (residual_l1(m, pi) >= 1e-12)
        throw NotRegularError("stationary iteration failed to reach the residual bound");
    return pi;
}

const char* to_string(Norm norm) {
    switch (norm) {
        case Norm::L1: return "l1";
        case Norm::L2: return "l2";
        case Norm::LInf: return "linf";
    }
    return "?";
}

const char* to_string(StartVector start) {
    switch (start) {
        case StartVector::Basis: return "basis";
        case StartVector::ScaledBasis: return "scaled";
    }
    return "?";
}

int mixing_time(const TransitionMatrix& m, const MixingOptions& options) {
    if (!is_regular_matrix(m))
        throw NotMixingError("chain is not regular; deviations do not converge");
    const std::vector<double> pi = stationary_distribution(m);
    const double scale =
        options.start == StartVector::Basis ? 1.0 : 1.0 / static_cast<double>(m.dim());

    std::uint64_t worst = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) {
        std::vector<double> v(m.dim(), 0.0);
        v[j] = scale;
        std::uint64_t k = 0;
        double dev = deviation_norm(v, pi, options.norm);
        while (dev >= options.tolerance) {
            if (k >= options.max_iterations)
                throw NotMixingError("deviation still above tolerance at the iteration cap");
            std::vector<double> next = m.apply(v);
            ++k;
            // A stagnating iterate can no longer cross the tolerance band.
            double step = 0.0;
            for (std::size_t c = 0; c < v.size(); ++c)
                step = std::max(step, std::abs(next[c] - v[c]));
            v = std::move(next);
            dev = deviation_norm(v, pi, options.norm);
            if (step < 1e-15 && dev >= options.tolerance)
                throw NotMixingError("iteration stagnated away from the stationary vector");
        }
        worst = std::max(worst, k);
    }
    return static_cast<int>(worst);
}

}  // namespace boolnet
