#include "boolnet/core.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace boolnet {

namespace {

void check_component_count(int n) {
    if (n < 1 || n > kMaxComponents)
        throw std::invalid_argument("component count must be in [1, 16], got " +
                                    std::to_string(n));
}

void check_index(int i, int n) {
    if (i < 1 || i > n)
        throw std::invalid_argument("component index " + std::to_string(i) +
                                    " out of [1, " + std::to_string(n) + "]");
}

}  // namespace

Configuration::Configuration(int n, std::uint32_t bits) : n_(n), bits_(bits) {
    check_component_count(n);
    if (bits >= (1u << n))
        throw std::invalid_argument("configuration value " + std::to_string(bits) +
                                    " does not fit in " + std::to_string(n) + " bits");
}

bool Configuration::component(int i) const {
    check_index(i, n_);
    return (bits_ >> (n_ - i)) & 1u;
}

Configuration Configuration::with_component(int i, bool value) const {
    check_index(i, n_);
    const std::uint32_t mask = 1u << (n_ - i);
    return Configuration(n_, value ? (bits_ | mask) : (bits_ & ~mask));
}

Configuration Configuration::flipped(int i) const {
    check_index(i, n_);
    return Configuration(n_, bits_ ^ (1u << (n_ - i)));
}

std::string Configuration::to_string() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 1; i <= n_; ++i)
        if (component(i)) s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

BooleanMap::BooleanMap(int n, std::vector<std::uint32_t> table)
    : n_(n), table_(std::move(table)) {
    check_component_count(n);
    const std::size_t expected = std::size_t{1} << n;
    if (table_.size() != expected)
        throw std::invalid_argument("truth table must have " + std::to_string(expected) +
                                    " entries, got " + std::to_string(table_.size()));
    for (std::uint32_t y : table_)
        if (y >= expected)
            throw std::invalid_argument("truth table image " + std::to_string(y) +
                                        " does not fit in " + std::to_string(n) + " bits");
}

BooleanMap BooleanMap::negation(int n) {
    check_component_count(n);
    const std::uint32_t top = (1u << n) - 1;
    std::vector<std::uint32_t> table(std::size_t{1} << n);
    for (std::uint32_t x = 0; x <= top; ++x) table[x] = top - x;
    return BooleanMap(n, std::move(table));
}

BooleanMap BooleanMap::identity(int n) {
    check_component_count(n);
    std::vector<std::uint32_t> table(std::size_t{1} << n);
    for (std::uint32_t x = 0; x < table.size(); ++x) table[x] = x;
    return BooleanMap(n, std::move(table));
}

BooleanMap BooleanMap::parse(std::string_view text) {
    std::vector<std::uint32_t> table;
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    while (pos < text.size()) {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start)
            throw std::invalid_argument("truth table: expected a decimal image at offset " +
                                        std::to_string(pos));
        if (pos - start > 5)  // anything longer than 5 digits exceeds 16 bits anyway
            throw std::invalid_argument("truth table image out of range");
        unsigned long value = std::stoul(std::string(text.substr(start, pos - start)));
        if (value > 0xFFFFu) throw std::invalid_argument("truth table image out of range");
        table.push_back(static_cast<std::uint32_t>(value));
        skip_ws();
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw std::invalid_argument("truth table: expected ',' at offset " +
                                            std::to_string(pos));
            ++pos;
            skip_ws();
            if (pos == text.size())
                throw std::invalid_argument("truth table: trailing comma");
        }
    }
    if (table.empty()) throw std::invalid_argument("truth table: empty input");
    if (!std::has_single_bit(table.size()))
        throw std::invalid_argument("truth table length " + std::to_string(table.size()) +
                                    " is not a power of two");
    const int n = std::countr_zero(table.size());
    if (n < 1 || n > kMaxComponents)
        throw std::invalid_argument("truth table length implies unsupported component count");
    return BooleanMap(n, std::move(table));
}

std::string BooleanMap::format() const {
    std::ostringstream out;
    for (std::size_t x = 0; x < table_.size(); ++x) {
        if (x) out << ", ";
        out << table_[x];
    }
    return out.str();
}

std::uint32_t BooleanMap::image(std::uint32_t x) const {
    if (x >= table_.size()) throw std::invalid_argument("configuration out of range");
    return table_[x];
}

bool BooleanMap::component_image(int i, std::uint32_t x) const {
    check_index(i, n_);
    return (image(x) >> (n_ - i)) & 1u;
}

Strategy::Strategy(int n, std::vector<int> terms) : n_(n), terms_(std::move(terms)) {
    check_component_count(n);
    for (int t : terms_) check_index(t, n);
}

int Strategy::head() const {
    if (terms_.empty()) throw StrategyExhaustedError("strategy prefix is exhausted");
    return terms_.front();
}

Strategy Strategy::tail() const {
    if (terms_.empty()) throw StrategyExhaustedError("strategy prefix is exhausted");
    return Strategy(n_, std::vector<int>(terms_.begin() + 1, terms_.end()));
}

StatePoint::StatePoint(Strategy s, Configuration c)
    : strategy(std::move(s)), config(c) {
    if (strategy.n() != config.n())
        throw std::invalid_argument("strategy and configuration disagree on n");
}

Configuration apply_async(const BooleanMap& f, int i, Configuration x) {
    if (f.n() != x.n())
        throw std::invalid_argument("map and configuration disagree on n");
    return x.with_component(i, f.component_image(i, x.bits()));
}

StatePoint system_step(const BooleanMap& f, const StatePoint& point) {
    const int i = point.strategy.head();
    return StatePoint(point.strategy.tail(), apply_async(f, i, point.config));
}

std::vector<Configuration> iterate(const BooleanMap& f, Configuration x0,
                                   const Strategy& s) {
    std::vector<Configuration> orbit;
    orbit.reserve(s.size() + 1);
    orbit.push_back(x0);
    Configuration x = x0;
    for (int i : s.terms()) {
        x = apply_async(f, i, x);
        orbit.push_back(x);
    }
    return orbit;
}

int hamming_distance(Configuration x, Configuration y) {
    if (x.n() != y.n())
        throw std::invalid_argument("configurations disagree on n");
    return std::popcount(x.bits() ^ y.bits());
}

double strategy_distance(const Strategy& a, const Strategy& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("strategies disagree on n");
    if (a.size() != b.size())
        throw std::invalid_argument("strategy prefixes disagree on length");
    double sum = 0.0;
    double scale = 0.1;
    for (std::size_t t = 0; t < a.size(); ++t) {
        sum += std::abs(a.terms()[t] - b.terms()[t]) * scale;
        scale *= 0.1;
    }
    return sum * 9.0 / a.n();
}

double distance(const StatePoint& x, const StatePoint& y) {
    return hamming_distance(x.config, y.config) +
           strategy_distance(x.strategy, y.strategy);
}

BooleanMap restrict_last(const BooleanMap& f, bool alpha) {
    if (f.n() < 2)
        throw std::invalid_argument("cannot restrict a single-component map");
    const int m = f.n() - 1;
    std::vector<std::uint32_t> table(std::size_t{1} << m);
    for (std::uint32_t x = 0; x < table.size(); ++x) {
        const std::uint32_t full = (x << 1) | (alpha ? 1u : 0u);
        table[x] = f.image(full) >> 1;  // drop component n of the image
    }
    return BooleanMap(m, std::move(table));
}

BooleanMap relabel_components(const BooleanMap& f, const std::vector<int>& perm) {
    const int n = f.n();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation length must equal n");
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int p : perm) {
        if (p < 1 || p > n || seen[p])
            throw std::invalid_argument("not a permutation of [1, n]");
        seen[p] = 1;
    }
    const auto permute_bits = [&](std::uint32_t x) {
        std::uint32_t y = 0;
        for (int i = 1; i <= n; ++i)
            if ((x >> (n - i)) & 1u) y |= 1u << (n - perm[i - 1]);
        return y;
    };
    std::vector<std::uint32_t> inverse(f.size());
    for (std::uint32_t x = 0; x < f.size(); ++x) inverse[permute_bits(x)] = x;
    std::vector<std::uint32_t> table(f.size());
    for (std::uint32_t y = 0; y < f.size(); ++y)
        table[y] = permute_bits(f.image(inverse[y]));
    return BooleanMap(n, std::move(table));
}

}  // namespace boolnet
