#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boolnet/errors.hpp"

namespace boolnet {

// Components of an n-bit state are indexed 1..n. Component i lives at bit
// position n-i of the integer encoding: x_1 is the most significant bit, so
// the integer value of a configuration reads x_1 x_2 ... x_n in binary and
// truth tables written as decimal image lists are unambiguous.
inline constexpr int kMaxComponents = 16;

class Configuration {
public:
    Configuration(int n, std::uint32_t bits);

    int n() const { return n_; }
    std::uint32_t bits() const { return bits_; }

    bool component(int i) const;                         // x_i
    Configuration with_component(int i, bool value) const;
    Configuration flipped(int i) const;                  // x with x_i toggled

    std::string to_string() const;                       // "x_1 x_2 ... x_n"

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    int n_;
    std::uint32_t bits_;
};

// Dense truth table of a map B^n -> B^n: table()[x] is the image of x.
class BooleanMap {
public:
    BooleanMap(int n, std::vector<std::uint32_t> table);

    static BooleanMap negation(int n);   // x -> bitwise complement
    static BooleanMap identity(int n);

    // Parses one line of 2^n comma-separated decimal images, e.g.
    // "14, 15, 12, 13"; surrounding whitespace is ignored.
    static BooleanMap parse(std::string_view text);
    std::string format() const;

    int n() const { return n_; }
    std::size_t size() const { return table_.size(); }   // 2^n
    std::uint32_t image(std::uint32_t x) const;
    bool component_image(int i, std::uint32_t x) const;  // f_i(x)
    const std::vector<std::uint32_t>& table() const { return table_; }

    friend bool operator==(const BooleanMap&, const BooleanMap&) = default;

private:
    int n_;
    std::vector<std::uint32_t> table_;
};

// Finite prefix of an update strategy: which component to iterate at each
// step. Terms are component indices in [1, n].
class Strategy {
public:
    Strategy(int n, std::vector<int> terms);

    int n() const { return n_; }
    const std::vector<int>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    int head() const;         // first term; StrategyExhaustedError if empty
    Strategy tail() const;    // strategy with the first term dropped

    friend bool operator==(const Strategy&, const Strategy&) = default;

private:
    int n_;
    std::vector<int> terms_;
};

// A point of the product space the asynchronous dynamics act on. The
// strategy member is a finite prefix of the conceptually infinite sequence;
// see strategy_distance() for the induced truncation error.
struct StatePoint {
    StatePoint(Strategy s, Configuration c);

    Strategy strategy;
    Configuration config;

    friend bool operator==(const StatePoint&, const StatePoint&) = default;
};

// One asynchronous update: component i is replaced by f_i(x), all other
// components are left alone.
Configuration apply_async(const BooleanMap& f, int i, Configuration x);

// One step of the induced dynamical system: consume the strategy head and
// update that component.
StatePoint system_step(const BooleanMap& f, const StatePoint& point);

// Orbit [x^0, ..., x^T] driven by the strategy, T = s.size().
std::vector<Configuration> iterate(const BooleanMap& f, Configuration x0,
                                   const Strategy& s);

int hamming_distance(Configuration x, Configuration y);

// (9/n) * sum |s_t - s'_t| / 10^(t+1) over the stored prefixes. Both
// prefixes must have the same length L; dropping the infinite tail changes
// the value by less than 10^-L.
double strategy_distance(const Strategy& a, const Strategy& b);

// Hamming part plus strategy part; the integer part of the result is
// exactly the Hamming distance.
double distance(const StatePoint& x, const StatePoint& y);

// The (n-1)-component map obtained by pinning component n to alpha.
BooleanMap restrict_last(const BooleanMap& f, bool alpha);

// Map with components renamed by a permutation of [1, n] (old index i
// becomes perm[i-1]); inputs and outputs are permuted together, so the
// renamed map's dynamics are conjugate to the original's.
BooleanMap relabel_components(const BooleanMap& f, const std::vector<int>& perm);

}  // namespace boolnet
