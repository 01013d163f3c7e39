#pragma once

#include <cstdint>
#include <vector>

#include "boolnet/core.hpp"

namespace boolnet {

// Marsaglia's 13/17/5 shift-xor generator on a 32-bit word. The all-zero
// word is a fixed point of the recurrence and is therefore rejected; every
// other state lies on one orbit of length 2^32 - 1.
class XorShift32 {
public:
    explicit XorShift32(std::uint32_t seed);

    std::uint32_t state() const { return z_; }

    // Advances the state and returns the new word (never zero).
    std::uint32_t round();

    // Exactly uniform on [1, k], by rejection on the top of the range.
    std::uint32_t uniform(std::uint32_t k);

private:
    std::uint32_t z_;
};

// Generator that walks a chaotic map: each call performs between b+1 and
// 2b+1 asynchronous updates with uniformly drawn components and emits the
// configuration it lands on, which also seeds the next call. The iteration
// count and the component choices come from two embedded XorShift32
// instances; shared_rng folds them into one.
struct GeneratorConfig {
    BooleanMap map;
    int b = 1;
    Configuration x0;
    std::uint32_t length_seed = 1;
    std::uint32_t strategy_seed = 1;
    bool shared_rng = false;
};

class ChaoticGenerator {
public:
    explicit ChaoticGenerator(GeneratorConfig config);

    // Convenience: derives the strategy seed from the main seed with a fixed
    // integer mix, so one 32-bit seed pins the whole stream.
    ChaoticGenerator(BooleanMap map, int b, Configuration x0, std::uint32_t seed);

    Configuration next();

    // Concatenation of successive outputs, n bits each (component 1 first),
    // truncated to nbits.
    std::vector<std::uint8_t> bitstream(std::size_t nbits);

    const Configuration& state() const { return x_; }
    int b() const { return b_; }

private:
    BooleanMap map_;
    int b_;
    Configuration x_;
    XorShift32 length_rng_;
    XorShift32 strategy_rng_;
    bool shared_rng_;
};

// The fixed avalanche mix used to derive the secondary seed (never zero).
std::uint32_t derive_strategy_seed(std::uint32_t seed);

}  // namespace boolnet
