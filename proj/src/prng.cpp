#include "boolnet/prng.hpp"

#include <stdexcept>

namespace boolnet {

XorShift32::XorShift32(std::uint32_t seed) : z_(seed) {
    if (seed == 0)
        throw InvalidStateError("xorshift state must be nonzero");
}

std::uint32_t XorShift32::round() {
    z_ ^= z_ << 13;
    z_ ^= z_ >> 17;
    z_ ^= z_ << 5;
    return z_;
}

std::uint32_t XorShift32::uniform(std::uint32_t k) {
    if (k < 1)
        throw std::invalid_argument("uniform bound must be at least 1");
    // round() covers [1, 2^32 - 1]; accept the longest prefix that k divides.
    const std::uint32_t span = 0xFFFFFFFFu;
    const std::uint32_t accept = k * (span / k);
    std::uint32_t y;
    do {
        y = round();
    } while (y > accept);
    return 1 + (y - 1) % k;
}

std::uint32_t derive_strategy_seed(std::uint32_t seed) {
    // murmur3 finalizer
    std::uint32_t h = seed;
    h ^= h >> 16;
    h *= 0x85EBCA6Bu;
    h ^= h >> 13;
    h *= 0xC2B2AE35u;
    h ^= h >> 16;
    return h != 0 ? h : 0x9E3779B9u;
}

ChaoticGenerator::ChaoticGenerator(GeneratorConfig config)
    : map_(std::move(config.map)),
      b_(config.b),
      x_(config.x0),
      length_rng_(config.length_seed),
      strategy_rng_(config.strategy_seed),
      shared_rng_(config.shared_rng) {
    if (b_ < 1) throw std::invalid_argument("iteration parameter b must be positive");
    if (map_.n() != x_.n())
        throw std::invalid_argument("map and initial configuration disagree on n");
}

ChaoticGenerator::ChaoticGenerator(BooleanMap map, int b, Configuration x0,
                                   std::uint32_t seed)
    : ChaoticGenerator(GeneratorConfig{std::move(map), b, x0, seed,
                                       derive_strategy_seed(seed), false}) {}

Configuration ChaoticGenerator::next() {
    const std::uint32_t k =
        static_cast<std::uint32_t>(b_) + length_rng_.uniform(static_cast<std::uint32_t>(b_) + 1);
    XorShift32& components = shared_rng_ ? length_rng_ : strategy_rng_;
    for (std::uint32_t step = 0; step < k; ++step) {
        const int s = static_cast<int>(components.uniform(static_cast<std::uint32_t>(map_.n())));
        x_ = apply_async(map_, s, x_);
    }
    return x_;
}

std::vector<std::uint8_t> ChaoticGenerator::bitstream(std::size_t nbits) {
    std::vector<std::uint8_t> bits;
    bits.reserve(nbits);
    while (bits.size() < nbits) {
        const Configuration x = next();
        for (int i = 1; i <= map_.n() && bits.size() < nbits; ++i)
            bits.push_back(x.component(i) ? 1 : 0);
    }
    return bits;
}

}  // namespace boolnet
