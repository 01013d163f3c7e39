#pragma once

#include <stdexcept>

namespace boolnet {

// Domain-level failures. Argument validation uses std::invalid_argument;
// everything below signals that a requested computation is impossible for
// the given object, not that the caller passed garbage.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A strategy prefix ran out of terms.
struct StrategyExhaustedError : DomainError {
    using DomainError::DomainError;
};

// An arc table does not describe the iteration graph of any map.
struct InvalidGraphError : DomainError {
    using DomainError::DomainError;
};

// The Markov chain is not regular (reducible or periodic).
struct NotRegularError : DomainError {
    using DomainError::DomainError;
};

// Deviation from the stationary distribution cannot reach the tolerance.
struct NotMixingError : DomainError {
    using DomainError::DomainError;
};

// The operation only supports exhaustive treatment of small instances.
struct UnsupportedSizeError : DomainError {
    using DomainError::DomainError;
};

// A statistical test needs more bits than the sequence provides.
struct InsufficientDataError : DomainError {
    using DomainError::DomainError;
};

// A generator reached a forbidden internal state (e.g. the all-zero word).
struct InvalidStateError : DomainError {
    using DomainError::DomainError;
};

}  // namespace boolnet
