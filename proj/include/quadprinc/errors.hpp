#pragma once

#include <stdexcept>
#include <string>

namespace quadprinc {

// Caller errors: bad arguments, violated preconditions.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RingMismatchError : UsageError {
    RingMismatchError() : UsageError("operands belong to different rings") {}
};

// The zero ideal is representable nowhere; callers must branch first.
struct ZeroIdealError : UsageError {
    ZeroIdealError() : UsageError("all generators are zero (zero ideal)") {}
};

struct NotComaximalError : UsageError {
    NotComaximalError() : UsageError("ideals are not comaximal") {}
};

struct NotPrimeError : UsageError {
    NotPrimeError() : UsageError("ideal is not prime") {}
};

struct NotRegularError : UsageError {
    NotRegularError() : UsageError("ideal is not comaximal with the conductor") {}
};

struct NoOddPrimeDivisorError : std::runtime_error {
    explicit NoOddPrimeDivisorError(long d)
        : std::runtime_error("1+d has no odd prime divisor other than 1+d itself (d = " +
                             std::to_string(d) + ")") {}
};

// A bounded search ran out of candidates; the bound is too small, the
// result is never silently wrong.
struct SearchExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internally re-verified identity failed: an implementation bug, never
// a user error.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace quadprinc
