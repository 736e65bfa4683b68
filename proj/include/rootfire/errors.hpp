#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rootfire {

// Bad user-facing input (unknown type label, non-dominant weight where one is
// required, malformed parameters).
struct InvalidTypeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDominantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadParamError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DependentSetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DifferentCosetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation was rejected up front because its estimated size exceeds the
// configured bound.  `estimate` carries the estimated work (subset count, box
// volume, ...) that tripped the guard.
struct ResourceLimitError : std::runtime_error {
    double estimate;
    explicit ResourceLimitError(const std::string& what, double estimate_)
        : std::runtime_error(what), estimate(estimate_) {}
};

// Internal-invariant violations.  These signal bugs, not bad input: guaranteed
// theorems (termination, stable-point classification) failing at runtime.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct StepLimitError : InternalError {
    using InternalError::InternalError;
};

struct UnmatchedStablePointError : InternalError {
    using InternalError::InternalError;
};

struct NonTerminationError : InternalError {
    using InternalError::InternalError;
};

struct ArithmeticOverflowError : InternalError {
    using InternalError::InternalError;
};

// Reported (not thrown) when exact polynomial interpolation fails on the
// verification sample; a legitimate experimental outcome for truncated
// dynamics outside the simply-laced case.
struct NonPolynomialFitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Tunable resource bounds, threaded through the operations that enumerate.
struct Limits {
    std::int64_t step_limit = 10'000'000;   // total fires per stabilization
    std::int64_t box_limit = 10'000'000;    // downset box volume
    double subset_limit = 1e8;              // independent-subset estimate
};

}  // namespace rootfire
