#pragma once

#include <stdexcept>
#include <string>

#include "oscint/big_complex.hpp"

namespace oscint {

struct OscintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// DE quadrature failed to stabilize before the step-halving limit.
struct ConvergenceError : OscintError {
    ConvergenceError(const std::string& what, BigComplex best, BigReal correction)
        : OscintError(what), best_estimate(std::move(best)), last_correction(std::move(correction)) {}
    BigComplex best_estimate;
    BigReal last_correction;
};

// fewer sign changes than requested within the scan limit
struct PartitionError : OscintError {
    using OscintError::OscintError;
};

// qd_transform: c0 = 0
struct DegenerateSeriesError : OscintError {
    using OscintError::OscintError;
};

// qd_transform: breakdown before even one partial numerator
struct SeriesTooShortError : OscintError {
    using OscintError::OscintError;
};

// cf_eval: exact zero denominator in a convergent
struct PoleError : OscintError {
    PoleError(const std::string& what, int k) : OscintError(what), k(k) {}
    int k;
};

}  // namespace oscint
