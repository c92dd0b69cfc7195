#pragma once

#include <string>

#include "oscint/big_real.hpp"

namespace oscint {

// One computed integral.  Precision-bearing quantities are decimal strings at
// full working precision; relative_error is recomputed from the stored value
// and reference strings.
struct IntegralResult {
    int id = 0;  // catalog id; 0 for ad-hoc integrands
    std::string method;
    std::string value;
    std::string reference;       // empty when no reference is known
    std::string relative_error;  // empty when no reference is known
    std::string err_estimate;
    long eval_count = 0;
    int k_used = -1;        // hyperfunction: accepted convergent index
    int panels_used = -1;   // euler: panel count
    long scan_count = -1;   // euler: scan/bisection evaluations
    long wall_time_ms = 0;
    std::string error;  // nonempty when the computation failed

    bool operator==(const IntegralResult&) const = default;
};

// |value - reference| / |reference| recomputed from decimal strings
std::string relative_error_from_strings(const std::string& value, const std::string& reference,
                                        const PrecisionContext& ctx);

}  // namespace oscint
