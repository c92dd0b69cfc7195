#pragma once

#include <optional>
#include <vector>

#include "oscint/integrand.hpp"
#include "oscint/quadrature.hpp"
#include "oscint/result.hpp"

namespace oscint {

// Sign-change abscissae of the integrand: points[0] = 0 < points[1] < ...,
// one panel [points[j], points[j+1]] per alternating-series term.
struct Partition {
    std::vector<BigReal> points;
    int panel_count() const { return static_cast<int>(points.size()) - 1; }
};

// Scans f on the grid k*scan_step, bisects every sign-change bracket to 30
// significant digits, and returns 0 followed by the first K change points.
// With verify_rule, additionally integrates each panel and checks that
// consecutive panel integrals alternate in sign.  All evaluations land on
// f's counter.
Partition find_partition(const Integrand& f, int K, const BigReal& scan_step,
                         const GaussLegendreRule* verify_rule = nullptr);

// Euler transformation of the alternating series sum_k (-1)^k t_k, given the
// non-negative magnitudes t_k:  sum_j (-1)^j (Delta^j t_0) / 2^(j+1)  over
// the forward-difference table, using all terms.
BigReal euler_sum(const std::vector<BigReal>& terms);

// Alternating-series baseline: partition at sign changes (scan step pi/8),
// integrate each panel with `rule` (grading toward 0 on a singular first
// panel), sum the head of the series directly and Euler-transform the tail
// (transforming from the start stalls near the raw convergence rate; a
// one-third delay restores the expected acceleration).  eval_count = K*rule.n
// exactly; scanning and bisection are metered separately in scan_count.
IntegralResult euler_value(const Integrand& f, int K, const GaussLegendreRule& rule,
                           const PrecisionContext& ctx, int id = 0,
                           const std::optional<BigReal>& reference = std::nullopt);

}  // namespace oscint
