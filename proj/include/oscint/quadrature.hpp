#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "oscint/big_complex.hpp"
#include "oscint/errors.hpp"
#include "oscint/integrand.hpp"
#include "oscint/precision.hpp"

namespace oscint {

// Trapezoidal rule in t after the change of variable x = phi(t),
// phi(t) = exp(t - exp(-t)), on the fixed window [t_lo, t_hi].  Halving h
// keeps every existing node: new nodes interleave at odd grid indices.
struct DERule {
    BigReal h;
    BigReal t_lo;
    BigReal t_hi;
    std::vector<BigReal> nodes;    // x_j = phi(t_j), strictly increasing, all > 0
    std::vector<BigReal> weights;  // phi'(t_j) * h
    int halvings = 0;              // times h was halved from the initial 0.5

    std::size_t size() const { return nodes.size(); }
};

struct GaussLegendreRule {
    int n = 100;
    std::vector<BigReal> nodes;    // ascending in (-1, 1), symmetric about 0
    std::vector<BigReal> weights;  // positive, sum to 2
};

// Smallest x_max with
//   decay_rate*x - max_poly_order*ln x - lnGamma(max_poly_order+1)
//     >= (target_digits+10)*ln 10,
// so the tail of x^n e^(-decay_rate*x)/n! beyond x_max is below
// 10^-(target_digits+10).
BigReal truncation_point(const BigReal& decay_rate, int max_poly_order, int target_digits);

GaussLegendreRule gauss_legendre(int n, const PrecisionContext& ctx);

BigReal panel_integrate(const std::function<BigReal(const BigReal&)>& g, const BigReal& a,
                        const BigReal& b, const GaussLegendreRule& rule);
BigReal panel_integrate(const Integrand& f, const BigReal& a, const BigReal& b,
                        const GaussLegendreRule& rule);

// integral over [0, b] under the grading x = b*((u+1)/2)^m, which restores
// full Gauss-Legendre accuracy for integrable endpoint singularities while
// still spending exactly rule.n evaluations
BigReal panel_integrate_graded(const Integrand& f, const BigReal& b,
                               const GaussLegendreRule& rule, int grading = 12);

struct DeOutcome {
    BigComplex value;
    DERule rule;
    BigReal last_correction;
    // integrand samples g(x_j) aligned with rule.nodes (weights not applied)
    std::vector<BigComplex> samples;
};

// integral of g over (0, inf) for g with e^(-decay_rate*x)-type decay bounded
// by a degree-max_poly_order polynomial factor; g may carry an integrable
// singularity at 0.  Throws ConvergenceError once h would drop below 2^-20.
DeOutcome de_integrate(const std::function<BigComplex(const BigReal&)>& g,
                       const BigReal& decay_rate, int max_poly_order,
                       const PrecisionContext& ctx, int max_halvings = 19);

}  // namespace oscint
