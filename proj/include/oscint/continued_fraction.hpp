#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oscint/defining_function.hpp"
#include "oscint/result.hpp"

namespace oscint {

// Quotient-difference tableau.  e[k][n] holds e_k^(n) for k = 0..K,
// q[k-1][n] holds q_k^(n) for k = 1..K; every interior entry satisfies the
// rhombus rules
//   e_k^(n) = q_k^(n+1) - q_k^(n) + e_{k-1}^(n+1)
//   q_{k+1}^(n) = (e_k^(n+1) / e_k^(n)) * q_k^(n+1)
// re-derivable bit for bit from the coefficient list at the same precision.
struct QDTableau {
    std::vector<std::vector<BigComplex>> e;
    std::vector<std::vector<BigComplex>> q;
    std::optional<std::pair<int, int>> breakdown_at;  // (k, n) of the dead pivot
};

// coefficients of  a0 / (1 + a1 w / (1 + a2 w / (1 + ...))),  w = zeta - zeta0:
// a0 = c0, a_{2k-1} = -q_k^(0), a_{2k} = -e_k^(0)
struct ContinuedFraction {
    BigComplex zeta0;
    std::vector<BigComplex> a;
};

struct CfEvalResult {
    BigComplex value;
    BigReal err_estimate;  // |last convergent difference|
    int k_used = 0;
    long rescale_exponent = 0;  // net power-of-two rescaling applied to P, Q
};

// QD algorithm at >= 1.5x the context's decimal digits (the recurrences are
// numerically unstable); near-zero pivots truncate the fraction rather than
// abort, since terminating fractions are legitimate (rational F).
std::pair<QDTableau, ContinuedFraction> qd_transform(const TaylorSeries& s,
                                                     const PrecisionContext& ctx);

// convergents via P_k = a_k w P_{k-2} + P_{k-1}, Q_k likewise, from P_-1 = 0,
// Q_-1 = 1, P_0 = a0, Q_0 = 1, with joint exact power-of-two rescaling when
// |Q_k| leaves [1e-50, 1e50]; stops at the first k with
// |v_k - v_{k-1}| <= tol |v_k|
CfEvalResult cf_eval(const ContinuedFraction& cf, const BigComplex& zeta, const BigReal& tol);

// cf_eval with the rescaling guard disabled; overflow hazard, testing only
CfEvalResult cf_eval_no_rescaling(const ContinuedFraction& cf, const BigComplex& zeta,
                                  const BigReal& tol);

// P_k / Q_k for one fixed k (no convergence test)
BigComplex convergent_at(const ContinuedFraction& cf, int k, const BigComplex& zeta);

struct HyperfunctionConfig {
    PrecisionContext precision;
    BigComplex zeta0 = imaginary_unit();
    int coefficients = 100;               // N
    std::optional<BigReal> tol;           // default 10^(-decimal_digits+15)
    int id = 0;                           // catalog id for reporting
    std::optional<BigReal> reference;     // for relative_error reporting
};

// full pipeline: taylor_coefficients -> qd_transform -> cf_eval at zeta = 0;
// value is Re F(0), im_residue_out receives |Im F(0)| when requested
IntegralResult hyperfunction_value(const Integrand& f, const HyperfunctionConfig& config,
                                   BigReal* im_residue_out = nullptr);

// diagnostic approach to the real axis: cf evaluated at zeta = i 10^-m,
// m = 1..m_max, to watch the boundary limit settle
std::vector<BigComplex> boundary_approach_values(const ContinuedFraction& cf, int m_max,
                                                 const BigReal& tol);

}  // namespace oscint
