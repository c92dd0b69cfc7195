#pragma once

#include <vector>

#include "oscint/integrand.hpp"
#include "oscint/quadrature.hpp"

namespace oscint {

// Taylor series of F(zeta) = int_0^inf f(x) e^(i zeta x) dx about zeta0,
// im(zeta0) > 0, where F is analytic.
struct TaylorSeries {
    TaylorSeries(BigComplex center, std::vector<BigComplex> cs)
        : zeta0(std::move(center)), coeffs(std::move(cs)) {
        if (!(zeta0.im.sign() > 0))
            throw std::invalid_argument("TaylorSeries: im(zeta0) must be > 0");
        if (coeffs.size() < 3)
            throw std::invalid_argument("TaylorSeries: needs c0, c1, c2 at least");
        // a convergent F has bounded |c_n|; sustained growth with ratio > 10
        // means the center is bad or the integral diverges
        BigReal bound = BigReal(1) + abs(coeffs[0]);
        for (std::size_t n = 1; n < coeffs.size(); ++n) {
            bound = bound * 10;
            if (abs(coeffs[n]) > bound) {
                growth_warning = true;
                break;
            }
        }
    }

    BigComplex zeta0;
    std::vector<BigComplex> coeffs;  // c_0 ... c_N
    bool growth_warning = false;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// c_n = (1/n!) int_0^inf (ix)^n f(x) e^(i zeta0 x) dx for n = 0..N, all on one
// shared DE rule sized for decay_rate = im(zeta0) and polynomial order N;
// f is evaluated exactly once per node.  The rule that was frozen is copied
// to *rule_out when given.
TaylorSeries taylor_coefficients(const Integrand& f, const BigComplex& zeta0, int N,
                                 const PrecisionContext& ctx, DERule* rule_out = nullptr);

// Horner evaluation of sum c_n (zeta - zeta0)^n
BigComplex series_eval(const TaylorSeries& s, const BigComplex& zeta);

}  // namespace oscint
