#include "oscint/defining_function.hpp"

namespace oscint {

TaylorSeries taylor_coefficients(const Integrand& f, const BigComplex& zeta0, int N,
                                 const PrecisionContext& ctx, DERule* rule_out) {
    validate(ctx);
    if (!(zeta0.im.sign() > 0))
        throw std::invalid_argument("taylor_coefficients: im(zeta0) must be > 0");
    if (N < 2) throw std::invalid_argument("taylor_coefficients: N >= 2");

    PrecisionScope scope(ctx);

    // convergence is steered by c0's integrand f(x) e^(i zeta0 x); the frozen
    // rule then serves every coefficient, so f costs one call per node total
    auto g = [&](const BigReal& x) -> BigComplex {
        BigComplex izx(-(zeta0.im * x), zeta0.re * x);  // i*zeta0*x
        return f.eval(x) * exp(izx);
    };
    DeOutcome de = de_integrate(g, zeta0.im, N, ctx);

    const std::size_t m = de.rule.size();
    // u_j = w_j * f(x_j) e^(i zeta0 x_j); p_j accumulates (i x_j)^n / n!
    std::vector<BigComplex> u(m), p(m, BigComplex(1));
    for (std::size_t j = 0; j < m; ++j) u[j] = de.samples[j] * de.rule.weights[j];

    std::vector<BigComplex> coeffs;
    coeffs.reserve(N + 1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0)
            for (std::size_t j = 0; j < m; ++j) {
                // p *= i*x/n, keeping x^n/n! factors at unit scale
                BigReal s = de.rule.nodes[j] / n;
                p[j] = BigComplex(-(p[j].im * s), p[j].re * s);
            }
        BigComplex c(0);
        for (std::size_t j = 0; j < m; ++j) c += u[j] * p[j];
        coeffs.push_back(c);
    }

    if (rule_out) *rule_out = de.rule;
    return TaylorSeries(zeta0, std::move(coeffs));
}

BigComplex series_eval(const TaylorSeries& s, const BigComplex& zeta) {
    BigComplex d = zeta - s.zeta0;
    BigComplex acc = s.coeffs.back();
    for (std::size_t i = s.coeffs.size() - 1; i-- > 0;) acc = acc * d + s.coeffs[i];
    return acc;
}

}  // namespace oscint
