#include "oscint/quadrature.hpp"

#include <cmath>
#include <utility>

#include "oscint/special.hpp"

namespace oscint {

BigReal truncation_point(const BigReal& decay_rate, int max_poly_order, int target_digits) {
    if (decay_rate.sign() <= 0)
        throw std::invalid_argument("truncation_point: decay_rate must be > 0");
    if (max_poly_order < 0)
        throw std::invalid_argument("truncation_point: max_poly_order must be >= 0");

    const long n = max_poly_order;
    BigReal rhs = BigReal(target_digits + 10) * log(BigReal(10)) + lngamma(BigReal(n + 1));
    auto g = [&](const BigReal& x) { return decay_rate * x - n * log(x) - rhs; };

    // g is increasing for x > n/decay_rate and negative there; expand right
    BigReal lo = BigReal(n) / decay_rate + 1;
    while (g(lo) >= BigReal(0) && lo > BigReal(1e-30)) lo = lo / 2;
    BigReal hi = lo * 2;
    while (g(hi) < BigReal(0)) hi = hi * 2;
    for (int i = 0; i < 200; ++i) {
        BigReal mid = (lo + hi) / 2;
        (g(mid) < BigReal(0) ? lo : hi) = mid;
    }
    return hi;
}

GaussLegendreRule gauss_legendre(int n, const PrecisionContext& ctx) {
    validate(ctx);
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1");

    GaussLegendreRule rule;
    rule.n = n;
    rule.nodes.assign(n, BigReal(0));
    rule.weights.assign(n, BigReal(0));

    std::vector<BigReal> hi_nodes(n, BigReal(0)), hi_weights(n, BigReal(0));
    {
        PrecisionScope scope(bits_for_digits(ctx.working_digits() + 15));
        const BigReal pi = constant_pi();
        const BigReal tol = ldexp(BigReal(1), -(static_cast<long>(working_precision()) - 8));

        // P_n and P'_n by the three-term recurrence
        auto legendre = [&](const BigReal& x) {
            BigReal p0(1), p1 = x;
            for (long k = 2; k <= n; ++k) p0 = std::exchange(p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k);
            BigReal dp = n == 1 ? BigReal(1) : BigReal(n) * (x * p1 - p0) / (x * x - 1);
            return std::pair{p1, dp};
        };

        for (int i = 1; 2 * i <= n + 1; ++i) {
            // Chebyshev-angle initial guess for the i-th largest root
            BigReal x = cos(pi * (BigReal(i) - BigReal(0.25)) / (BigReal(n) + BigReal(0.5)));
            if (2 * i == n + 1) x = BigReal(0);  // central root of odd degree, exact
            bool converged = false;
            for (int it = 0; it < 100 && !converged; ++it) {
                auto [p, dp] = legendre(x);
                BigReal dx = p / dp;
                x = x - dx;
                converged = abs(dx) <= tol;
            }
            if (!converged)
                throw OscintError("gauss_legendre: Newton iteration failed to converge");
            BigReal dp = legendre(x).second;
            BigReal w = 2 / ((1 - x * x) * dp * dp);
            hi_nodes[n - i] = x;
            hi_weights[n - i] = w;
            hi_nodes[i - 1] = -x;
            hi_weights[i - 1] = w;
        }
    }
    {
        PrecisionScope scope(ctx);
        for (int i = 0; i < n; ++i) {
            rule.nodes[i] = round_to_working(hi_nodes[i]);
            rule.weights[i] = round_to_working(hi_weights[i]);
        }
    }
    return rule;
}

BigReal panel_integrate(const std::function<BigReal(const BigReal&)>& g, const BigReal& a,
                        const BigReal& b, const GaussLegendreRule& rule) {
    if (!(a < b)) throw std::invalid_argument("panel_integrate: requires a < b");
    BigReal mid = (a + b) / 2, half = (b - a) / 2;
    BigReal sum(0);
    for (int i = 0; i < rule.n; ++i) sum += rule.weights[i] * g(mid + half * rule.nodes[i]);
    return half * sum;
}

BigReal panel_integrate(const Integrand& f, const BigReal& a, const BigReal& b,
                        const GaussLegendreRule& rule) {
    return panel_integrate([&f](const BigReal& x) { return f.eval(x); }, a, b, rule);
}

BigReal panel_integrate_graded(const Integrand& f, const BigReal& b,
                               const GaussLegendreRule& rule, int grading) {
    if (b.sign() <= 0) throw std::invalid_argument("panel_integrate_graded: requires b > 0");
    if (grading < 1) throw std::invalid_argument("panel_integrate_graded: grading >= 1");
    BigReal sum(0);
    for (int i = 0; i < rule.n; ++i) {
        BigReal s = (rule.nodes[i] + 1) / 2;
        BigReal x = b * pow(s, static_cast<long>(grading));
        sum += rule.weights[i] * f.eval(x) * grading * pow(s, static_cast<long>(grading) - 1);
    }
    return b / 2 * sum;
}

namespace {

// t_lo such that phi(t_lo) * u^2-sized singular factors stay below
// 10^-(digits+10): with u = e^(-t_lo), solve u/2 - ln u = (digits+10) ln 10.
double de_t_lo(int digits) {
    double target = (digits + 10) * std::log(10.0);
    double u = 2.0 * target;
    for (int i = 0; i < 50; ++i) u = 2.0 * (target + std::log(u));
    return -std::log(u);
}

}  // namespace

DeOutcome de_integrate(const std::function<BigComplex(const BigReal&)>& g,
                       const BigReal& decay_rate, int max_poly_order,
                       const PrecisionContext& ctx, int max_halvings) {
    validate(ctx);
    if (decay_rate.sign() <= 0)
        throw std::invalid_argument("de_integrate: decay_rate must be > 0");
    if (max_halvings < 1) throw std::invalid_argument("de_integrate: max_halvings >= 1");

    PrecisionScope scope(ctx);
    const int digits = ctx.decimal_digits;

    const BigReal x_max = truncation_point(decay_rate, max_poly_order, digits);
    const BigReal t_lo(de_t_lo(digits));
    const BigReal t_hi_raw = log(x_max) + BigReal(0.5);

    // window aligned to whole h0 steps so halvings interleave exactly
    const BigReal h0(0.5);
    long m0 = static_cast<long>(((t_hi_raw - t_lo) / h0).to_double()) + 1;
    const BigReal t_hi = t_lo + m0 * h0;

    auto phi = [](const BigReal& t) { return exp(t - exp(-t)); };
    auto phi_prime_factor = [](const BigReal& t) { return 1 + exp(-t); };  // phi' = phi * this

    // per-node integrand samples g(x_j) and phi'(t_j); reused across halvings
    std::vector<BigReal> xs, phips;
    std::vector<BigComplex> gs;
    BigReal h = h0;
    BigComplex estimate;
    BigReal correction;
    bool have_estimate = false, converged = false;
    int halvings = 0;

    const BigReal thresh_factor = pow10(-(static_cast<long>(digits) + 5));

    while (true) {
        long count = m0 * (1L << halvings) + 1;
        std::vector<BigReal> nxs(count, BigReal(0)), nphips(count, BigReal(0));
        std::vector<BigComplex> ngs(count);
        for (long j = 0; j < count; ++j) {
            if (halvings > 0 && j % 2 == 0) {
                nxs[j] = xs[j / 2];
                nphips[j] = phips[j / 2];
                ngs[j] = gs[j / 2];
            } else {
                BigReal t = t_lo + j * h;
                nxs[j] = phi(t);
                nphips[j] = nxs[j] * phi_prime_factor(t);
                ngs[j] = g(nxs[j]);
            }
        }
        xs = std::move(nxs);
        phips = std::move(nphips);
        gs = std::move(ngs);

        BigComplex sum;
        for (long j = 0; j < count; ++j) sum += gs[j] * phips[j];
        BigComplex s = sum * h;

        if (have_estimate) {
            correction = abs(s - estimate);
            BigReal scale = max(abs(s), abs(estimate));
            if (correction <= thresh_factor * scale) {
                estimate = s;
                converged = true;
                break;
            }
        }
        estimate = s;
        have_estimate = true;

        if (halvings >= max_halvings) break;
        ++halvings;
        h = h / 2;
    }

    DeOutcome out;
    out.value = estimate;
    out.last_correction = correction;
    out.samples = std::move(gs);
    out.rule.h = h;
    out.rule.t_lo = t_lo;
    out.rule.t_hi = t_hi;
    out.rule.halvings = halvings;
    out.rule.nodes = std::move(xs);
    out.rule.weights.reserve(phips.size());
    for (auto& p : phips) out.rule.weights.push_back(p * h);

    if (!converged)
        throw ConvergenceError("de_integrate: no convergence before the step-halving limit",
                               out.value, out.last_correction);
    return out;
}

}  // namespace oscint
