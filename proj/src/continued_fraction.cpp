#include "oscint/continued_fraction.hpp"

#include <chrono>

#include "oscint/errors.hpp"

namespace oscint {

namespace {

bool dead_pivot(const BigReal& mag, const BigReal& scale, const BigReal& eps) {
    return mag <= eps * scale;
}

}  // namespace

std::pair<QDTableau, ContinuedFraction> qd_transform(const TaylorSeries& s,
                                                     const PrecisionContext& ctx) {
    validate(ctx);
    const auto& c = s.coeffs;
    const int N = s.order();

    if (c[0].is_zero())
        throw DegenerateSeriesError("qd_transform: c0 = 0");

    // the rhombus rules amplify roundoff: run at 1.5x the pipeline digits
    PrecisionContext qd_ctx{(ctx.decimal_digits * 3 + 1) / 2, ctx.guard_digits};
    PrecisionScope scope(qd_ctx);
    const BigReal eps = pow10(-(static_cast<long>(qd_ctx.working_digits()) - 5));

    QDTableau tab;
    ContinuedFraction cf;
    cf.zeta0 = s.zeta0;
    cf.a.push_back(c[0]);

    if (dead_pivot(abs(c[0]), abs(c[1]), eps))
        throw SeriesTooShortError("qd_transform: breakdown at column 1");

    // e_0^(n) = 0
    tab.e.emplace_back(static_cast<std::size_t>(N), BigComplex(0));

    // q_1^(n) = c_{n+1}/c_n while the denominators stay alive
    std::vector<BigComplex> q1;
    for (int n = 0; n + 1 <= N; ++n) {
        if (n > 0 && dead_pivot(abs(c[n]), max(abs(c[n - 1]), abs(c[n + 1])), eps)) {
            tab.breakdown_at = {1, n};
            break;
        }
        q1.push_back(c[n + 1] / c[n]);
    }
    tab.q.push_back(std::move(q1));

    for (int k = 1;; ++k) {
        const auto& qk = tab.q[k - 1];    // q_k row
        const auto& ekm1 = tab.e[k - 1];  // e_{k-1} row
        cf.a.push_back(-qk[0]);           // a_{2k-1}
        if (qk.size() < 2 || ekm1.size() < 2) break;  // coefficients exhausted

        // e_k^(n) = q_k^(n+1) - q_k^(n) + e_{k-1}^(n+1)
        const std::size_t elen = std::min(qk.size(), ekm1.size()) - 1;
        std::vector<BigComplex> ek;
        std::vector<BigReal> ek_scale;
        ek.reserve(elen);
        for (std::size_t n = 0; n < elen; ++n) {
            ek.push_back(qk[n + 1] - qk[n] + ekm1[n + 1]);
            ek_scale.push_back(abs(qk[n + 1]) + abs(qk[n]) + abs(ekm1[n + 1]));
        }

        std::size_t first_dead = elen;
        for (std::size_t n = 0; n < elen; ++n)
            if (dead_pivot(abs(ek[n]), ek_scale[n], eps)) {
                first_dead = n;
                break;
            }

        if (first_dead == 0) {
            // terminating fraction (rational F up to roundoff)
            if (!tab.breakdown_at) tab.breakdown_at = {k, 0};
            tab.e.push_back(std::move(ek));
            break;
        }
        cf.a.push_back(-ek[0]);  // a_{2k}
        if (first_dead < elen && !tab.breakdown_at)
            tab.breakdown_at = {k, static_cast<int>(first_dead)};

        // q_{k+1}^(n) = (e_k^(n+1)/e_k^(n)) q_k^(n+1); both pivots must be alive
        std::size_t qlen = std::min(elen, first_dead) - 1;
        std::vector<BigComplex> qk1;
        qk1.reserve(qlen);
        for (std::size_t n = 0; n < qlen; ++n) qk1.push_back(ek[n + 1] / ek[n] * qk[n + 1]);
        tab.e.push_back(std::move(ek));
        if (qk1.empty()) break;
        tab.q.push_back(std::move(qk1));
    }

    {
        // coefficients are consumed at pipeline precision
        PrecisionScope back(ctx);
        for (auto& a : cf.a) a = BigComplex(round_to_working(a.re), round_to_working(a.im));
        cf.zeta0 = BigComplex(round_to_working(cf.zeta0.re), round_to_working(cf.zeta0.im));
    }
    return {std::move(tab), std::move(cf)};
}

namespace {

CfEvalResult cf_eval_impl(const ContinuedFraction& cf, const BigComplex& zeta,
                          const BigReal& tol, bool rescaling) {
    if (cf.a.size() < 2) throw std::invalid_argument("cf_eval: needs >= 2 coefficients");
    if (!(tol.sign() > 0)) throw std::invalid_argument("cf_eval: tol must be > 0");

    const BigComplex w = zeta - cf.zeta0;
    BigComplex P_prev(0), Q_prev(1), P = cf.a[0], Q(1);
    BigComplex v = P / Q, v_prev = v;
    BigReal diff = abs(v);  // placeholder until the first comparison
    long rescale_exp = 0;
    int k_used = 0;

    // |Q| window [1e-50, 1e50] as binary exponents
    const long exp_hi = 167, exp_lo = -167;

    for (std::size_t k = 1; k < cf.a.size(); ++k) {
        BigComplex aw = cf.a[k] * w;
        BigComplex P_new = aw * P_prev + P;
        BigComplex Q_new = aw * Q_prev + Q;
        P_prev = std::move(P);
        Q_prev = std::move(Q);
        P = std::move(P_new);
        Q = std::move(Q_new);

        if (Q.is_zero()) throw PoleError("cf_eval: zero denominator at convergent", static_cast<int>(k));

        if (rescaling) {
            long e = std::max(Q.re.is_zero() ? exp_lo : Q.re.exponent2(),
                              Q.im.is_zero() ? exp_lo : Q.im.exponent2());
            if (e > exp_hi || e < exp_lo) {
                P.scale_by_pow2(-e);
                Q.scale_by_pow2(-e);
                P_prev.scale_by_pow2(-e);
                Q_prev.scale_by_pow2(-e);
                rescale_exp -= e;
            }
        }

        v = P / Q;
        diff = abs(v - v_prev);
        k_used = static_cast<int>(k);
        if (diff <= tol * abs(v)) break;
        v_prev = v;
    }
    return {std::move(v), std::move(diff), k_used, rescale_exp};
}

}  // namespace

CfEvalResult cf_eval(const ContinuedFraction& cf, const BigComplex& zeta, const BigReal& tol) {
    return cf_eval_impl(cf, zeta, tol, true);
}

CfEvalResult cf_eval_no_rescaling(const ContinuedFraction& cf, const BigComplex& zeta,
                                  const BigReal& tol) {
    return cf_eval_impl(cf, zeta, tol, false);
}

BigComplex convergent_at(const ContinuedFraction& cf, int k, const BigComplex& zeta) {
    if (k < 0 || k >= static_cast<int>(cf.a.size()))
        throw std::invalid_argument("convergent_at: k out of range");
    const BigComplex w = zeta - cf.zeta0;
    BigComplex P_prev(0), Q_prev(1), P = cf.a[0], Q(1);
    for (int j = 1; j <= k; ++j) {
        BigComplex aw = cf.a[j] * w;
        BigComplex P_new = aw * P_prev + P;
        BigComplex Q_new = aw * Q_prev + Q;
        P_prev = std::move(P);
        Q_prev = std::move(Q);
        P = std::move(P_new);
        Q = std::move(Q_new);
    }
    return P / Q;
}

std::string relative_error_from_strings(const std::string& value, const std::string& reference,
                                        const PrecisionContext& ctx) {
    PrecisionScope scope(ctx);
    BigReal v(value), r(reference);
    return (abs(v - r) / abs(r)).to_string();
}

IntegralResult hyperfunction_value(const Integrand& f, const HyperfunctionConfig& config,
                                   BigReal* im_residue_out) {
    validate(config.precision);
    const auto start = std::chrono::steady_clock::now();
    PrecisionScope scope(config.precision);

    f.reset_count();
    TaylorSeries series =
        taylor_coefficients(f, config.zeta0, config.coefficients, config.precision);
    auto [tab, cf] = qd_transform(series, config.precision);

    BigReal tol = config.tol ? *config.tol : pow10(-config.precision.decimal_digits + 15);
    CfEvalResult ev = cf_eval(cf, BigComplex(0), tol);

    IntegralResult r;
    r.id = config.id;
    r.method = "hyperfunction";
    r.value = ev.value.re.to_string();
    r.err_estimate = ev.err_estimate.to_string();
    r.eval_count = f.eval_count();
    r.k_used = ev.k_used;
    if (config.reference) {
        r.reference = config.reference->to_string();
        r.relative_error = relative_error_from_strings(r.value, r.reference, config.precision);
    }
    if (im_residue_out) *im_residue_out = abs(ev.value.im);
    r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return r;
}

std::vector<BigComplex> boundary_approach_values(const ContinuedFraction& cf, int m_max,
                                                 const BigReal& tol) {
    std::vector<BigComplex> out;
    out.reserve(m_max);
    for (int m = 1; m <= m_max; ++m)
        out.push_back(cf_eval(cf, BigComplex(BigReal(0), pow10(-m)), tol).value);
    return out;
}

}  // namespace oscint
