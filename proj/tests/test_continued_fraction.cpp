#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "oscint/catalog.hpp"
#include "oscint/continued_fraction.hpp"
#include "oscint/special.hpp"
#include "test_util.hpp"

using namespace oscint;

namespace {

// exact dyadic coefficients of F(zeta) = 1/(1 - i zeta) about zeta0 = i
TaylorSeries geometric_series(int N) {
    std::vector<BigComplex> cs;
    BigComplex c(BigReal("0.5"));
    const BigComplex half_i(BigReal(0), BigReal("0.5"));
    for (int n = 0; n <= N; ++n) {
        cs.push_back(c);
        c *= half_i;
    }
    return TaylorSeries(imaginary_unit(), std::move(cs));
}

}  // namespace

TEST_CASE("rational series terminates the fraction") {
    const PrecisionContext ctx{40};
    PrecisionScope scope(ctx);

    auto [tab, cf] = qd_transform(geometric_series(10), ctx);

    // q_1^(n) = i/2 for every n, so the first e row is exactly zero and the
    // fraction stops after a single partial numerator
    REQUIRE(cf.a.size() == 2);
    CHECK(cf.a[0] == BigComplex(BigReal("0.5")));
    CHECK(cf.a[1] == BigComplex(BigReal(0), BigReal("-0.5")));
    REQUIRE(tab.breakdown_at.has_value());
    CHECK(*tab.breakdown_at == std::make_pair(1, 0));
    REQUIRE(tab.e.size() == 2);
    for (const auto& z : tab.e[1]) CHECK(z.is_zero());

    // 0.5 / (1 + (-i/2)(0 - i)) = 1, exactly, in dyadic arithmetic
    CfEvalResult at0 = cf_eval(cf, BigComplex(0), pow10(-30));
    CHECK(at0.value == BigComplex(1));
    CHECK(at0.k_used == 1);

    // w = 0 collapses every convergent to a0
    CfEvalResult atc = cf_eval(cf, imaginary_unit(), pow10(-30));
    CHECK(atc.value == BigComplex(BigReal("0.5")));
    CHECK(atc.k_used == 1);

    // F(i 10^-m) = 1/(1 + 10^-m) on the way down to the real axis
    auto vals = boundary_approach_values(cf, 6, pow10(-30));
    REQUIRE(vals.size() == 6);
    for (int m = 1; m <= 6; ++m)
        CHECK_CLOSE_REL(vals[m - 1], BigComplex(1 / (1 + pow10(-m))), pow10(-30));
}

TEST_CASE("convergents approach the series limit") {
    const PrecisionContext ctx{40};
    PrecisionScope scope(ctx);

    // c_n = 1/n!: F(zeta0 + w) = e^w
    std::vector<BigComplex> cs;
    for (int n = 0; n <= 12; ++n) cs.emplace_back(1 / factorial(n));
    auto [tab, cf] = qd_transform(TaylorSeries(imaginary_unit(), std::move(cs)), ctx);
    REQUIRE(cf.a.size() == 13);
    CHECK_FALSE(tab.breakdown_at.has_value());

    const BigComplex zeta = imaginary_unit() + BigComplex(BigReal("0.3"));
    const BigComplex want(exp(BigReal("0.3")));
    BigReal e2 = abs(convergent_at(cf, 2, zeta) - want);
    BigReal e6 = abs(convergent_at(cf, 6, zeta) - want);
    BigReal e12 = abs(convergent_at(cf, 12, zeta) - want);
    CHECK(e12 < e6);
    CHECK(e6 < e2);
    CHECK(e12 <= pow10(-15));

    CHECK(convergent_at(cf, 0, zeta) == cf.a[0]);
    CHECK_THROWS_AS(convergent_at(cf, -1, zeta), std::invalid_argument);
    CHECK_THROWS_AS(convergent_at(cf, 13, zeta), std::invalid_argument);
}

TEST_CASE("tableau re-derives bit for bit from the coefficients") {
    const PrecisionContext ctx{30};
    TaylorSeries ts = [&] {
        PrecisionScope scope(ctx);
        return taylor_coefficients(catalog_entry(4).integrand, imaginary_unit(), 16, ctx);
    }();
    auto [tab, cf] = qd_transform(ts, ctx);

    REQUIRE(tab.e.size() == 9);
    REQUIRE(tab.q.size() == 8);
    REQUIRE(cf.a.size() == 17);
    CHECK(tab.e[0].size() == 16);
    for (const auto& z : tab.e[0]) CHECK(z.is_zero());
    CHECK_FALSE(tab.breakdown_at.has_value());

    // replay every rhombus rule at the algorithm's own elevated precision and
    // in its operation order; equality must be exact
    PrecisionScope scope(PrecisionContext{(ctx.decimal_digits * 3 + 1) / 2, ctx.guard_digits});

    REQUIRE(tab.q[0].size() == 16);
    for (std::size_t n = 0; n < tab.q[0].size(); ++n)
        CHECK(tab.q[0][n] == ts.coeffs[n + 1] / ts.coeffs[n]);

    for (std::size_t k = 1; k < tab.e.size(); ++k)
        for (std::size_t n = 0; n < tab.e[k].size(); ++n)
            CHECK(tab.e[k][n] == tab.q[k - 1][n + 1] - tab.q[k - 1][n] + tab.e[k - 1][n + 1]);

    for (std::size_t k = 1; k < tab.q.size(); ++k)
        for (std::size_t n = 0; n < tab.q[k].size(); ++n)
            CHECK(tab.q[k][n] == tab.e[k][n + 1] / tab.e[k][n] * tab.q[k - 1][n + 1]);

    // a-row assembly: a0 = c0, a_{2k-1} = -q_k^(0), a_{2k} = -e_k^(0), each
    // rounded to pipeline precision on the way out
    const BigReal tol = pow10(-(ctx.working_digits() - 2));
    CHECK(cf.a[0] == ts.coeffs[0]);
    for (std::size_t k = 1; k <= 8; ++k) {
        CHECK_CLOSE_ABS(cf.a[2 * k - 1], -tab.q[k - 1][0], tol * (1 + abs(tab.q[k - 1][0])));
        CHECK_CLOSE_ABS(cf.a[2 * k], -tab.e[k][0], tol * (1 + abs(tab.e[k][0])));
    }
}

TEST_CASE("rescaling leaves every convergent bit-identical") {
    const PrecisionContext ctx{40};
    PrecisionScope scope(ctx);

    // partial numerators of 1e40 push |Q| out of the safe window within a few
    // levels; rescaled and raw runs must agree exactly, not just closely
    ContinuedFraction cf;
    cf.zeta0 = imaginary_unit();
    cf.a.emplace_back(1);
    for (int k = 0; k < 7; ++k) cf.a.emplace_back(BigReal("1e40"));
    const BigComplex zeta = imaginary_unit() + BigComplex(1);

    CfEvalResult scaled = cf_eval(cf, zeta, pow10(-60));
    CfEvalResult raw = cf_eval_no_rescaling(cf, zeta, pow10(-60));
    CHECK(scaled.rescale_exponent != 0);
    CHECK(raw.rescale_exponent == 0);
    CHECK(scaled.value == raw.value);
    CHECK(scaled.err_estimate == raw.err_estimate);
    CHECK(scaled.k_used == raw.k_used);
}

TEST_CASE("rescaling invariance on pipeline fractions") {
    const PrecisionContext ctx{30};
    PrecisionScope scope(ctx);
    for (int id : {2, 3, 5, 8}) {
        TaylorSeries ts =
            taylor_coefficients(catalog_entry(id).integrand, imaginary_unit(), 24, ctx);
        auto [tab, cf] = qd_transform(ts, ctx);
        CfEvalResult a = cf_eval(cf, BigComplex(0), pow10(-40));
        CfEvalResult b = cf_eval_no_rescaling(cf, BigComplex(0), pow10(-40));
        CHECK(a.value == b.value);
        CHECK(a.k_used == b.k_used);
    }
}

TEST_CASE("failure modes") {
    const PrecisionContext ctx{30};
    PrecisionScope scope(ctx);

    // 1/(1 + w) has a pole at w = -1
    ContinuedFraction pole;
    pole.zeta0 = imaginary_unit();
    pole.a = {BigComplex(1), BigComplex(1)};
    try {
        cf_eval(pole, imaginary_unit() - BigComplex(1), pow10(-20));
        FAIL("expected PoleError");
    } catch (const PoleError& e) {
        CHECK(e.k == 1);
    }

    ContinuedFraction single;
    single.zeta0 = imaginary_unit();
    single.a = {BigComplex(1)};
    CHECK_THROWS_AS(cf_eval(single, BigComplex(0), pow10(-20)), std::invalid_argument);
    CHECK_THROWS_AS(cf_eval(pole, BigComplex(0), BigReal(0)), std::invalid_argument);
    CHECK_THROWS_AS(cf_eval(pole, BigComplex(0), BigReal(-1)), std::invalid_argument);

    std::vector<BigComplex> zero_head{BigComplex(0), BigComplex(1), BigComplex(1)};
    CHECK_THROWS_AS(qd_transform(TaylorSeries(imaginary_unit(), zero_head), ctx),
                    DegenerateSeriesError);

    std::vector<BigComplex> dead_head{BigComplex(BigReal("1e-90")), BigComplex(1), BigComplex(1)};
    CHECK_THROWS_AS(qd_transform(TaylorSeries(imaginary_unit(), dead_head), ctx),
                    SeriesTooShortError);
}

TEST_CASE("full pipeline at the default center") {
    const PrecisionContext ctx{40};
    PrecisionScope scope(ctx);
    for (int id : {2, 4, 5}) {
        const auto& entry = catalog_entry(id);
        HyperfunctionConfig cfg;
        cfg.precision = ctx;
        cfg.id = id;
        cfg.reference = reference_value(id, ctx);
        BigReal im_residue(1);
        IntegralResult r = hyperfunction_value(entry.integrand, cfg, &im_residue);

        CHECK(r.id == id);
        CHECK(r.method == "hyperfunction");
        CHECK(r.error.empty());
        CHECK(r.k_used >= 1);
        CHECK(r.k_used <= 100);
        CHECK(r.eval_count <= 2000);
        CHECK(BigReal(r.relative_error) <= pow10(-20));
        // at zeta0 = i the even/odd coefficient structure makes Im F(0) an
        // exact zero, not merely a small number
        CHECK(im_residue.is_zero());
    }
}

TEST_CASE("full pipeline at a generic center") {
    const PrecisionContext ctx{40};
    PrecisionScope scope(ctx);
    const auto& entry = catalog_entry(3);
    HyperfunctionConfig cfg;
    cfg.precision = ctx;
    cfg.zeta0 = BigComplex(BigReal("0.5"), BigReal(1));
    cfg.id = 3;
    cfg.reference = reference_value(3, ctx);
    BigReal im_residue;
    IntegralResult r = hyperfunction_value(entry.integrand, cfg, &im_residue);

    CHECK(BigReal(r.relative_error) <= pow10(-20));
    CHECK(im_residue > BigReal(0));  // genuinely complex arithmetic now
    CHECK(im_residue <= pow10(-20));

    HyperfunctionConfig bad;
    bad.precision = PrecisionContext{8};
    CHECK_THROWS_AS(hyperfunction_value(entry.integrand, bad), std::invalid_argument);
}

TEST_CASE("discrete circle moments recover the coefficients") {
    const PrecisionContext ctx{30};
    TaylorSeries ts = [&] {
        PrecisionScope scope(ctx);
        return taylor_coefficients(catalog_entry(3).integrand, imaginary_unit(), 20, ctx);
    }();

    // m = k+2 samples on a radius-1e-10 circle: the first aliased term
    // c_{k+m} rho^m keeps the recovery honest to ~1e-15 at worst
    for (int k = 0; k <= 6; ++k) {
        const int m = k + 2;
        PrecisionScope scope(PrecisionContext{ctx.decimal_digits + 10 * k + 40});
        const BigReal rho = pow10(-10);
        const BigReal two_pi = ldexp(constant_pi(), 1);
        BigComplex sum;
        for (int j = 0; j < m; ++j) {
            BigReal ang = two_pi * j / m;
            BigComplex omega(cos(ang), sin(ang));
            BigComplex value = series_eval(ts, ts.zeta0 + rho * omega);
            BigComplex twiddle(cos(ang * k), -sin(ang * k));
            sum += value * twiddle;
        }
        BigComplex moment = sum / BigComplex(BigReal(m) * pow(rho, static_cast<long>(k)));
        CHECK_CLOSE_ABS(moment, ts.coeffs[k], pow10(-15) * (1 + abs(ts.coeffs[k])));
    }
}
