#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "oscint/catalog.hpp"
#include "oscint/euler.hpp"
#include "oscint/special.hpp"
#include "test_util.hpp"

using namespace oscint;

namespace {

Integrand plain_cos() {
    return Integrand([](const BigReal& x) { return cos(x); }, "cos");
}

}  // namespace

TEST_CASE("find_partition locates cosine sign changes") {
    const PrecisionContext ctx{30};
    PrecisionScope scope(ctx);
    Integrand f = plain_cos();
    f.reset_count();

    Partition part = find_partition(f, 6, constant_pi() / 8);
    REQUIRE(part.points.size() == 7);
    CHECK(part.panel_count() == 6);
    CHECK(part.points[0] == BigReal(0));
    CHECK(f.eval_count() > 0);  // scanning and bisection all land on the counter
    for (int k = 1; k <= 6; ++k) {
        CHECK(part.points[k] > part.points[k - 1]);
        CHECK_CLOSE_ABS(part.points[k], (2 * k - 1) * constant_pi() / 2, pow10(-25));
    }

    // the sign-verification pass changes nothing about the points themselves
    auto rule = gauss_legendre(40, ctx);
    Partition verified = find_partition(plain_cos(), 6, constant_pi() / 8, &rule);
    REQUIRE(verified.points.size() == part.points.size());
    for (std::size_t i = 0; i < part.points.size(); ++i)
        CHECK(verified.points[i] == part.points[i]);
}

TEST_CASE("find_partition brackets bessel zeros") {
    const PrecisionContext ctx{30};
    PrecisionScope scope(ctx);
    Integrand f([](const BigReal& x) { return bessel_j0(x); }, "J0");
    Partition part = find_partition(f, 4, constant_pi() / 8);
    REQUIRE(part.points.size() == 5);
    CHECK_CLOSE_ABS(part.points[1], BigReal(oracles::j0_zero1), pow10(-25));
    CHECK_CLOSE_ABS(part.points[2], BigReal(oracles::j0_zero2), pow10(-25));
}

TEST_CASE("find_partition failure modes") {
    const PrecisionContext ctx{30};
    PrecisionScope scope(ctx);
    Integrand decay([](const BigReal& x) { return exp(-x); }, "exp(-x)");
    CHECK_THROWS_AS(find_partition(decay, 4, constant_pi() / 8), PartitionError);

    Integrand f = plain_cos();
    CHECK_THROWS_AS(find_partition(f, 3, constant_pi() / 8), std::invalid_argument);
    CHECK_THROWS_AS(find_partition(f, 6, BigReal(0)), std::invalid_argument);
    CHECK_THROWS_AS(find_partition(f, 6, BigReal(-1)), std::invalid_argument);
}

TEST_CASE("euler_sum on classical series") {
    const PrecisionContext ctx{30};
    PrecisionScope scope(ctx);

    // Grandi: 1 - 1 + 1 - ... has all higher differences zero
    CHECK(euler_sum(std::vector<BigReal>(10, BigReal(1))) == BigReal("0.5"));

    // ten geometric terms, frozen value: the transform is dyadic-exact but
    // sits ~6.4e-7 from 2/3; ten plain terms cannot reach 30 digits
    std::vector<BigReal> geo;
    BigReal t(1);
    for (int k = 0; k < 10; ++k) {
        geo.push_back(t);
        t = ldexp(t, -1);
    }
    BigReal s = euler_sum(geo);
    CHECK_CLOSE_ABS(s, BigReal(oracles::plain_euler_geo10), pow10(-40));
    BigReal gap = abs(s - BigReal(2) / 3);
    CHECK(gap > pow10(-7));
    CHECK(gap < pow10(-6));

    // alternating harmonic: 40 transformed terms reach ~2^-40
    std::vector<BigReal> harmonic;
    for (int k = 0; k < 40; ++k) harmonic.emplace_back(BigReal(1) / (k + 1));
    CHECK_CLOSE_ABS(euler_sum(harmonic), constant_log2(), pow10(-12));

    CHECK_THROWS_AS(euler_sum({}), std::invalid_argument);
    CHECK_THROWS_AS(euler_sum({BigReal(1), BigReal(-1)}), std::invalid_argument);
}

TEST_CASE("euler_value accounting at small K") {
    const PrecisionContext ctx{30};
    PrecisionScope scope(ctx);
    auto rule = gauss_legendre(100, ctx);
    const auto& entry = catalog_entry(3);

    IntegralResult r = euler_value(entry.integrand, 10, rule, ctx, 3, reference_value(3, ctx));
    CHECK(r.id == 3);
    CHECK(r.method == "euler");
    CHECK(r.error.empty());
    CHECK(r.eval_count == 1000);  // exactly K * rule.n panel evaluations
    CHECK(r.panels_used == 10);
    CHECK(r.scan_count > 0);
    CHECK(r.k_used == -1);
    CHECK(BigReal(r.relative_error) <= pow10(-4));
    CHECK(BigReal(r.err_estimate) > BigReal(0));

    Integrand decay([](const BigReal& x) { return exp(-x); }, "exp(-x)");
    CHECK_THROWS_AS(euler_value(decay, 10, rule, ctx), PartitionError);
}

TEST_CASE("accuracy improves with K and beats raw truncation") {
    const PrecisionContext ctx{30};
    PrecisionScope scope(ctx);
    auto rule = gauss_legendre(100, ctx);

    for (int id : {2, 3, 5}) {
        const auto& entry = catalog_entry(id);
        BigReal ref = reference_value(id, ctx);
        std::vector<BigReal> errs;
        for (int K : {10, 20, 50}) {
            IntegralResult r = euler_value(entry.integrand, K, rule, ctx, id, ref);
            CHECK(r.eval_count == 100L * K);
            BigReal abs_err = abs(BigReal(r.value) - ref);
            errs.push_back(abs_err);
            // the error estimate stays on the cautious side of the truth
            CHECK(abs_err <= 10 * BigReal(r.err_estimate));

            // truncating the raw alternating series at the same K panels
            Partition part = find_partition(entry.integrand, K, constant_pi() / 8);
            BigReal raw(0);
            for (int j = 0; j < K; ++j) {
                if (j == 0 && entry.integrand.singular_at_zero())
                    raw += panel_integrate_graded(entry.integrand, part.points[1], rule);
                else
                    raw += panel_integrate(entry.integrand, part.points[j], part.points[j + 1],
                                           rule);
            }
            CHECK(abs_err < pow10(-3) * abs(raw - ref));
        }
        CHECK(errs[1] < errs[0]);
        CHECK(errs[2] < errs[1]);
        CHECK(errs[2] <= pow10(-20) * abs(ref));
    }
}
