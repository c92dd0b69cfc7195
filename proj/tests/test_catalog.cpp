#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "oscint/catalog.hpp"
#include "oscint/special.hpp"
#include "test_util.hpp"

using namespace oscint;

TEST_CASE("catalog shape and lookup") {
    const auto& entries = catalog_entries();
    REQUIRE(entries.size() == 8);
    for (int id = 1; id <= 8; ++id) {
        CHECK(entries[id - 1].id == id);
        CHECK(catalog_entry(id).id == id);
        CHECK_FALSE(catalog_entry(id).description.empty());
        CHECK_FALSE(catalog_entry(id).integrand.name().empty());
    }
    CHECK_THROWS_AS(catalog_entry(0), std::out_of_range);
    CHECK_THROWS_AS(catalog_entry(9), std::out_of_range);
    CHECK_THROWS_AS(catalog_entry(-3), std::out_of_range);

    for (int id : {1, 3, 4, 5, 7}) CHECK_FALSE(catalog_entry(id).integrand.singular_at_zero());
    for (int id : {2, 6, 8}) CHECK(catalog_entry(id).integrand.singular_at_zero());
}

TEST_CASE("integrands stay finite across the quadrature range") {
    const PrecisionContext ctx{50};
    PrecisionScope scope(ctx);
    for (int id = 1; id <= 8; ++id) {
        Integrand f = catalog_entry(id).integrand;
        for (int e = -30; e <= 3; ++e) {
            BigReal v = f.eval(pow10(e));
            const std::string at = "id " + std::to_string(id) + " at 1e" + std::to_string(e);
            CHECK_MESSAGE(v.is_finite(), at);
        }
    }
}

TEST_CASE("references match their five-digit printed forms") {
    const PrecisionContext ctx{100};
    PrecisionScope scope(ctx);
    // printed values are rounded to five digits: allow half an ulp of the
    // last printed place
    auto printed = [&](int id, const char* text, long place) {
        CHECK_CLOSE_ABS(reference_value(id, ctx), BigReal(text), 5 * pow10(place));
    };
    printed(1, "0.69315", -6);
    printed(2, "-1.57080", -6);
    CHECK(reference_value(3, ctx) == BigReal(1));
    printed(4, "0.42102", -6);
    printed(5, "0.98310", -6);
    printed(6, "-1.2704", -5);
    printed(7, "0.76520", -6);
    printed(8, "-0.42102", -6);
}

TEST_CASE("references match the frozen oracles") {
    const PrecisionContext ctx{100};
    PrecisionScope scope(ctx);
    const BigReal tol = pow10(-98);
    CHECK_CLOSE_REL(reference_value(1, ctx), BigReal(oracles::log2), tol);
    CHECK_CLOSE_REL(reference_value(2, ctx), -BigReal(oracles::pi) / 2, tol);
    CHECK_CLOSE_REL(reference_value(4, ctx), BigReal(oracles::k0_1), tol);
    CHECK_CLOSE_REL(reference_value(5, ctx), BigReal(oracles::i0k0_half), tol);
    CHECK_CLOSE_REL(reference_value(6, ctx), BigReal(oracles::neg_gamma_minus_log2), tol);
    CHECK_CLOSE_REL(reference_value(7, ctx), BigReal(oracles::j0_1), tol);
    CHECK_CLOSE_REL(reference_value(8, ctx), -BigReal(oracles::k0_1), tol);
}

TEST_CASE("difference quotient is seamless at the series crossover") {
    const PrecisionContext ctx{100};
    Integrand f = catalog_entry(1).integrand;
    for (const char* text : {"0.0099", "0.01", "0.0101"}) {
        BigReal x, got;
        {
            PrecisionScope scope(ctx);
            x = BigReal(text);
            got = f.eval(x);
        }
        // naive quotient at 2.5x digits absorbs its own cancellation; the
        // same x (copies keep precision) pins both sides to one argument
        PrecisionScope scope(PrecisionContext{250});
        BigReal naive = (cos(ldexp(x, -1)) - cos(x)) / x;
        CHECK_CLOSE_REL(got, naive, pow10(-110));
    }
}

TEST_CASE("values at zero where the limit exists") {
    const PrecisionContext ctx{50};
    PrecisionScope scope(ctx);
    CHECK(catalog_entry(1).integrand.eval(BigReal(0)) == BigReal(0));
    CHECK(catalog_entry(7).integrand.eval(BigReal(0)) == BigReal(0));
    CHECK(catalog_entry(3).integrand.eval(BigReal(0)) == BigReal(1));
}

TEST_CASE("evaluation counters are per-copy") {
    const PrecisionContext ctx{30};
    PrecisionScope scope(ctx);
    Integrand f = catalog_entry(3).integrand;  // copy: independent counter
    f.reset_count();
    CHECK(f.eval_count() == 0);
    f.eval(BigReal(1));
    f.eval(BigReal(2));
    CHECK(f.eval_count() == 2);

    Integrand g = f;
    CHECK(g.eval_count() == 2);  // copies start from the source's tally
    g.eval(BigReal(3));
    CHECK(g.eval_count() == 3);
    CHECK(f.eval_count() == 2);

    g.reset_count();
    CHECK(g.eval_count() == 0);
    CHECK(f.eval_count() == 2);
}
