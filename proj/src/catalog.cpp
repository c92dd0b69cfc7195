#include "oscint/catalog.hpp"

#include <stdexcept>

#include "oscint/special.hpp"

namespace oscint {

namespace {

// (cos(x/2) - cos x)/x loses all leading digits for small x; below the
// crossover switch to the series sum_{m>=1} (-1)^(m+1) (1 - 4^-m)
// x^(2m-1)/(2m)!, whose terms fall off faster than (x^2/4)^m
BigReal cos_difference_quotient(const BigReal& x) {
    static const BigReal crossover{"1e-2"};
    if (abs(x) >= crossover) {
        BigReal half = ldexp(x, -1);
        return (cos(half) - cos(x)) / x;
    }
    const BigReal ulp = ldexp(BigReal(1), -static_cast<long>(working_precision()));
    BigReal x2 = x * x;
    BigReal p = ldexp(x, -1);  // x^(2m-1)/(2m)! at m = 1
    BigReal q{0.25};           // 4^-m
    BigReal sum(0);
    int sign = 1;
    for (long m = 1; m <= 200; ++m) {
        BigReal term = (BigReal(1) - q) * p;
        sum = sign > 0 ? sum + term : sum - term;
        if (term <= ulp * abs(sum)) break;
        p = p * x2 / BigReal((2 * m + 1) * (2 * m + 2));
        q = ldexp(q, -2);
        sign = -sign;
    }
    return sum;
}

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> v;
    v.push_back({1, Integrand(cos_difference_quotient, "(cos(x/2) - cos x)/x"),
                 [](const PrecisionContext& ctx) {
                     PrecisionScope s(ctx);
                     return constant_log2();
                 },
                 "(cos(x/2) - cos x)/x  ->  log 2"});
    v.push_back({2, Integrand([](const BigReal& x) { return log(x) * cos(x); }, "log(x) cos x",
                              /*singular_at_zero=*/true),
                 [](const PrecisionContext& ctx) {
                     PrecisionScope s(ctx);
                     return -ldexp(constant_pi(), -1);
                 },
                 "log(x) cos x  ->  -pi/2"});
    v.push_back({3, Integrand([](const BigReal& x) { return bessel_j0(x); }, "J0(x)"),
                 [](const PrecisionContext& ctx) {
                     PrecisionScope s(ctx);
                     return BigReal(1);
                 },
                 "J0(x)  ->  1"});
    v.push_back({4,
                 Integrand([](const BigReal& x) { return x * bessel_j0(x) / (x * x + 1); },
                           "x J0(x)/(x^2 + 1)"),
                 [](const PrecisionContext& ctx) {
                     PrecisionScope s(ctx);
                     return bessel_k0(BigReal(1));
                 },
                 "x J0(x)/(x^2 + 1)  ->  K0(1)"});
    v.push_back({5,
                 Integrand([](const BigReal& x) { return bessel_j0(x) / sqrt(x * x + 1); },
                           "J0(x)/sqrt(x^2 + 1)"),
                 [](const PrecisionContext& ctx) {
                     PrecisionScope s(ctx);
                     BigReal half = ldexp(BigReal(1), -1);
                     return bessel_k0(half) * bessel_i0(half);
                 },
                 "J0(x)/sqrt(x^2 + 1)  ->  K0(1/2) I0(1/2)"});
    v.push_back({6, Integrand([](const BigReal& x) { return log(x) * bessel_j0(x); },
                              "log(x) J0(x)", /*singular_at_zero=*/true),
                 [](const PrecisionContext& ctx) {
                     PrecisionScope s(ctx);
                     return -constant_euler_gamma() - constant_log2();
                 },
                 "log(x) J0(x)  ->  -gamma - log 2"});
    v.push_back({7,
                 Integrand(
                     [](const BigReal& x) {
                         BigReal r = sqrt(x * x + 1);
                         return x * bessel_j1(r) / r;
                     },
                     "x J1(sqrt(x^2 + 1))/sqrt(x^2 + 1)"),
                 [](const PrecisionContext& ctx) {
                     PrecisionScope s(ctx);
                     return bessel_j0(BigReal(1));
                 },
                 "x J1(sqrt(x^2 + 1))/sqrt(x^2 + 1)  ->  J0(1)"});
    v.push_back({8, Integrand([](const BigReal& x) { return bessel_y0(x) / (x * x + 1); },
                              "Y0(x)/(x^2 + 1)", /*singular_at_zero=*/true),
                 [](const PrecisionContext& ctx) {
                     PrecisionScope s(ctx);
                     return -bessel_k0(BigReal(1));
                 },
                 "Y0(x)/(x^2 + 1)  ->  -K0(1)"});
    return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

const CatalogEntry& catalog_entry(int id) {
    const auto& v = catalog_entries();
    if (id < 1 || static_cast<std::size_t>(id) > v.size())
        throw std::out_of_range("catalog_entry: id must be in 1..8, got " + std::to_string(id));
    return v[static_cast<std::size_t>(id) - 1];
}

BigReal reference_value(int id, const PrecisionContext& ctx) {
    return catalog_entry(id).reference(ctx);
}

}  // namespace oscint
