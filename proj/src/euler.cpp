#include "oscint/euler.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "oscint/errors.hpp"
#include "oscint/special.hpp"

namespace oscint {

namespace {

// panel integral over [points[j], points[j+1]], graded toward 0 on a
// singular first panel
BigReal panel_value(const Integrand& f, const Partition& part, std::size_t j,
                    const GaussLegendreRule& rule) {
    if (j == 0 && f.singular_at_zero()) return panel_integrate_graded(f, part.points[1], rule);
    return panel_integrate(f, part.points[j], part.points[j + 1], rule);
}

// partition points bracket sign changes but need not be exact zeros, so the
// alternation of panel integrals is enforced a posteriori: adjacent
// same-sign panels are merged (points and integrals in lockstep)
void enforce_alternation(std::vector<BigReal>& points, std::vector<BigReal>& integrals) {
    for (std::size_t j = 0; j + 1 < integrals.size();) {
        if (integrals[j].sign() * integrals[j + 1].sign() < 0) {
            ++j;
            continue;
        }
        integrals[j] = integrals[j] + integrals[j + 1];
        integrals.erase(integrals.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        points.erase(points.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        if (j > 0) --j;  // recheck against the previous panel
    }
    if (integrals.size() < 2) throw PartitionError("panel integrals do not alternate in sign");
}

}  // namespace

Partition find_partition(const Integrand& f, int K, const BigReal& scan_step,
                         const GaussLegendreRule* verify_rule) {
    if (K < 4) throw std::invalid_argument("find_partition: K must be >= 4");
    if (scan_step.sign() <= 0) throw std::invalid_argument("find_partition: scan_step must be > 0");

    Partition part;
    part.points.reserve(static_cast<std::size_t>(K) + 1);
    part.points.emplace_back(0);

    const BigReal bisect_tol = pow10(-30);
    const long scan_limit = 64L * K + 256;

    BigReal x = scan_step;
    BigReal fx = f.eval(x);
    for (long step = 1; static_cast<int>(part.points.size()) <= K; ++step) {
        if (step > scan_limit)
            throw PartitionError("fewer than " + std::to_string(K) +
                                 " sign changes within the scan limit");
        if (fx.is_zero()) {
            // grid point is an exact zero: take it as the abscissa directly
            part.points.push_back(x);
            x = x + scan_step;
            fx = f.eval(x);
            continue;
        }
        BigReal x_next = x + scan_step;
        BigReal fx_next = f.eval(x_next);
        if (fx.sign() * fx_next.sign() < 0) {
            // bisect [x, x_next] to 30 significant digits
            BigReal lo = x, hi = x_next, flo = fx;
            BigReal mid = ldexp(lo + hi, -1);
            while (hi - lo > bisect_tol * max(BigReal(1), abs(mid))) {
                BigReal fmid = f.eval(mid);
                if (fmid.is_zero()) break;
                if (fmid.sign() == flo.sign()) {
                    lo = mid;
                    flo = fmid;
                } else {
                    hi = mid;
                }
                mid = ldexp(lo + hi, -1);
            }
            part.points.push_back(mid);
        }
        x = std::move(x_next);
        fx = std::move(fx_next);
    }

    if (verify_rule) {
        std::vector<BigReal> panel_integrals;
        panel_integrals.reserve(static_cast<std::size_t>(K));
        for (std::size_t j = 0; j + 1 < part.points.size(); ++j)
            panel_integrals.push_back(panel_value(f, part, j, *verify_rule));
        enforce_alternation(part.points, panel_integrals);
    }
    return part;
}

BigReal euler_sum(const std::vector<BigReal>& terms) {
    if (terms.empty()) throw std::invalid_argument("euler_sum: empty term list");
    for (const BigReal& t : terms)
        if (t.sign() < 0) throw std::invalid_argument("euler_sum: terms must be non-negative");

    std::vector<BigReal> diff = terms;  // forward-difference table, built in place
    BigReal sum(0);
    BigReal coef(1);
    int sign = 1;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        coef = ldexp(coef, -1);  // 1 / 2^(j+1)
        sum = sign > 0 ? sum + diff[0] * coef : sum - diff[0] * coef;
        sign = -sign;
        for (std::size_t i = 0; i + j + 1 < terms.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    }
    return sum;
}

IntegralResult euler_value(const Integrand& f, int K, const GaussLegendreRule& rule,
                           const PrecisionContext& ctx, int id,
                           const std::optional<BigReal>& reference) {
    validate(ctx);
    const auto start = std::chrono::steady_clock::now();
    PrecisionScope scope(ctx);

    f.reset_count();
    Partition part = find_partition(f, K, constant_pi() / 8);
    const long scan_count = f.eval_count();

    f.reset_count();
    std::vector<BigReal> panel_integrals;
    panel_integrals.reserve(static_cast<std::size_t>(K));
    for (std::size_t j = 0; j + 1 < part.points.size(); ++j)
        panel_integrals.push_back(panel_value(f, part, j, rule));
    const long panel_evals = f.eval_count();
    enforce_alternation(part.points, panel_integrals);

    std::vector<BigReal> magnitudes;
    magnitudes.reserve(panel_integrals.size());
    for (const BigReal& t : panel_integrals) magnitudes.push_back(abs(t));

    // head summed directly, tail Euler-transformed
    const std::size_t p = (magnitudes.size() + 2) / 3;
    BigReal head(0);
    for (std::size_t k = 0; k < p; ++k)
        head = k % 2 == 0 ? head + magnitudes[k] : head - magnitudes[k];
    std::vector<BigReal> tail(magnitudes.begin() + static_cast<std::ptrdiff_t>(p),
                              magnitudes.end());
    BigReal transformed = euler_sum(tail);
    BigReal total = p % 2 == 0 ? head + transformed : head - transformed;

    // error estimate: shift from dropping the last panel
    BigReal err = tail.back();
    if (tail.size() >= 2) {
        std::vector<BigReal> tail_short(tail.begin(), tail.end() - 1);
        err = abs(transformed - euler_sum(tail_short));
    }

    BigReal value = panel_integrals[0].sign() >= 0 ? total : -total;

    IntegralResult r;
    r.id = id;
    r.method = "euler";
    r.value = value.to_string();
    r.err_estimate = err.to_string();
    r.eval_count = panel_evals;
    r.panels_used = static_cast<int>(magnitudes.size());
    r.scan_count = scan_count;
    if (reference) {
        r.reference = reference->to_string();
        r.relative_error = relative_error_from_strings(r.value, r.reference, ctx);
    }
    r.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return r;
}

}  // namespace oscint
