#include "oscint/special.hpp"

#include <stdexcept>

namespace oscint {

BigReal constant_pi() {
    BigReal r;
    mpfr_const_pi(r.get(), MPFR_RNDN);
    return r;
}

BigReal constant_euler_gamma() {
    BigReal r;
    mpfr_const_euler(r.get(), MPFR_RNDN);
    return r;
}

BigReal constant_log2() {
    BigReal r;
    mpfr_const_log2(r.get(), MPFR_RNDN);
    return r;
}

BigReal bessel_j0(const BigReal& x) {
    if (x.sign() < 0) throw std::domain_error("J0: requires x >= 0");
    BigReal r;
    mpfr_j0(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal bessel_j1(const BigReal& x) {
    if (x.sign() < 0) throw std::domain_error("J1: requires x >= 0");
    BigReal r;
    mpfr_j1(r.get(), x.get(), MPFR_RNDN);
    return r;
}

BigReal bessel_y0(const BigReal& x) {
    if (x.sign() <= 0) throw std::domain_error("Y0: requires x > 0");
    BigReal r;
    mpfr_y0(r.get(), x.get(), MPFR_RNDN);
    return r;
}

namespace {

// I0 and K0 by the ascending series
//   I0(x) = sum_k (x^2/4)^k / (k!)^2
//   K0(x) = -(log(x/2) + gamma) I0(x) + sum_k (x^2/4)^k H_k / (k!)^2.
// The K0 form cancels ~2x/ln10 leading decimal digits at large x, which the
// caller compensates with guard digits; intended arguments are O(1).
void i0_k0_series(const BigReal& x, BigReal* i0_out, BigReal* k0_out) {
    BigReal q = x * x / 4;
    BigReal term(1), i0(1), ksum(0), h(0);
    BigReal eps = pow10(-(static_cast<long>(working_precision() / 3.32) + 8));
    for (long k = 1; k < 1000000; ++k) {
        term = term * q / (k * k);
        h += BigReal(1) / k;
        i0 += term;
        ksum += term * h;
        if (term < eps * i0 && term * h < eps * max(ksum, BigReal(1))) break;
    }
    if (i0_out) *i0_out = i0;
    if (k0_out) *k0_out = ksum - (log(x / 2) + constant_euler_gamma()) * i0;
}

}  // namespace

BigReal bessel_i0(const BigReal& x) {
    if (x.sign() < 0) throw std::domain_error("I0: requires x >= 0");
    if (x.is_zero()) return BigReal(1);
    BigReal i0;
    {
        // series terms reach ~e^x: carry 0.44*x extra decimal digits
        int extra = static_cast<int>(0.44 * x.to_double()) + 10;
        PrecisionScope scope(working_precision() + bits_for_digits(extra));
        i0_k0_series(BigReal(x), &i0, nullptr);
    }
    return round_to_working(i0);
}

BigReal bessel_k0(const BigReal& x) {
    if (x.sign() <= 0) throw std::domain_error("K0: requires x > 0");
    BigReal k0;
    {
        // cancellation between the log term and the sum loses ~0.87*x decimal
        // digits of the e^x-sized intermediates
        int extra = static_cast<int>(0.9 * x.to_double()) + 15;
        PrecisionScope scope(working_precision() + bits_for_digits(extra));
        i0_k0_series(BigReal(x), nullptr, &k0);
    }
    return round_to_working(k0);
}

BigReal lngamma(const BigReal& x) {
    if (x.sign() <= 0) throw std::domain_error("lngamma: requires x > 0");
    BigReal r;
    int sign = 0;
    mpfr_lgamma(r.get(), &sign, x.get(), MPFR_RNDN);
    return r;
}

BigReal factorial(unsigned long n) {
    BigReal r;
    mpfr_fac_ui(r.get(), n, MPFR_RNDN);
    return r;
}

}  // namespace oscint
