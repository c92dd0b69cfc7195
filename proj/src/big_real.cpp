#include "oscint/big_real.hpp"

#include <cstdlib>
#include <stdexcept>

namespace oscint {

namespace {
thread_local mpfr_prec_t g_working_bits = bits_for_digits(120);
}

mpfr_prec_t working_precision() { return g_working_bits; }

void set_working_precision(mpfr_prec_t bits) {
    if (bits < MPFR_PREC_MIN) throw std::invalid_argument("working precision too small");
    g_working_bits = bits;
}

namespace {

template <typename F>
BigReal unary(F op, const BigReal& a) {
    BigReal r;
    op(r.get(), a.get(), MPFR_RNDN);
    return r;
}

template <typename F>
BigReal binary(F op, const BigReal& a, const BigReal& b) {
    BigReal r;
    op(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) { return binary(mpfr_add, a, b); }
BigReal operator-(const BigReal& a, const BigReal& b) { return binary(mpfr_sub, a, b); }
BigReal operator*(const BigReal& a, const BigReal& b) { return binary(mpfr_mul, a, b); }
BigReal operator/(const BigReal& a, const BigReal& b) { return binary(mpfr_div, a, b); }

BigReal operator-(const BigReal& a) {
    // negation is exact: keep the operand's precision
    BigReal r(a);
    mpfr_neg(r.get(), r.get(), MPFR_RNDN);
    return r;
}

BigReal abs(const BigReal& x) {
    BigReal r(x);
    mpfr_abs(r.get(), r.get(), MPFR_RNDN);
    return r;
}

BigReal exp(const BigReal& x) { return unary(mpfr_exp, x); }

BigReal log(const BigReal& x) {
    if (x.sign() <= 0) throw std::domain_error("log: requires x > 0");
    return unary(mpfr_log, x);
}

BigReal sin(const BigReal& x) { return unary(mpfr_sin, x); }
BigReal cos(const BigReal& x) { return unary(mpfr_cos, x); }
BigReal sinh(const BigReal& x) { return unary(mpfr_sinh, x); }
BigReal cosh(const BigReal& x) { return unary(mpfr_cosh, x); }

BigReal sqrt(const BigReal& x) {
    if (x.sign() < 0) throw std::domain_error("sqrt: requires x >= 0");
    return unary(mpfr_sqrt, x);
}

BigReal pow(const BigReal& x, const BigReal& y) { return binary(mpfr_pow, x, y); }

BigReal pow(const BigReal& x, long n) {
    BigReal r;
    mpfr_pow_si(r.get(), x.get(), n, MPFR_RNDN);
    return r;
}

BigReal atan2(const BigReal& y, const BigReal& x) { return binary(mpfr_atan2, y, x); }
BigReal hypot(const BigReal& x, const BigReal& y) { return binary(mpfr_hypot, x, y); }
BigReal min(const BigReal& a, const BigReal& b) { return binary(mpfr_min, a, b); }
BigReal max(const BigReal& a, const BigReal& b) { return binary(mpfr_max, a, b); }

BigReal ldexp(const BigReal& x, long k) {
    BigReal r(x);
    r.scale_by_pow2(k);
    return r;
}

BigReal pow10(long n) {
    BigReal r;
    mpfr_ui_pow_ui(r.get(), 10, static_cast<unsigned long>(n < 0 ? -n : n), MPFR_RNDN);
    if (n < 0) mpfr_si_div(r.get(), 1, r.get(), MPFR_RNDN);
    return r;
}

std::string BigReal::to_string() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";

    mpfr_exp_t e;
    // n_digits = 0: mpfr chooses enough digits for an exact same-precision re-read
    char* s = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);

    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    std::size_t last = mant.find_last_not_of('0');
    mant.erase(last + 1);

    std::string out = sign + mant.substr(0, 1);
    out += '.';
    out += mant.size() > 1 ? mant.substr(1) : "0";
    out += 'e';
    out += std::to_string(static_cast<long>(e) - 1);
    return out;
}

std::string BigReal::to_string(int digits) const {
    if (digits < 1) throw std::invalid_argument("to_string: digits >= 1");
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";

    mpfr_exp_t e;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<std::size_t>(digits), v_, MPFR_RNDN);
    std::string mant(s);
    mpfr_free_str(s);

    std::string sign;
    if (mant[0] == '-') {
        sign = "-";
        mant.erase(0, 1);
    }
    std::string out = sign + mant.substr(0, 1);
    out += '.';
    out += mant.size() > 1 ? mant.substr(1) : "0";
    out += 'e';
    out += std::to_string(static_cast<long>(e) - 1);
    return out;
}

}  // namespace oscint
