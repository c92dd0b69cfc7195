#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "oscint/precision.hpp"

namespace oscint {

// Arbitrary-precision real value.  Results of every operation are rounded to
// the thread-local working precision; copies preserve the source's precision,
// so values round-trip exactly through copy and decimal serialization.
class BigReal {
  public:
    BigReal() { mpfr_init2(v_, working_precision()); }
    BigReal(long x) : BigReal() { mpfr_set_si(v_, x, MPFR_RNDN); }
    BigReal(int x) : BigReal(static_cast<long>(x)) {}
    explicit BigReal(double x) : BigReal() { mpfr_set_d(v_, x, MPFR_RNDN); }
    explicit BigReal(std::string_view decimal) : BigReal() {
        if (mpfr_set_str(v_, std::string(decimal).c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("BigReal: unparsable decimal literal");
    }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigReal(BigReal&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigReal() { mpfr_clear(v_); }

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
    // base-2 exponent of the leading bit; 0 for zero
    long exponent2() const { return is_zero() ? 0 : mpfr_get_exp(v_); }

    // exact scaling by 2^k at unchanged precision
    void scale_by_pow2(long k) { mpfr_mul_2si(v_, v_, k, MPFR_RNDN); }

    // Shortest decimal form that re-reads (at the same precision) to the
    // identical value; scientific notation, lowercase 'e'.
    std::string to_string() const;
    // rounded to `digits` significant digits
    std::string to_string(int digits) const;

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a);

    BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
    BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
    BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
    BigReal& operator/=(const BigReal& o) { return *this = *this / o; }

    friend bool operator==(const BigReal& a, const BigReal& b) {
        return mpfr_equal_p(a.v_, b.v_) != 0;
    }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) {
        return mpfr_less_p(a.v_, b.v_) != 0;
    }
    friend bool operator<=(const BigReal& a, const BigReal& b) {
        return mpfr_lessequal_p(a.v_, b.v_) != 0;
    }
    friend bool operator>(const BigReal& a, const BigReal& b) {
        return mpfr_greater_p(a.v_, b.v_) != 0;
    }
    friend bool operator>=(const BigReal& a, const BigReal& b) {
        return mpfr_greaterequal_p(a.v_, b.v_) != 0;
    }

  private:
    mpfr_t v_;
};

BigReal operator+(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a, const BigReal& b);
BigReal operator*(const BigReal& a, const BigReal& b);
BigReal operator/(const BigReal& a, const BigReal& b);
BigReal operator-(const BigReal& a);

inline BigReal operator+(const BigReal& a, long b) { return a + BigReal(b); }
inline BigReal operator+(long a, const BigReal& b) { return BigReal(a) + b; }
inline BigReal operator-(const BigReal& a, long b) { return a - BigReal(b); }
inline BigReal operator-(long a, const BigReal& b) { return BigReal(a) - b; }
inline BigReal operator*(const BigReal& a, long b) { return a * BigReal(b); }
inline BigReal operator*(long a, const BigReal& b) { return BigReal(a) * b; }
inline BigReal operator/(const BigReal& a, long b) { return a / BigReal(b); }
inline BigReal operator/(long a, const BigReal& b) { return BigReal(a) / b; }

// elementary functions; results at working precision
BigReal abs(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);  // domain error for x <= 0
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal sqrt(const BigReal& x);  // domain error for x < 0
BigReal pow(const BigReal& x, const BigReal& y);
BigReal pow(const BigReal& x, long n);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal hypot(const BigReal& x, const BigReal& y);
BigReal min(const BigReal& a, const BigReal& b);
BigReal max(const BigReal& a, const BigReal& b);
BigReal ldexp(const BigReal& x, long k);  // exact x * 2^k

// 10^n at working precision
BigReal pow10(long n);

// re-round to the current working precision (identity when precisions match)
inline BigReal round_to_working(const BigReal& x) {
    BigReal r;
    mpfr_set(r.get(), x.get(), MPFR_RNDN);
    return r;
}

}  // namespace oscint
