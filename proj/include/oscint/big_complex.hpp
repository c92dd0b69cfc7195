#pragma once

#include "oscint/big_real.hpp"

namespace oscint {

// Complex value over BigReal.  Division uses the textbook formula: the mpfr
// exponent range (|e| < 2^62) makes premature overflow in c^2+d^2 a non-issue.
struct BigComplex {
    BigReal re;
    BigReal im;

    BigComplex() : re(0), im(0) {}
    BigComplex(BigReal r) : re(std::move(r)), im(0) {}
    BigComplex(long r) : re(r), im(0) {}
    BigComplex(int r) : re(long(r)), im(0) {}
    BigComplex(BigReal r, BigReal i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_finite() const { return re.is_finite() && im.is_finite(); }

    void scale_by_pow2(long k) {
        re.scale_by_pow2(k);
        im.scale_by_pow2(k);
    }

    std::string to_string() const { return "(" + re.to_string() + ", " + im.to_string() + ")"; }
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
}
inline BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex operator*(const BigComplex& a, const BigReal& s) {
    return {a.re * s, a.im * s};
}
inline BigComplex operator*(const BigReal& s, const BigComplex& a) { return a * s; }

BigComplex operator/(const BigComplex& a, const BigComplex& b);

inline BigComplex& operator+=(BigComplex& a, const BigComplex& b) { return a = a + b; }
inline BigComplex& operator-=(BigComplex& a, const BigComplex& b) { return a = a - b; }
inline BigComplex& operator*=(BigComplex& a, const BigComplex& b) { return a = a * b; }
inline BigComplex& operator/=(BigComplex& a, const BigComplex& b) { return a = a / b; }

inline bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re == b.re && a.im == b.im;
}
inline bool operator!=(const BigComplex& a, const BigComplex& b) { return !(a == b); }

inline BigComplex conj(const BigComplex& z) { return {z.re, -z.im}; }
inline BigReal abs(const BigComplex& z) { return hypot(z.re, z.im); }
inline BigReal norm(const BigComplex& z) { return z.re * z.re + z.im * z.im; }
inline BigReal arg(const BigComplex& z) { return atan2(z.im, z.re); }

BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);  // principal branch; domain error at 0
BigComplex sqrt(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
BigComplex pow(const BigComplex& z, const BigComplex& w);

inline BigComplex imaginary_unit() { return {BigReal(0), BigReal(1)}; }

}  // namespace oscint
