#include "oscint/big_complex.hpp"

#include <stdexcept>

namespace oscint {

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    if (b.is_zero()) throw std::domain_error("complex division by zero");
    BigReal d = norm(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigComplex exp(const BigComplex& z) {
    BigReal m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

BigComplex log(const BigComplex& z) {
    if (z.is_zero()) throw std::domain_error("log: zero argument");
    return {log(abs(z)), arg(z)};
}

BigComplex sqrt(const BigComplex& z) {
    if (z.is_zero()) return {BigReal(0), BigReal(0)};
    // principal root via the stable half-angle form
    BigReal r = abs(z);
    BigReal u = sqrt((r + abs(z.re)) / 2);
    BigReal v = z.im / ldexp(u, 1);
    if (z.re.sign() >= 0) return {u, v};
    BigReal iv = z.im.sign() >= 0 ? u : -u;
    return {abs(v), iv};
}

BigComplex sin(const BigComplex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

BigComplex cos(const BigComplex& z) {
    return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}

BigComplex pow(const BigComplex& z, const BigComplex& w) {
    if (z.is_zero()) {
        if (w.is_zero()) return BigComplex(1);
        if (w.re.sign() > 0 && w.im.is_zero()) return BigComplex(0);
        throw std::domain_error("pow: zero base with non-positive exponent");
    }
    return exp(w * log(z));
}

}  // namespace oscint
