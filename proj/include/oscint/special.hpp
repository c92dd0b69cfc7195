#pragma once

#include "oscint/big_real.hpp"

namespace oscint {

// constants at working precision
BigReal constant_pi();
BigReal constant_euler_gamma();
BigReal constant_log2();

// Bessel functions of a real argument, correct to working precision.
// J0/J1/Y0 are valid for any x the quadrature can produce (x up to ~10^3).
// x <= 0 throws a domain error for Y0/K0; x < 0 throws for the others.
BigReal bessel_j0(const BigReal& x);
BigReal bessel_j1(const BigReal& x);
BigReal bessel_y0(const BigReal& x);
BigReal bessel_i0(const BigReal& x);
BigReal bessel_k0(const BigReal& x);

BigReal lngamma(const BigReal& x);  // x > 0
BigReal factorial(unsigned long n);

}  // namespace oscint
