#pragma once

#include <mpfr.h>

#include <stdexcept>

namespace oscint {

// Working decimal-digit count plus guard digits governing all arithmetic.
// Arithmetic under a context is correct to a few ulp of
// decimal_digits + guard_digits.
struct PrecisionContext {
    int decimal_digits = 100;  // must be >= 16
    int guard_digits = 20;

    int working_digits() const { return decimal_digits + guard_digits; }
};

inline void validate(const PrecisionContext& ctx) {
    if (ctx.decimal_digits < 16)
        throw std::invalid_argument("PrecisionContext: decimal_digits must be >= 16");
    if (ctx.guard_digits < 0)
        throw std::invalid_argument("PrecisionContext: guard_digits must be >= 0");
}

// Binary precision holding `digits` decimal digits with a small safety margin.
inline mpfr_prec_t bits_for_digits(int digits) {
    // log2(10) = 3.3219...; +4 bits so the last decimal digit stays exact
    return static_cast<mpfr_prec_t>(digits * 3.3219280948873626 + 1.0) + 4;
}

// Thread-local precision at which new values and operation results are
// rounded.  Scoped changes via PrecisionScope.
mpfr_prec_t working_precision();
void set_working_precision(mpfr_prec_t bits);

class PrecisionScope {
  public:
    explicit PrecisionScope(mpfr_prec_t bits) : saved_(working_precision()) {
        set_working_precision(bits);
    }
    explicit PrecisionScope(const PrecisionContext& ctx)
        : PrecisionScope(bits_for_digits(ctx.working_digits())) {}
    ~PrecisionScope() { set_working_precision(saved_); }

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    mpfr_prec_t saved_;
};

}  // namespace oscint
