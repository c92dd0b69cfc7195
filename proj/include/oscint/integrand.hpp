#pragma once

#include <atomic>
#include <functional>
#include <string>
#include <utility>

#include "oscint/big_real.hpp"

namespace oscint {

// Real-valued function on (0, inf) with an evaluation counter.  The counter
// is atomic so concurrent node evaluations count exactly.
class Integrand {
  public:
    Integrand() = default;
    Integrand(std::function<BigReal(const BigReal&)> fn, std::string name,
              bool singular_at_zero = false)
        : fn_(std::move(fn)), name_(std::move(name)), singular_at_zero_(singular_at_zero) {}

    Integrand(const Integrand& o)
        : fn_(o.fn_), name_(o.name_), singular_at_zero_(o.singular_at_zero_),
          count_(o.count_.load(std::memory_order_relaxed)) {}
    Integrand& operator=(const Integrand& o) {
        fn_ = o.fn_;
        name_ = o.name_;
        singular_at_zero_ = o.singular_at_zero_;
        count_.store(o.count_.load(std::memory_order_relaxed), std::memory_order_relaxed);
        return *this;
    }

    BigReal eval(const BigReal& x) const {
        count_.fetch_add(1, std::memory_order_relaxed);
        return fn_(x);
    }

    const std::string& name() const { return name_; }
    bool singular_at_zero() const { return singular_at_zero_; }
    long eval_count() const { return count_.load(std::memory_order_relaxed); }
    void reset_count() const { count_.store(0, std::memory_order_relaxed); }

  private:
    std::function<BigReal(const BigReal&)> fn_;
    std::string name_;
    bool singular_at_zero_ = false;
    mutable std::atomic<long> count_{0};
};

}  // namespace oscint
