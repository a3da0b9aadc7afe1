#ifndef GLAISHER_SUMMATION_HPP
#define GLAISHER_SUMMATION_HPP

#include <cmath>

namespace glaisher {

/// Neumaier's variant of Kahan summation. The running compensation keeps
/// the low-order bits lost when adding terms of very different magnitude,
/// so large cancelling sums come out accurate to a few ulp of the result
/// rather than of the largest term.
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(double initial) : sum_(initial) {}

    CompensatedSum& add(double x) noexcept {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    CompensatedSum& operator+=(double x) noexcept { return add(x); }
    CompensatedSum& operator-=(double x) noexcept { return add(-x); }

    /// Adds a*b exactly (up to the compensation's own rounding) by splitting
    /// the product into its rounded value and the fused-multiply remainder.
    CompensatedSum& add_product(double a, double b) noexcept {
        const double p = a * b;
        const double e = std::fma(a, b, -p);
        add(p);
        comp_ += e;
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }
    double high() const noexcept { return sum_; }
    double low() const noexcept { return comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace glaisher

#endif  // GLAISHER_SUMMATION_HPP
