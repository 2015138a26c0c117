#pragma once

#include <cmath>
#include <cstddef>

namespace zpc {

// Neumaier-compensated accumulator.  Used everywhere a sum must be
// reproducible and accurate to ~1 ulp of the true result independent of the
// number of terms (sieve prefix sums, O(N^2) pair sums, quadrature panels).
class KahanSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Exact product: a*b = hi + lo with lo = fma(a,b,-hi).
inline void two_prod(double a, double b, double& hi, double& lo) {
    hi = a * b;
    lo = std::fma(a, b, -hi);
}

// x mod 2pi, result in (-pi, pi] up to a few 1e-16.
//
// remainder(x, TP_HI) is exact (x - n*TP_HI with n = nearest integer), so the
// only error left is that TP_HI is not 2pi; correcting by n*TP_LO recovers
// the reduction to ~1 ulp for |x| up to ~1e12.  Naive fmod loses ~8 digits
// already at |x| ~ 1e6, which is routine here: phases (gamma - gamma')*log x
// reach 2.5e6 at gamma ~ 1e5, log x ~ 25.
inline double reduce_two_pi(double x) {
    constexpr double TP_HI = 6.283185307179586476925287;       // 2pi rounded
    constexpr double TP_LO = 2.4492935982947063545961595e-16;  // 2pi - TP_HI
    double r = std::remainder(x, TP_HI);
    double n = std::nearbyint((x - r) / TP_HI);
    return r - n * TP_LO;
}

// cos(a*b) and sin/cos pairs with the product carried as hi+lo through the
// reduction.  Odd symmetry is exact: negating either factor negates the
// reduced angle bit-for-bit, so cos_phase is exactly even in each argument.
inline double cos_phase(double a, double b) {
    double hi, lo;
    two_prod(a, b, hi, lo);
    return std::cos(reduce_two_pi(hi) + lo);
}

inline void sincos_phase(double a, double b, double& s, double& c) {
    double hi, lo;
    two_prod(a, b, hi, lo);
    double ang = reduce_two_pi(hi) + lo;
    s = std::sin(ang);
    c = std::cos(ang);
}

}  // namespace zpc
