#pragma once

namespace zpc {

// The schedule beta(T): constant, the power family (log T)^(3-2a) with fixed
// 0 < a <= 3/2, or the Gallagher-Mueller style
// log^3 T / (A^4 (log log 2T)^2) with A > 1.
//
// The power family is >= 1 and non-decreasing for T >= e; the GM family dips
// below 1 at small heights and is non-decreasing only from a (parameter-
// dependent, recorded) T0 upward -- callers that require beta >= 1 enforce it
// where the conjectures do, namely at heights T >= 3.
struct BetaSchedule {
    enum class Kind { constant, cor1_power, cor3_gm };
    Kind kind = Kind::constant;
    double a = 1.5;  // cor1_power exponent parameter, 0 < a <= 3/2
    double A = 2.0;  // cor3_gm constant, > 1
    double c = 1.0;  // constant value

    double operator()(double T) const;

    static BetaSchedule constant(double value);
    static BetaSchedule cor1_power(double a);
    static BetaSchedule cor3_gm(double A);
};

// The schedule L(T): log T, the proxy 2 log T for log x in the x ~ T^2
// regime, or (log T)^exponent.
struct EllSchedule {
    enum class Kind { logT, logx_proxy, custom_power };
    Kind kind = Kind::logT;
    double exponent = 1.0;

    double operator()(double T) const;

    static EllSchedule log_t();
    static EllSchedule logx_proxy();
    static EllSchedule custom_power(double exponent);
};

}  // namespace zpc
