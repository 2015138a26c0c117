#pragma once

#include "zpc/zero_set.hpp"

namespace zpc {

// Lorentzian pair weight w_beta(u) = 4 beta^2 / (4 beta^2 + u^2); beta = 1 is
// Montgomery's weight.  beta > 0.
double weight(double beta, double u);

struct WeightKernel {
    double beta;
    double operator()(double u) const { return weight(beta, u); }
};

enum class FMethod { direct, integral };

struct FEvaluation {
    double x = 1.0;
    double T = 0.0;
    double beta = 1.0;
    double value = 0.0;
    FMethod method = FMethod::direct;
    double err_estimate = 0.0;  // numerical evaluation error for the given
                                // ordinates; excludes their own uncertainty
};

// F_beta(x,T) = sum_{0<gamma,gamma'<=T} x^{i(gamma-gamma')} w_beta(gamma-gamma')
// by the O(N^2) pair loop: N(T) from the diagonal plus twice the cosine sum
// over ordered pairs.  Compensated accumulation, phases reduced mod 2pi in
// double-double.  Requires x >= 1, 3 <= T <= zs.t_max, beta > 0.
FEvaluation f_direct(const ZeroSet& zs, double x, double T, double beta);

// Same sum with log x passed directly (may be negative: the x <-> 1/x
// extension; the value is exactly even in log_x).
FEvaluation f_direct_log(const ZeroSet& zs, double log_x, double T, double beta);

// F_beta(x,T) = beta * int e^{-2 beta |u|} |sum_{gamma<=T} x^{i gamma} e^{i gamma u}|^2 du,
// by composite Gauss on [0, U] with the truncation U chosen from the trivial
// bound so the dropped tail is below tail_tol relative to the N(T) scale; the
// inner sum is O(N) per node.  err_estimate = doubling difference + tail.
FEvaluation f_integral(const ZeroSet& zs, double x, double T, double beta,
                       double tail_tol);

// |quadrature of beta * int e^{-2 beta |u|} e^{ivu} du  -  w_beta(v)|.
// The quadrature target scales with tol (1e-8 achievable for tol >= 1e-8).
double weight_fourier_check(double beta, double v, double tol);

// Right side of the exact identity
//   F_beta = F + beta(1 - beta^2) int (F(x e^u, T) - F(x, T)) e^{-2 beta |u|} du,
// with F = F_1 evaluated by f_direct at each quadrature node and the tail
// truncated via the trivial bound.  quad_tol is relative to the N(T) scale.
// At beta = 1 the integral is skipped and the result equals f_direct exactly.
double lemma2_rhs(const ZeroSet& zs, double x, double T, double beta,
                  double quad_tol);

// F_1(x,T) / N(T).
double normalized_f(const ZeroSet& zs, double x, double T);

}  // namespace zpc
