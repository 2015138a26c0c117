#pragma once

#include <complex>
#include <vector>

#include "zpc/schedules.hpp"
#include "zpc/zero_set.hpp"

namespace zpc {

// One dyadic block (s, t] of a zero sum at a fixed x:
//   value    = sum_{s<gamma<=t} x^{i gamma}
//   weighted = sum_{s<gamma<=t} x^{i gamma} / gamma
struct BlockSum {
    double x = 1.0;
    double s = 0.0;
    double t = 0.0;
    std::complex<double> value{0.0, 0.0};
    std::complex<double> weighted{0.0, 0.0};
};

// Truncated explicit-formula reconstruction
//   psi_Y(x) = x - 2 Re sum_{0<gamma<=Y} x^{1/2+i gamma} / (1/2 + i gamma)
//              - log 2pi - log(1 - x^-2)/2,
// so the residual against the sieve is the genuine zero-sum tail and keeps
// shrinking as Y grows.  x >= 2 and non-integer (psi jumps at prime powers;
// integer x raises a DomainError instead of silently picking a side);
// 14 < Y <= zs.t_max.
double truncated_psi(double x, double Y, const ZeroSet& zs);

// -2 Im sum_{W<gamma<=Y} x^{i gamma} / gamma, the zero-sum side of
// R(x)/sqrt(x) up to O(log^2 W).  14 <= W <= Y <= zs.t_max (W = Y gives 0).
double zero_sum_r(double x, double W, double Y, const ZeroSet& zs);

// Blocks (2^{k-1}, 2^k] covering (W, Y], boundaries clipped to W and Y, with
// k1, k2 fixed by 2^{k1-1} < W <= 2^{k1} and 2^{k2-1} < Y <= 2^{k2}.
// Summing the weighted parts over blocks regroups zero_sum_r's sum exactly.
std::vector<BlockSum> dyadic_blocks(double x, double W, double Y, const ZeroSet& zs);

// Ratio |sum_{s<gamma<=t} x^{i gamma}| / sqrt((t/beta(t)) * Fhat) where Fhat
// approximates max_{s<=v,v'<=t} F_{beta(v')}(x, v) on a geometric v-grid with
// forced endpoints.  F(x, .) only changes across ordinates, so when (s, t]
// holds fewer than 512 zeros the grid is augmented with v = gamma +-
// precision, making the max over v exact.  The ratio is 0 when the block sum
// is empty.  3 <= s < t <= zs.t_max, v_grid >= 8.
struct Lemma1Eval {
    double lhs = 0.0;
    double f_hat = 0.0;
    double ratio = 0.0;
};
Lemma1Eval lemma1_eval(double x, double s, double t, const BetaSchedule& beta_sched,
                       const ZeroSet& zs, int v_grid);
double lemma1_ratio(double x, double s, double t, const BetaSchedule& beta_sched,
                    const ZeroSet& zs, int v_grid);

}  // namespace zpc
