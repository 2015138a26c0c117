#pragma once

#include "zpc/zero_set.hpp"

namespace zpc {

// Riemann-Siegel phase function, asymptotic form
//   theta(t) = (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3),
// valid for t >= 10 (truncation < 4e-9 there, < 1e-10 for t >= 21).
double riemann_siegel_theta(double t);

// Hardy's Z function, real-valued by construction, t >= 10.
//
// Two evaluation regimes, switched at t = 1024:
//   - t < 1024: Euler-Maclaurin for zeta(1/2+it) rotated by exp(i theta(t));
//     absolute error ~1e-9 (limited by the theta expansion at the low end).
//   - t >= 1024: Riemann-Siegel main sum plus remainder correction factors
//     C0..C3; absolute error <~ 5e-8 at the switch point, shrinking as
//     (t/2pi)^(-9/4).
// Sign is therefore correct whenever |Z(t)| > 1e-6 on the whole range.
double hardy_z(double t);

// Scan [10, t_max] for sign changes of Z on a grid finer than a quarter of
// the local Gram spacing (capped at 0.1), refine each bracket by bisection to
// refine_tol, and certify completeness against the counting formula with a
// 4x-density rescan on drift.  20 <= t_max <= 1e5, 1e-12 <= refine_tol <=
// 1e-6.  Throws ConvergenceError if the count cannot be reconciled.
ZeroSet find_zeros(double t_max, double refine_tol);

}  // namespace zpc
