#pragma once

#include <span>
#include <vector>

#include "zpc/prime_arith.hpp"
#include "zpc/scan_report.hpp"
#include "zpc/schedules.hpp"
#include "zpc/zero_set.hpp"

namespace zpc {

// Default range gauge W(x) = (log x)^A; the "large constant" A defaults to 4.
double w_of_x(double x, double A = 4.0);

// M(x) = sum_{k=1..k2} sqrt(L(2^k) / beta(2^k)) with k2 = ceil(log2 Y),
// Y = 3 sqrt(x) log^2(2x) (the proof's truncation height).  x >= 16.
// Schedule-domain error if beta(2^k) < 1 at any height 2^k >= 3 in range
// (k = 1 sits below the schedules' T >= 3 domain and is exempt).
double m_of_x(double x, const EllSchedule& ell, const BetaSchedule& beta);

// max over v in [1/(2 log T), 2 log T] of |F(xv,T) - F(x,T)|, sampled on a
// geometric grid with v_samples subdivisions (endpoints and v = 1 forced;
// doubling v_samples refines to a superset).  v_samples >= 16.
double conjecture2_stat(const ZeroSet& zs, double x, double T, int v_samples);

enum class Corollary { cor1, cor2, cor3, cor4 };

struct CorollaryParams {
    std::vector<double> xs;
    std::vector<double> Ts;
    double a = 1.5;                    // cor1 exponent
    double A = 2.0;                    // cor3 constant
    double range_A = 4.0;              // W(x) exponent for range annotation
    const LambdaTable* table = nullptr;  // enables the sieve-side column
};

// Per grid point: the assumed-bound ratio of the corollary (F_beta/(T log T)
// for cor1/cor3, F/(T log x) for cor2, F/N(T) - 1 for cor4) and, where sieve
// data covers x, the implied normalization R(x)/(sqrt(x) target(x)).
ScanReport corollary_schedule_report(const ZeroSet& zs, Corollary which,
                                     const CorollaryParams& params);

// Rows (x, R(x) / (sqrt(x) (logloglog x)^2)); the limsup of this ratio is
// conjectured to be 1/2pi, which the report records but does not assert.
// Each x must satisfy 100 <= x <= table.n_max.
ScanReport guess_normalization(std::span<const double> xs, const LambdaTable& table);

}  // namespace zpc
