#pragma once

#include <cstdint>
#include <vector>

namespace zpc {

// Sieved von Mangoldt values Lambda(n) = log p for n = p^k (else 0) together
// with the Chebyshev prefix sums psi(n) = sum_{m<=n} Lambda(m).  Immutable
// after construction; queries are pure and thread-safe.
struct LambdaTable {
    std::int64_t n_max = 0;
    std::vector<double> lambda;      // index 0..n_max; lambda[0] = lambda[1] = 0
    std::vector<double> psi_prefix;  // psi_prefix[n] = psi(n), compensated order
};

// Segmented sieve (2^20 blocks, segments in parallel, merged in index order).
// 2 <= n_max <= 1e8; throws DomainError above the capacity limit.
LambdaTable sieve_lambda(std::int64_t n_max);

// psi(x) = psi_prefix[floor(x)]; right-continuous step convention.
double psi(double x, const LambdaTable& table);

// Prime test straight off the table: n is prime iff Lambda(n) = log n
// (prime powers carry log p <= (log n)/2, so the comparison has slack).
bool is_prime(const LambdaTable& table, std::int64_t n);

// pi(x) = #{p <= x}; agrees with an independent Eratosthenes count.
std::int64_t pi_count(double x, const LambdaTable& table);

// li(x) = int_2^x dt/log t (lower limit 2), adaptive quadrature to 1e-9
// absolute.  x >= 2; li(2) = 0.
double li(double x);

// x, psi(x), R(x) = psi(x) - x, pi(x), li(x), P(x) = pi(x) - li(x).
struct PntErrors {
    double x = 0.0;
    double psi = 0.0;
    double r = 0.0;
    std::int64_t pi = 0;
    double li = 0.0;
    double p = 0.0;
};
PntErrors pnt_errors(double x, const LambdaTable& table);

// Normalized residual of the R -> P transfer:
//   (P(x) - R(x)/log x + sqrt(x)/log x) * log^2 x / sqrt(x),
// which the RH transfer asserts is O(1).  x >= 100.
double rtop_residual(double x, const LambdaTable& table);

// J(x,h) = int_0^x (psi(t+h) - psi(t) - h)^2 dt, evaluated exactly: the
// integrand is piecewise constant between the breakpoints {n, n-h} over
// prime powers n, so the integral is a finite sum of width * value^2.
// Requires 1 <= h <= x <= n_max - h.
double j_second_moment(double x, double h, const LambdaTable& table);

}  // namespace zpc
