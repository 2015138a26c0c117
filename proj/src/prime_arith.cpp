#include "zpc/prime_arith.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "zpc/errors.hpp"
#include "zpc/parallel.hpp"
#include "zpc/quadrature.hpp"
#include "zpc/summation.hpp"

namespace zpc {

namespace {

constexpr std::int64_t kSieveCapacity = 100000000;  // 1e8
constexpr std::int64_t kSegment = 1 << 20;

std::vector<std::int64_t> base_primes(std::int64_t limit) {
    std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i)
            composite[static_cast<std::size_t>(j)] = 1;
    }
    return primes;
}

}  // namespace

LambdaTable sieve_lambda(std::int64_t n_max) {
    if (n_max < 2) throw DomainError("sieve_lambda: n_max must be >= 2");
    if (n_max > kSieveCapacity)
        throw DomainError("sieve_lambda: n_max exceeds the 1e8 capacity limit");

    LambdaTable table;
    table.n_max = n_max;
    table.lambda.assign(static_cast<std::size_t>(n_max) + 1, 0.0);

    const auto sqrt_n = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n_max)));
    const auto primes = base_primes(std::max<std::int64_t>(2, sqrt_n + 1));

    // Primes in each segment get Lambda = log p; segments are independent.
    const auto n_segments =
        static_cast<std::size_t>((n_max + kSegment - 1) / kSegment);
    parallel_map_ordered<char>(n_segments, [&](std::size_t seg) {
        const std::int64_t lo = static_cast<std::int64_t>(seg) * kSegment;
        const std::int64_t hi = std::min<std::int64_t>(lo + kSegment, n_max + 1);
        std::vector<char> composite(static_cast<std::size_t>(hi - lo), 0);
        for (std::int64_t p : primes) {
            if (p * p >= hi) break;
            std::int64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::int64_t j = start; j < hi; j += p)
                composite[static_cast<std::size_t>(j - lo)] = 1;
        }
        for (std::int64_t n = std::max<std::int64_t>(2, lo); n < hi; ++n)
            if (!composite[static_cast<std::size_t>(n - lo)])
                table.lambda[static_cast<std::size_t>(n)] =
                    std::log(static_cast<double>(n));
        return char(0);
    });

    // Proper prime powers p^k, k >= 2, overwrite their composite-zero slots.
    for (std::int64_t p : primes) {
        const double log_p = std::log(static_cast<double>(p));
        for (std::int64_t q = p * p; q <= n_max; q *= p) {
            table.lambda[static_cast<std::size_t>(q)] = log_p;
            if (q > n_max / p) break;
        }
    }

    // Prefix sums in fixed index order with compensation.
    table.psi_prefix.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    KahanSum acc;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        acc.add(table.lambda[static_cast<std::size_t>(n)]);
        table.psi_prefix[static_cast<std::size_t>(n)] = acc.value();
    }
    return table;
}

double psi(double x, const LambdaTable& table) {
    if (!(x >= 2.0) || x > static_cast<double>(table.n_max))
        throw DomainError("psi: x out of [2, n_max]");
    return table.psi_prefix[static_cast<std::size_t>(std::floor(x))];
}

bool is_prime(const LambdaTable& table, std::int64_t n) {
    if (n < 2 || n > table.n_max) return false;
    return table.lambda[static_cast<std::size_t>(n)] >
           0.7 * std::log(static_cast<double>(n));
}

std::int64_t pi_count(double x, const LambdaTable& table) {
    if (!(x >= 2.0) || x > static_cast<double>(table.n_max))
        throw DomainError("pi_count: x out of [2, n_max]");
    const auto limit = static_cast<std::int64_t>(std::floor(x));
    std::int64_t count = 0;
    for (std::int64_t n = 2; n <= limit; ++n)
        if (is_prime(table, n)) ++count;
    return count;
}

double li(double x) {
    if (!(x >= 2.0)) throw DomainError("li: requires x >= 2");
    if (x == 2.0) return 0.0;
    auto integrand = [](double t) { return 1.0 / std::log(t); };
    return integrate_adaptive(integrand, 2.0, x, 0.5e-9).value;
}

PntErrors pnt_errors(double x, const LambdaTable& table) {
    PntErrors e;
    e.x = x;
    e.psi = psi(x, table);
    e.r = e.psi - x;
    e.pi = pi_count(x, table);
    e.li = li(x);
    e.p = static_cast<double>(e.pi) - e.li;
    return e;
}

double rtop_residual(double x, const LambdaTable& table) {
    if (!(x >= 100.0)) throw DomainError("rtop_residual: requires x >= 100");
    const PntErrors e = pnt_errors(x, table);
    const double lx = std::log(x);
    const double sx = std::sqrt(x);
    return (e.p - e.r / lx + sx / lx) * lx * lx / sx;
}

double j_second_moment(double x, double h, const LambdaTable& table) {
    if (!(h >= 1.0 && h <= x && x <= static_cast<double>(table.n_max) - h))
        throw DomainError("j_second_moment: requires 1 <= h <= x <= n_max - h");

    // Breakpoints of t -> psi(t+h) - psi(t) in (0, x): t = n (psi(t) jumps)
    // and t = n - h (psi(t+h) jumps), n running over prime powers.
    std::vector<double> cuts;
    const auto hi_n = static_cast<std::int64_t>(std::floor(x + h));
    for (std::int64_t n = 2; n <= hi_n; ++n) {
        if (table.lambda[static_cast<std::size_t>(n)] == 0.0) continue;
        const double dn = static_cast<double>(n);
        if (dn < x) cuts.push_back(dn);
        const double shifted = dn - h;
        if (shifted > 0.0 && shifted < x) cuts.push_back(shifted);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(x);

    // The integrand is constant on each piece; read its value at the piece
    // midpoint straight from the prefix table (no running-sum drift).
    KahanSum sum;
    double prev = 0.0;
    for (double cut : cuts) {
        if (cut <= prev) continue;
        const double mid = prev + 0.5 * (cut - prev);
        const double val =
            table.psi_prefix[static_cast<std::size_t>(std::floor(mid + h))] -
            table.psi_prefix[static_cast<std::size_t>(std::floor(mid))] - h;
        sum.add((cut - prev) * val * val);
        prev = cut;
    }
    return sum.value();
}

}  // namespace zpc
