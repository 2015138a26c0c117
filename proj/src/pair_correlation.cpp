#include "zpc/pair_correlation.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "zpc/errors.hpp"
#include "zpc/quadrature.hpp"
#include "zpc/summation.hpp"

namespace zpc {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kTile = 4096;  // pair-loop block size

std::span<const double> ordinates_upto(const ZeroSet& zs, double T) {
    if (!(T >= 3.0)) throw DomainError("pair correlation: requires T >= 3");
    if (T > zs.t_max)
        throw DomainError("pair correlation: T exceeds certified t_max");
    const auto n = static_cast<std::size_t>(
        std::upper_bound(zs.gammas.begin(), zs.gammas.end(), T) - zs.gammas.begin());
    return {zs.gammas.data(), n};
}

// Phase error model for the pair loop: gamma differences carry up to
// ulp(gamma_max) and log x up to relative 2^-52, both entering the reduced
// phase.  Coarse but honest upper bound.
double direct_err_bound(double T, double log_x, double n, double abs_weight_sum) {
    const double phase_err = 4e-16 * T * std::abs(log_x);
    return 2.0 * (2.2e-16 * (n + 2.0 * abs_weight_sum) +
                  2.0 * abs_weight_sum * phase_err) +
           1e-15;
}

}  // namespace

double weight(double beta, double u) {
    if (!(beta > 0.0)) throw DomainError("weight: requires beta > 0");
    const double b2 = 4.0 * beta * beta;
    return b2 / (b2 + u * u);
}

FEvaluation f_direct_log(const ZeroSet& zs, double log_x, double T, double beta) {
    if (!(beta > 0.0)) throw DomainError("f_direct: requires beta > 0");
    const auto g = ordinates_upto(zs, T);
    const auto n = g.size();

    KahanSum off_diag;
    KahanSum abs_w;
    // Tiles of 4096 in a fixed (jt, it, j, i) order: cache-friendly and
    // reproducible for any zero count.
    for (std::size_t jt = 0; jt < n; jt += kTile) {
        const std::size_t j_hi = std::min(n, jt + kTile);
        for (std::size_t it = 0; it <= jt; it += kTile) {
            const std::size_t i_hi = std::min(n, it + kTile);
            for (std::size_t j = jt; j < j_hi; ++j) {
                const double gj = g[j];
                const std::size_t i_end = std::min(i_hi, j);
                for (std::size_t i = it; i < i_end; ++i) {
                    const double d = gj - g[i];
                    const double w = weight(beta, d);
                    off_diag.add(w * cos_phase(d, log_x));
                    abs_w.add(w);
                }
            }
        }
    }

    FEvaluation ev;
    ev.x = std::exp(log_x);
    ev.T = T;
    ev.beta = beta;
    ev.method = FMethod::direct;
    ev.value = static_cast<double>(n) + 2.0 * off_diag.value();
    ev.err_estimate =
        direct_err_bound(T, log_x, static_cast<double>(n), abs_w.value());
    return ev;
}

FEvaluation f_direct(const ZeroSet& zs, double x, double T, double beta) {
    if (!(x >= 1.0)) throw DomainError("f_direct: requires x >= 1");
    FEvaluation ev = f_direct_log(zs, std::log(x), T, beta);
    ev.x = x;
    return ev;
}

FEvaluation f_integral(const ZeroSet& zs, double x, double T, double beta,
                       double tail_tol) {
    if (!(x >= 1.0)) throw DomainError("f_integral: requires x >= 1");
    if (!(beta > 0.0)) throw DomainError("f_integral: requires beta > 0");
    if (!(tail_tol >= 1e-12 && tail_tol <= 1e-4))
        throw DomainError("f_integral: tail_tol must be in [1e-12, 1e-4]");
    const auto g = ordinates_upto(zs, T);
    const auto n = static_cast<double>(g.size());
    const double log_x = std::log(x);

    FEvaluation ev;
    ev.x = x;
    ev.T = T;
    ev.beta = beta;
    ev.method = FMethod::integral;
    if (g.empty()) return ev;

    // |sum_{gamma<=T} e^{i gamma v}|^2 at v = log x +- u.
    auto a_of_v = [&g](double v) {
        KahanSum cs, ss;
        for (double gamma : g) {
            double s, c;
            sincos_phase(gamma, v, s, c);
            cs.add(c);
            ss.add(s);
        }
        const double c = cs.value(), s = ss.value();
        return c * c + s * s;
    };
    auto integrand = [&](double u) {
        return std::exp(-2.0 * beta * u) * (a_of_v(log_x + u) + a_of_v(log_x - u));
    };

    // Truncation from the trivial-bound scale: the dropped tail after U is
    // below tail_tol * beta*T*log^2 T; the sharper bound N^2 e^{-2 beta U}
    // lands in the error estimate.
    const double log_t = std::log(T);
    const double scale = std::max(n, 1.0);
    const double u_max =
        std::log(beta * T * log_t * log_t / tail_tol) / (2.0 * beta);
    const int panels0 =
        std::max(8, static_cast<int>(std::ceil(u_max * T / (10.0 * kPi))));

    const CompositeResult q =
        composite_gauss_doubling(integrand, 0.0, u_max, panels0, tail_tol * scale);
    const double tail_bound = n * n * std::exp(-2.0 * beta * u_max);

    ev.value = beta * q.value;
    ev.err_estimate = beta * q.err + tail_bound + 1e-15 * scale;
    return ev;
}

double weight_fourier_check(double beta, double v, double tol) {
    const double w = weight(beta, v);
    const double quad_tol = std::max(tol / 10.0, 1e-13);
    const double u_max = std::log(1.0 / quad_tol) / (2.0 * beta);
    auto integrand = [beta, v](double u) {
        return 2.0 * beta * std::exp(-2.0 * beta * u) * std::cos(v * u);
    };
    const QuadResult q = integrate_adaptive(integrand, 0.0, u_max, quad_tol);
    return std::abs(q.value - w);
}

double lemma2_rhs(const ZeroSet& zs, double x, double T, double beta,
                  double quad_tol) {
    if (!(x >= 1.0)) throw DomainError("lemma2_rhs: requires x >= 1");
    if (!(beta > 0.0)) throw DomainError("lemma2_rhs: requires beta > 0");
    if (!(quad_tol >= 1e-12 && quad_tol <= 1e-2))
        throw DomainError("lemma2_rhs: quad_tol must be in [1e-12, 1e-2]");
    const auto g = ordinates_upto(zs, T);
    const double log_x = std::log(x);

    const double f_at_x = f_direct_log(zs, log_x, T, 1.0).value;
    const double factor = beta * (1.0 - beta * beta);
    if (factor == 0.0 || g.empty()) return f_at_x;

    // |F(y,T)| <= F(1,T) for every y (triangle inequality), which bounds the
    // dropped tail rigorously.
    const double f_peak = f_direct_log(zs, 0.0, T, 1.0).value;
    const double target = quad_tol * std::max<double>(g.size(), 1);
    const double u_max =
        std::log(std::abs(factor) * (f_peak + std::abs(f_at_x)) /
                 (beta * 0.5 * target)) /
        (2.0 * beta);
    if (!(u_max > 0.0)) return f_at_x;

    auto integrand = [&](double u) {
        const double up = f_direct_log(zs, log_x + u, T, 1.0).value - f_at_x;
        const double dn = f_direct_log(zs, log_x - u, T, 1.0).value - f_at_x;
        return std::exp(-2.0 * beta * u) * (up + dn);
    };
    const int panels0 =
        std::max(8, static_cast<int>(std::ceil(u_max * T / (10.0 * kPi))));
    const CompositeResult q =
        composite_gauss_doubling(integrand, 0.0, u_max, panels0, 0.5 * target);
    return f_at_x + factor * q.value;
}

double normalized_f(const ZeroSet& zs, double x, double T) {
    const auto n = static_cast<double>(ordinates_upto(zs, T).size());
    if (n == 0.0) throw DomainError("normalized_f: no zeros at or below T");
    return f_direct(zs, x, T, 1.0).value / n;
}

}  // namespace zpc
