#include "zpc/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "zpc/errors.hpp"
#include "zpc/pair_correlation.hpp"
#include "zpc/summation.hpp"

namespace zpc {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

void require_height(const ZeroSet& zs, double y, const char* who) {
    if (y > zs.t_max)
        throw DomainError(std::string(who) + ": height exceeds certified t_max");
}

}  // namespace

double truncated_psi(double x, double Y, const ZeroSet& zs) {
    if (!(x >= 2.0)) throw DomainError("truncated_psi: requires x >= 2");
    if (x == std::floor(x))
        throw DomainError("truncated_psi: x is an integer (psi jump point); "
                          "evaluate at x +- 1/2 instead");
    if (!(Y > 14.0)) throw DomainError("truncated_psi: requires Y > 14");
    require_height(zs, Y, "truncated_psi");

    const double log_x = std::log(x);
    const double sqrt_x = std::sqrt(x);
    // Re[x^{i gamma} / (1/2 + i gamma)] = (cos/2 + gamma sin) / (1/4 + gamma^2)
    KahanSum acc;
    for (double g : zs.gammas) {
        if (g > Y) break;
        double s, c;
        sincos_phase(g, log_x, s, c);
        acc.add((0.5 * c + g * s) / (0.25 + g * g));
    }
    // Constant and trivial-zero terms.  Without them the residual floors at
    // log 2pi ~ 1.84 and stops improving as Y grows.
    const double lower_order =
        -std::log(kTwoPi) - 0.5 * std::log1p(-1.0 / (x * x));
    return x - 2.0 * sqrt_x * acc.value() + lower_order;
}

double zero_sum_r(double x, double W, double Y, const ZeroSet& zs) {
    if (!(x >= 1.0)) throw DomainError("zero_sum_r: requires x >= 1");
    if (!(W >= 14.0 && W <= Y)) throw DomainError("zero_sum_r: requires 14 <= W <= Y");
    require_height(zs, Y, "zero_sum_r");

    const double log_x = std::log(x);
    KahanSum acc;
    const auto begin = std::upper_bound(zs.gammas.begin(), zs.gammas.end(), W);
    for (auto it = begin; it != zs.gammas.end() && *it <= Y; ++it) {
        double s, c;
        sincos_phase(*it, log_x, s, c);
        acc.add(s / *it);
    }
    return -2.0 * acc.value();
}

std::vector<BlockSum> dyadic_blocks(double x, double W, double Y, const ZeroSet& zs) {
    if (!(x >= 1.0)) throw DomainError("dyadic_blocks: requires x >= 1");
    if (!(W >= 14.0 && W < Y)) throw DomainError("dyadic_blocks: requires 14 <= W < Y");
    require_height(zs, Y, "dyadic_blocks");

    const int k1 = static_cast<int>(std::ceil(std::log2(W)));
    const int k2 = static_cast<int>(std::ceil(std::log2(Y)));
    const double log_x = std::log(x);

    std::vector<BlockSum> blocks;
    for (int k = k1; k <= k2; ++k) {
        BlockSum b;
        b.x = x;
        b.s = std::max(W, std::exp2(k - 1));
        b.t = std::min(Y, std::exp2(k));
        if (!(b.s < b.t)) continue;
        KahanSum vr, vi, wr, wi;
        const auto begin = std::upper_bound(zs.gammas.begin(), zs.gammas.end(), b.s);
        for (auto it = begin; it != zs.gammas.end() && *it <= b.t; ++it) {
            double s, c;
            sincos_phase(*it, log_x, s, c);
            vr.add(c);
            vi.add(s);
            wr.add(c / *it);
            wi.add(s / *it);
        }
        b.value = {vr.value(), vi.value()};
        b.weighted = {wr.value(), wi.value()};
        blocks.push_back(b);
    }
    return blocks;
}

Lemma1Eval lemma1_eval(double x, double s, double t, const BetaSchedule& beta_sched,
                       const ZeroSet& zs, int v_grid) {
    if (!(x >= 1.0)) throw DomainError("lemma1_ratio: requires x >= 1");
    if (!(s >= 3.0 && s < t)) throw DomainError("lemma1_ratio: requires 3 <= s < t");
    if (v_grid < 8) throw DomainError("lemma1_ratio: requires v_grid >= 8");
    require_height(zs, t, "lemma1_ratio");

    const double log_x = std::log(x);

    // Left side: |sum_{s<gamma<=t} x^{i gamma}|.
    KahanSum lhs_re, lhs_im;
    const auto begin = std::upper_bound(zs.gammas.begin(), zs.gammas.end(), s);
    const auto end = std::upper_bound(zs.gammas.begin(), zs.gammas.end(), t);
    for (auto it = begin; it != end; ++it) {
        double si, co;
        sincos_phase(*it, log_x, si, co);
        lhs_re.add(co);
        lhs_im.add(si);
    }
    Lemma1Eval out;
    out.lhs = std::hypot(lhs_re.value(), lhs_im.value());
    if (out.lhs == 0.0) return out;

    // Geometric v-grid with endpoints; F(x, .) steps only at ordinates, so
    // for small blocks add gamma +- precision to make the v-max exact.
    std::set<double> v_set;
    const double ratio_step = std::log(t / s) / (v_grid - 1);
    for (int i = 0; i < v_grid; ++i) v_set.insert(s * std::exp(i * ratio_step));
    v_set.insert(t);
    if (end - begin < 512) {
        for (auto it = begin; it != end; ++it) {
            if (*it - zs.precision > s) v_set.insert(*it - zs.precision);
            if (*it + zs.precision <= t) v_set.insert(*it + zs.precision);
        }
    }

    // beta values off the v'-grid (deduplicated; a constant schedule
    // collapses to a single sweep).
    std::set<double> beta_set;
    for (int i = 0; i < v_grid; ++i)
        beta_set.insert(beta_sched(s * std::exp(i * ratio_step)));
    beta_set.insert(beta_sched(t));

    // For each beta, sweep v ascending, extending the pair sum incrementally:
    // each newly admitted ordinate contributes 1 plus twice its cosine row
    // against the earlier ones.  O(N^2) per beta for the whole sweep.
    double f_hat = 0.0;
    const std::vector<double> vs(v_set.begin(), v_set.end());
    for (double beta : beta_set) {
        KahanSum off_diag;
        std::size_t admitted = 0;
        for (double v : vs) {
            while (admitted < zs.gammas.size() && zs.gammas[admitted] <= v) {
                const double gn = zs.gammas[admitted];
                for (std::size_t i = 0; i < admitted; ++i) {
                    const double d = gn - zs.gammas[i];
                    off_diag.add(weight(beta, d) * cos_phase(d, log_x));
                }
                ++admitted;
            }
            const double f = static_cast<double>(admitted) + 2.0 * off_diag.value();
            if (f > f_hat) f_hat = f;
        }
    }

    if (!(f_hat > 0.0)) return std::numeric_limits<double>::infinity();
    return lhs / std::sqrt(t / beta_sched(t) * f_hat);
}

}  // namespace zpc
