#include "zpc/conjecture_lab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zpc/errors.hpp"
#include "zpc/pair_correlation.hpp"
#include "zpc/parallel.hpp"
#include "zpc/summation.hpp"

namespace zpc {

// --- schedules -------------------------------------------------------------

double BetaSchedule::operator()(double T) const {
    switch (kind) {
        case Kind::constant:
            return c;
        case Kind::cor1_power:
            if (!(T > 1.0)) throw DomainError("BetaSchedule: requires T > 1");
            return std::pow(std::log(T), 3.0 - 2.0 * a);
        case Kind::cor3_gm: {
            if (!(2.0 * T > 2.72)) throw DomainError("BetaSchedule: requires 2T > e");
            const double ll = std::log(std::log(2.0 * T));
            const double lt = std::log(T);
            return lt * lt * lt / (A * A * A * A * ll * ll);
        }
    }
    throw DomainError("BetaSchedule: unknown kind");
}

BetaSchedule BetaSchedule::constant(double value) {
    if (!(value > 0.0)) throw DomainError("BetaSchedule: constant must be > 0");
    BetaSchedule b;
    b.kind = Kind::constant;
    b.c = value;
    return b;
}

BetaSchedule BetaSchedule::cor1_power(double a) {
    if (!(a > 0.0 && a <= 1.5))
        throw DomainError("BetaSchedule: cor1 exponent requires 0 < a <= 3/2");
    BetaSchedule b;
    b.kind = Kind::cor1_power;
    b.a = a;
    return b;
}

BetaSchedule BetaSchedule::cor3_gm(double A) {
    if (!(A > 1.0)) throw DomainError("BetaSchedule: cor3 requires A > 1");
    BetaSchedule b;
    b.kind = Kind::cor3_gm;
    b.A = A;
    return b;
}

double EllSchedule::operator()(double T) const {
    if (!(T > 1.0)) throw DomainError("EllSchedule: requires T > 1");
    switch (kind) {
        case Kind::logT:
            return std::log(T);
        case Kind::logx_proxy:
            return 2.0 * std::log(T);  // log x in the x ~ T^2 regime
        case Kind::custom_power:
            return std::pow(std::log(T), exponent);
    }
    throw DomainError("EllSchedule: unknown kind");
}

EllSchedule EllSchedule::log_t() { return {}; }

EllSchedule EllSchedule::logx_proxy() {
    EllSchedule e;
    e.kind = Kind::logx_proxy;
    return e;
}

EllSchedule EllSchedule::custom_power(double exponent) {
    if (!(exponent >= 1.0 && exponent <= 3.0))
        throw DomainError("EllSchedule: exponent must be in [1, 3]");
    EllSchedule e;
    e.kind = Kind::custom_power;
    e.exponent = exponent;
    return e;
}

// --- operations ------------------------------------------------------------

double w_of_x(double x, double A) {
    if (!(x > 1.0)) throw DomainError("w_of_x: requires x > 1");
    return std::pow(std::log(x), A);
}

double m_of_x(double x, const EllSchedule& ell, const BetaSchedule& beta) {
    if (!(x >= 16.0)) throw DomainError("m_of_x: requires x >= 16");
    const double lx2 = std::log(2.0 * x);
    const double y = 3.0 * std::sqrt(x) * lx2 * lx2;
    const int k2 = static_cast<int>(std::ceil(std::log2(y)));
    KahanSum sum;
    for (int k = 1; k <= k2; ++k) {
        const double T = std::exp2(k);
        const double b = beta(T);
        // Conjecture 1 requires beta >= 1 on its domain T >= 3; k = 1 (T = 2)
        // sits below it.
        if (T >= 3.0 && b < 1.0)
            throw DomainError("m_of_x: schedule has beta(2^" + std::to_string(k) +
                              ") = " + std::to_string(b) + " < 1");
        sum.add(std::sqrt(ell(T) / b));
    }
    return sum.value();
}

double conjecture2_stat(const ZeroSet& zs, double x, double T, int v_samples) {
    if (!(x >= 1.0)) throw DomainError("conjecture2_stat: requires x >= 1");
    if (v_samples < 16) throw DomainError("conjecture2_stat: requires v_samples >= 16");
    if (!(T >= 3.0) || T > zs.t_max)
        throw DomainError("conjecture2_stat: T out of [3, t_max]");
    const double log_t = std::log(T);
    const double log_x = std::log(x);
    const double log_vmax = std::log(2.0 * log_t);
    if (log_x + log_vmax > 25.0)
        throw DomainError("conjecture2_stat: x * 2 log T beyond the phase-safe "
                          "range (log <= 25)");

    const double f_ref = f_direct_log(zs, log_x, T, 1.0).value;
    // Geometric grid over [1/(2 log T), 2 log T]: v_i = vmin (vmax/vmin)^(i/n),
    // so doubling v_samples yields a superset; v = 1 is forced.
    std::vector<double> log_vs;
    log_vs.reserve(static_cast<std::size_t>(v_samples) + 2);
    for (int i = 0; i <= v_samples; ++i)
        log_vs.push_back(-log_vmax +
                         2.0 * log_vmax * static_cast<double>(i) / v_samples);
    log_vs.push_back(0.0);

    const auto diffs = parallel_map_ordered<double>(
        log_vs.size(), [&](std::size_t i) {
            if (log_vs[i] == 0.0) return 0.0;
            return std::abs(f_direct_log(zs, log_x + log_vs[i], T, 1.0).value - f_ref);
        });
    double stat = 0.0;
    for (double d : diffs) stat = std::max(stat, d);
    return stat;
}

namespace {

std::string corollary_name(Corollary c) {
    switch (c) {
        case Corollary::cor1: return "cor1";
        case Corollary::cor2: return "cor2";
        case Corollary::cor3: return "cor3";
        case Corollary::cor4: return "cor4";
    }
    return "?";
}

}  // namespace

ScanReport corollary_schedule_report(const ZeroSet& zs, Corollary which,
                                     const CorollaryParams& params) {
    if (params.xs.empty() || params.Ts.empty())
        throw DomainError("corollary_schedule_report: empty grid");

    ScanReport rep;
    rep.columns = {"corollary", "x",      "T",        "beta",  "bound_ratio",
                   "r_norm",    "status", "range_ok", "t_max"};
    rep.metadata["corollary"] = corollary_name(which);
    rep.metadata["zero_t_max"] = format_g17(zs.t_max);
    rep.metadata["zero_count"] = std::to_string(zs.gammas.size());
    rep.metadata["zero_source"] =
        zs.source == ZeroSource::computed ? "computed" : "ingested";
    rep.metadata["a"] = format_g17(params.a);
    rep.metadata["A"] = format_g17(params.A);

    struct Cell {
        std::vector<std::string> row;
        double ratio = 0.0;
        bool ok = false;
    };
    const std::size_t nx = params.xs.size();
    const auto cells = parallel_map_ordered<Cell>(
        nx * params.Ts.size(), [&](std::size_t idx) {
            const double x = params.xs[idx % nx];
            const double T = params.Ts[idx / nx];
            Cell cell;
            const double log_x = std::log(x);
            const double log_T = std::log(T);

            std::string status = "ok";
            if (T > zs.t_max || log_x > 25.0) status = "out_of_range";

            double beta = 1.0;
            if (which == Corollary::cor1)
                beta = BetaSchedule::cor1_power(params.a)(T);
            else if (which == Corollary::cor3)
                beta = BetaSchedule::cor3_gm(params.A)(T);

            double ratio = 0.0;
            if (status == "ok") {
                const double f = f_direct(zs, x, T, beta).value;
                switch (which) {
                    case Corollary::cor1:
                    case Corollary::cor3:
                        ratio = f / (T * log_T);
                        break;
                    case Corollary::cor2:
                        ratio = f / (T * log_x);
                        break;
                    case Corollary::cor4: {
                        const auto n = static_cast<double>(n_of_t(zs, T));
                        ratio = f / n - 1.0;
                        break;
                    }
                }
            }

            // Sieve-side target normalization where the table covers x.
            std::string r_norm;
            if (which != Corollary::cor4 && params.table &&
                x >= 2.0 && x <= static_cast<double>(params.table->n_max)) {
                const double r = psi(x, *params.table) - x;
                double target = 1.0;
                if (which == Corollary::cor1) target = std::pow(log_x, params.a);
                else if (which == Corollary::cor2) target = std::pow(log_x, 1.5);
                else target = params.A * params.A * std::pow(std::log(log_x), 2.0);
                r_norm = format_g17(r / (std::sqrt(x) * target));
            }

            const bool range_ok =
                T >= w_of_x(x, params.range_A) && T <= std::sqrt(x) * log_x * log_x;
            cell.ratio = status == "ok" ? ratio : 0.0;
            cell.ok = status == "ok";
            cell.row = {corollary_name(which), format_g17(x),     format_g17(T),
                        format_g17(beta),      format_g17(ratio), r_norm,
                        status,                range_ok ? "1" : "0",
                        format_g17(zs.t_max)};
            return cell;
        });

    double max_ratio = 0.0;
    for (const auto& cell : cells) {
        if (cell.ok) max_ratio = std::max(max_ratio, std::abs(cell.ratio));
        rep.rows.push_back(cell.row);
    }
    rep.metadata["max_abs_bound_ratio"] = format_g17(max_ratio);
    return rep;
}

ScanReport guess_normalization(std::span<const double> xs, const LambdaTable& table) {
    ScanReport rep;
    rep.columns = {"x", "r", "normalized"};
    rep.metadata["n_max"] = std::to_string(table.n_max);
    double max_val = 0.0;
    double argmax = 0.0;
    for (double x : xs) {
        if (!(x >= 100.0) || x > static_cast<double>(table.n_max))
            throw DomainError("guess_normalization: x out of [100, n_max]");
        const double r = psi(x, table) - x;
        const double lll = std::log(std::log(std::log(x)));
        const double val = r / (std::sqrt(x) * lll * lll);
        if (std::abs(val) > std::abs(max_val)) {
            max_val = val;
            argmax = x;
        }
        rep.add_row({format_g17(x), format_g17(r), format_g17(val)});
    }
    rep.metadata["max_abs_normalized"] = format_g17(max_val);
    rep.metadata["argmax_x"] = format_g17(argmax);
    return rep;
}

}  // namespace zpc
