#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "zpc/errors.hpp"
#include "zpc/summation.hpp"

namespace zpc {

struct QuadResult {
    double value = 0.0;
    double err = 0.0;  // estimate of the absolute error
    std::size_t evals = 0;
};

namespace detail {

// 15-point Kronrod / 7-point Gauss pair (QUADPACK dqk15 constants).
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void qk15(F& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double fsum = f(c - dx) + f(c + dx);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    result = resk * h;
    err = std::abs((resk - resg) * h);
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b].  Splits the
// segment with the largest error estimate until the total estimate drops
// under max(abs_tol, rel_tol*|value|).  Throws ConvergenceError if the
// segment budget is exhausted first.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                              double rel_tol = 0.0, int max_segments = 200000) {
    struct Seg {
        double a, b, value, err;
        bool operator<(const Seg& o) const { return err < o.err; }
    };
    QuadResult out;
    if (a == b) return out;

    std::priority_queue<Seg> heap;
    double v, e;
    detail::qk15(f, a, b, v, e);
    out.evals = 15;
    heap.push({a, b, v, e});
    double total_v = v, total_e = e;

    int segments = 1;
    while (total_e > std::max(abs_tol, rel_tol * std::abs(total_v))) {
        if (segments >= max_segments)
            throw ConvergenceError("adaptive quadrature: segment budget exhausted");
        Seg s = heap.top();
        heap.pop();
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b)
            break;  // interval at float resolution; error estimate is noise
        double v1, e1, v2, e2;
        detail::qk15(f, s.a, mid, v1, e1);
        detail::qk15(f, mid, s.b, v2, e2);
        out.evals += 30;
        total_v += (v1 + v2) - s.value;
        total_e += (e1 + e2) - s.err;
        heap.push({s.a, mid, v1, e1});
        heap.push({mid, s.b, v2, e2});
        ++segments;
    }

    // Recombine in interval order with compensation; the running total_v has
    // accumulated add/subtract noise.
    std::vector<Seg> segs;
    segs.reserve(static_cast<std::size_t>(segments));
    while (!heap.empty()) {
        segs.push_back(heap.top());
        heap.pop();
    }
    std::sort(segs.begin(), segs.end(),
              [](const Seg& x, const Seg& y) { return x.a < y.a; });
    KahanSum sv;
    KahanSum se;
    for (const Seg& s : segs) {
        sv.add(s.value);
        se.add(s.err);
    }
    out.value = sv.value();
    out.err = se.value();
    return out;
}

namespace detail {

// 16-point Gauss-Legendre nodes (positive half) and weights.
inline constexpr double kGl16X[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
inline constexpr double kGl16W[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

template <class F>
double gl16(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    KahanSum s;
    for (int j = 0; j < 8; ++j) {
        const double dx = h * kGl16X[j];
        s.add(kGl16W[j] * (f(c - dx) + f(c + dx)));
    }
    return s.value() * h;
}

}  // namespace detail

struct CompositeResult {
    double value = 0.0;
    double err = 0.0;  // |last - previous| doubling estimate
    int panels = 0;
};

// Composite 16-point Gauss on [a, b] with panel-count doubling until two
// successive estimates agree to abs_tol.  Panel sums run left to right with
// compensation, so results are reproducible.  initial_panels should resolve
// the integrand's fastest oscillation (caller's job); doubling then converges
// spectrally.
template <class F>
CompositeResult composite_gauss_doubling(F&& f, double a, double b,
                                         int initial_panels, double abs_tol,
                                         int max_doublings = 14) {
    if (initial_panels < 1) initial_panels = 1;
    auto evaluate = [&](int panels) {
        KahanSum s;
        const double w = (b - a) / panels;
        for (int i = 0; i < panels; ++i)
            s.add(detail::gl16(f, a + i * w, a + (i + 1) * w));
        return s.value();
    };
    int panels = initial_panels;
    double prev = evaluate(panels);
    for (int d = 0; d < max_doublings; ++d) {
        panels *= 2;
        double cur = evaluate(panels);
        double diff = std::abs(cur - prev);
        if (diff <= abs_tol) return {cur, diff, panels};
        prev = cur;
    }
    throw ConvergenceError("composite Gauss quadrature did not converge");
}

}  // namespace zpc
