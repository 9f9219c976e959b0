#pragma once
// Adaptive Gauss-Kronrod 15(7) quadrature, real and complex integrands.
// Deterministic depth-first bisection; per-segment tolerance split in half at
// each level so the reduction order never depends on error magnitudes.

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

namespace dsirr {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // accumulated |K15 - G7| estimate
    bool converged = false;
    std::int64_t evals = 0;
};

struct QuadResultC {
    std::complex<double> value{0.0, 0.0};
    double error = 0.0;
    bool converged = false;
    std::int64_t evals = 0;
};

namespace detail {

// 15-point Kronrod abscissae (positive half) and weights; the embedded
// 7-point Gauss rule uses the odd-index abscissae.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename T> inline double abs_of(T v) { return std::abs(v); }

// One GK15 panel: returns (kronrod, |kronrod - gauss7|) and bumps eval count.
template <typename T, typename F>
inline void gk15_panel(F&& f, double a, double b, T& kronrod, double& err,
                       std::int64_t& evals) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T fc = f(c);
    T resk = kWgk[7] * fc;
    T resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        T f1 = f(c - dx);
        T f2 = f(c + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    kronrod = resk * h;
    err = abs_of<T>((resk - resg) * h);
    evals += 15;
}

template <typename T, typename F>
inline void adapt(F&& f, double a, double b, double tol, int depth, T& acc,
                  double& err_acc, std::int64_t& evals) {
    T panel;
    double perr;
    gk15_panel<T>(f, a, b, panel, perr, evals);
    if (perr <= tol || depth <= 0) {
        acc += panel;
        err_acc += perr;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt<T>(f, a, m, 0.5 * tol, depth - 1, acc, err_acc, evals);
    adapt<T>(f, m, b, 0.5 * tol, depth - 1, acc, err_acc, evals);
}

template <typename T, typename F>
inline void run_adaptive(F&& f, double a, double b, double abs_tol,
                         double rel_tol, int max_depth, T& value, double& err,
                         bool& converged, std::int64_t& evals) {
    value = T{};
    err = 0.0;
    evals = 0;
    if (a == b) {
        converged = true;
        return;
    }
    // scale probe for the relative-tolerance branch
    T probe;
    double perr;
    gk15_panel<T>(f, a, b, probe, perr, evals);
    double tol = abs_tol;
    if (rel_tol > 0.0)
        tol = std::max(tol, rel_tol * std::max(abs_of<T>(probe), perr));
    if (tol <= 0.0) tol = 1e-300;
    adapt<T>(f, a, b, tol, max_depth, value, err, evals);
    double goal = std::max(abs_tol, rel_tol * abs_of<T>(value));
    if (rel_tol > 0.0 && goal > 0.0 && goal < 0.5 * tol) {
        // first-pass scale overestimated the integral (cancellation); redo tighter
        value = T{};
        err = 0.0;
        adapt<T>(f, a, b, goal, max_depth, value, err, evals);
        goal = std::max(abs_tol, rel_tol * abs_of<T>(value));
    }
    converged = err <= std::max(goal, 1e-300) * 1.0000001;
}

}  // namespace detail

// Integrate real f over [a, b]; stops when the per-segment error estimates sum
// below max(abs_tol, rel_tol*|I|). converged=false means the budget ran out.
template <typename F>
inline QuadResult integrate(F&& f, double a, double b, double abs_tol,
                            double rel_tol = 0.0, int max_depth = 28) {
    QuadResult r;
    detail::run_adaptive<double>(std::forward<F>(f), a, b, abs_tol, rel_tol,
                                 max_depth, r.value, r.error, r.converged,
                                 r.evals);
    return r;
}

template <typename F>
inline QuadResultC integrate_complex(F&& f, double a, double b, double abs_tol,
                                     double rel_tol = 0.0, int max_depth = 28) {
    QuadResultC r;
    detail::run_adaptive<std::complex<double>>(std::forward<F>(f), a, b,
                                               abs_tol, rel_tol, max_depth,
                                               r.value, r.error, r.converged,
                                               r.evals);
    return r;
}

}  // namespace dsirr
