#pragma once

// Dormand-Prince 5(4) with PI step-size control, templated on the state
// container (std::array or std::vector of double / std::complex<double>).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>

namespace abel::ode {

namespace coef {
inline constexpr double c2 = 0.2, c3 = 0.3, c4 = 0.8, c5 = 8.0 / 9.0;
inline constexpr double a21 = 0.2;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                        a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                        a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
inline constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                        a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
inline constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                        e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
}  // namespace coef

struct Options {
    double rtol = 1e-10;
    double atol = 1e-30;
    double h_init = 0.0;        // 0: automatic
    double h_min_rel = 1e-14;   // underflow threshold relative to |t1 - t0|
    long max_steps = 2'000'000;
};

enum class Status { Completed, Stopped, StepUnderflow, MaxSteps };

template <class State>
struct Result {
    Status status = Status::Completed;
    double t = 0.0;
    State y{};
    // Last accepted step start, for event refinement after Stopped.
    double t_prev = 0.0;
    State y_prev{};
    double h_last = 0.0;
    long steps = 0;
    long rejected = 0;
};

namespace detail {
inline double mag(double v) { return std::abs(v); }
inline double mag(const std::complex<double>& v) { return std::abs(v); }
}  // namespace detail

/// One embedded step; writes the 5th-order solution into `out` and the
/// scaled error norm into `err`. `k1` must hold f(t, y) on entry and holds
/// f(t + h, out) on exit (FSAL).
template <class State, class Rhs>
void dopri_step(Rhs& f, double t, const State& y, double h, State& k1, State& out, double& err,
                const Options& opt) {
    using namespace coef;
    const std::size_t n = y.size();
    State k2 = y, k3 = y, k4 = y, k5 = y, k6 = y, k7 = y, tmp = y;
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a21 * k1[i]);
    f(t + c2 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(t + c3 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(t + c4 * h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i)
        tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(t + c5 * h, tmp, k5);
    for (std::size_t i = 0; i < n; ++i)
        tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f(t + h, tmp, k6);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
    f(t + h, out, k7);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
        const double sc = opt.atol + opt.rtol * std::max(detail::mag(y[i]), detail::mag(out[i]));
        const double r = detail::mag(e) / sc;
        acc += r * r;
    }
    err = std::sqrt(acc / double(n));
    k1 = k7;
}

/// Integrates y' = f(t, y) from t0 to t1 (t0 < t1). After every accepted
/// step `stop(t, y)` is consulted; returning true ends with Status::Stopped.
/// `time_scale(t, y)` in (0, 1] shrinks the underflow threshold where the
/// solution's own time scale is short (e.g. close to a blow-up).
template <class State, class Rhs, class Stop, class TimeScale>
Result<State> integrate(Rhs&& f, double t0, double t1, State y0, const Options& opt, Stop&& stop,
                        TimeScale&& time_scale) {
    Result<State> res;
    res.t = t0;
    res.y = y0;
    res.t_prev = t0;
    res.y_prev = y0;
    const double span = t1 - t0;
    if (span <= 0.0) return res;

    State k1 = y0, out = y0;
    f(t0, y0, k1);
    double h = opt.h_init;
    if (h <= 0.0) {
        double ny = 0.0, nf = 0.0;
        for (std::size_t i = 0; i < y0.size(); ++i) {
            ny = std::max(ny, detail::mag(y0[i]));
            nf = std::max(nf, detail::mag(k1[i]));
        }
        h = (nf > 0.0 && ny > 0.0) ? 0.01 * ny / nf : 1e-3 * span;
        h = std::clamp(h, 1e-8 * span, 0.1 * span);
    }
    const double h_min = opt.h_min_rel * span;
    constexpr double safe = 0.9, facl = 0.2, facr = 10.0, beta = 0.04;
    const double expo1 = 0.2 - beta * 0.75;
    double facold = 1e-4;
    double t = t0;
    State y = y0;

    while (t < t1) {
        if (res.steps + res.rejected >= opt.max_steps) {
            res.status = Status::MaxSteps;
            break;
        }
        bool last = false;
        if (1.01 * h >= t1 - t) {
            h = t1 - t;
            last = true;
        }
        State k1_try = k1;
        double err = 0.0;
        dopri_step(f, t, y, h, k1_try, out, err, opt);
        bool finite = std::isfinite(err);
        for (std::size_t i = 0; finite && i < out.size(); ++i) finite = std::isfinite(detail::mag(out[i]));
        if (finite && err <= 1.0) {
            res.t_prev = t;
            res.y_prev = y;
            res.h_last = h;
            t = last ? t1 : t + h;
            y = out;
            k1 = k1_try;
            ++res.steps;
            const double fac11 = std::pow(err, expo1);
            double fac = fac11 / std::pow(facold, beta);
            fac = std::clamp(fac / safe, 1.0 / facr, 1.0 / facl);
            facold = std::max(err, 1e-4);
            h = h / fac;
            if (stop(t, y)) {
                res.status = Status::Stopped;
                break;
            }
        } else {
            ++res.rejected;
            const double fac11 = finite ? std::pow(err, expo1) : 1.0 / facl;
            h = h / std::min(1.0 / facl, fac11 / safe);
        }
        if ((h < h_min * time_scale(t, y) || t + h == t) && t < t1) {
            res.status = Status::StepUnderflow;
            break;
        }
    }
    res.t = t;
    res.y = y;
    return res;
}

template <class State, class Rhs, class Stop>
Result<State> integrate(Rhs&& f, double t0, double t1, State y0, const Options& opt, Stop&& stop) {
    return integrate(std::forward<Rhs>(f), t0, t1, std::move(y0), opt, std::forward<Stop>(stop),
                     [](double, const State&) { return 1.0; });
}

template <class State, class Rhs>
Result<State> integrate(Rhs&& f, double t0, double t1, State y0, const Options& opt) {
    return integrate(std::forward<Rhs>(f), t0, t1, std::move(y0), opt,
                     [](double, const State&) { return false; });
}

}  // namespace abel::ode
