#pragma once

// Polynomial scalar ODEs z' = sum_m c_m(t) z^m with periodic coefficients,
// and their flow over one period with blow-up detection.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <concepts>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "abel/ode.hpp"
#include "abel/trigpoly.hpp"

namespace abel {

using cplx = std::complex<double>;

inline constexpr int kMaxDegree = 63;

class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The adaptive step fell below the underflow threshold before the
/// trajectory crossed the escape radius.
class StepUnderflow : public NumericalFailure {
public:
    StepUnderflow(double t, cplx c)
        : NumericalFailure("step size underflow at t=" + std::to_string(t) + " from c=(" + std::to_string(c.real()) +
                           "," + std::to_string(c.imag()) + ")"),
          t_(t) {}
    double t() const { return t_; }

private:
    double t_;
};

/// A field z' = sum_{m=0}^{degree} c_m(t) z^m.
template <class F>
concept PolynomialField = requires(const F& f, double t, double* out) {
    { f.degree() } -> std::convertible_to<int>;
    { f.period() } -> std::convertible_to<double>;
    { f.escape_radius() } -> std::convertible_to<double>;
    f.coefficients(t, out);
};

// ---------------------------------------------------------------------------
// Arm constants shared with the phase-portrait module.

/// a = max(6, 6 |P|)
inline double arm_constant(double norm_p) { return std::max(6.0, 6.0 * norm_p); }

/// Disc radius with a 10% margin over the sector-containment lower bound.
inline double disk_radius(int n, double norm_p) {
    const double a = arm_constant(norm_p);
    return 1.1 * std::max({a * (n - 2) * (n - 1) / std::numbers::pi, a, 1.0});
}

inline double default_escape_radius(int n, double norm_p) {
    return std::max(1e3, 10.0 * disk_radius(n, norm_p));
}

// ---------------------------------------------------------------------------
// Equations

/// z' = z^n + P_1(t) z^(n-1) + ... + P_n(t)
class GeneralEquation {
public:
    GeneralEquation(int n, std::vector<TrigPoly> P, double omega) : n_(n), omega_(omega), P_(std::move(P)) {
        if (n_ < 3) throw std::invalid_argument("GeneralEquation: degree must be at least 3");
        if (n_ > kMaxDegree) throw std::invalid_argument("GeneralEquation: degree too large");
        if (!(omega_ > 0.0)) throw std::invalid_argument("GeneralEquation: period must be positive");
        if (int(P_.size()) != n_) throw std::invalid_argument("GeneralEquation: need exactly n coefficients");
        for (const auto& p : P_)
            if (std::abs(p.omega() - omega_) > 1e-12 * omega_)
                throw std::invalid_argument("GeneralEquation: coefficient period differs from omega");
    }

    /// z' = z^n
    static GeneralEquation pure(int n, double omega) {
        return GeneralEquation(n, std::vector<TrigPoly>(std::size_t(std::max(n, 0)), TrigPoly(0.0, omega)), omega);
    }

    int n() const { return n_; }
    int degree() const { return n_; }
    double omega() const { return omega_; }
    double period() const { return omega_; }
    const std::vector<TrigPoly>& P() const { return P_; }
    /// P_i for i in 1..n
    const TrigPoly& P(int i) const { return P_.at(std::size_t(i - 1)); }

    double norm() const {
        double m = 0.0;
        for (const auto& p : P_) m = std::max(m, sup_bound(p));
        return m;
    }
    double escape_radius() const { return default_escape_radius(n_, norm()); }

    bool constant_term_vanishes() const {
        const auto& p = P_.back();
        return p.mean() == 0.0 && p.is_constant();
    }

    void coefficients(double t, double* out) const {
        out[n_] = 1.0;
        for (int i = 1; i <= n_; ++i) out[n_ - i] = P_[std::size_t(i - 1)].eval(t);
    }

private:
    int n_;
    double omega_;
    std::vector<TrigPoly> P_;
};

/// z' = z^n + alpha(t) z^(n-1) + beta(t) z^(n-2)
class AbelEquation {
public:
    AbelEquation(int n, TrigPoly alpha, TrigPoly beta, double omega)
        : n_(n), omega_(omega), alpha_(std::move(alpha)), beta_(std::move(beta)) {
        if (n_ < 3) throw std::invalid_argument("AbelEquation: degree must be at least 3");
        if (n_ > kMaxDegree) throw std::invalid_argument("AbelEquation: degree too large");
        if (!(omega_ > 0.0)) throw std::invalid_argument("AbelEquation: period must be positive");
        if (std::abs(alpha_.omega() - omega_) > 1e-12 * omega_ || std::abs(beta_.omega() - omega_) > 1e-12 * omega_)
            throw std::invalid_argument("AbelEquation: coefficient period differs from omega");
    }

    int n() const { return n_; }
    int degree() const { return n_; }
    double omega() const { return omega_; }
    double period() const { return omega_; }
    const TrigPoly& alpha() const { return alpha_; }
    const TrigPoly& beta() const { return beta_; }

    double norm() const { return std::max(sup_bound(alpha_), sup_bound(beta_)); }
    double escape_radius() const { return default_escape_radius(n_, norm()); }

    void coefficients(double t, double* out) const {
        for (int m = 0; m < n_ - 2; ++m) out[m] = 0.0;
        out[n_ - 2] = beta_.eval(t);
        out[n_ - 1] = alpha_.eval(t);
        out[n_] = 1.0;
    }

    /// z' = z^n + s alpha z^(n-1) + s beta z^(n-2)
    AbelEquation scaled(double s) const { return AbelEquation(n_, s * alpha_, s * beta_, omega_); }

    GeneralEquation general() const {
        std::vector<TrigPoly> P(std::size_t(n_), TrigPoly(0.0, omega_));
        P[0] = alpha_;
        P[1] = beta_;
        return GeneralEquation(n_, std::move(P), omega_);
    }

private:
    int n_;
    double omega_;
    TrigPoly alpha_, beta_;
};

/// Time-reversed field: s -> -t, z' = -f(-s, z).
template <PolynomialField F>
class Reversed {
public:
    explicit Reversed(const F& f) : f_(&f) {}
    int degree() const { return f_->degree(); }
    double period() const { return f_->period(); }
    double escape_radius() const { return f_->escape_radius(); }
    void coefficients(double s, double* out) const {
        f_->coefficients(-s, out);
        for (int m = 0; m <= degree(); ++m) out[m] = -out[m];
    }

private:
    const F* f_;
};

namespace detail {

template <PolynomialField F>
void coefficients_checked(const F& f, double t, std::array<double, kMaxDegree + 1>& buf) {
    if (f.degree() > kMaxDegree || f.degree() < 0) throw std::invalid_argument("field degree out of range");
    f.coefficients(t, buf.data());
}

inline cplx horner(const std::array<double, kMaxDegree + 1>& c, int deg, cplx z) {
    cplx v = c[std::size_t(deg)];
    for (int m = deg - 1; m >= 0; --m) v = v * z + c[std::size_t(m)];
    return v;
}

inline cplx horner_derivative(const std::array<double, kMaxDegree + 1>& c, int deg, cplx z) {
    if (deg == 0) return 0.0;
    cplx v = double(deg) * c[std::size_t(deg)];
    for (int m = deg - 1; m >= 1; --m) v = v * z + double(m) * c[std::size_t(m)];
    return v;
}

}  // namespace detail

template <PolynomialField F>
cplx vector_field(const F& f, double t, cplx z) {
    std::array<double, kMaxDegree + 1> c{};
    detail::coefficients_checked(f, t, c);
    return detail::horner(c, f.degree(), z);
}

/// d/dz of the right-hand side.
template <PolynomialField F>
cplx jacobian(const F& f, double t, cplx z) {
    std::array<double, kMaxDegree + 1> c{};
    detail::coefficients_checked(f, t, c);
    return detail::horner_derivative(c, f.degree(), z);
}

// ---------------------------------------------------------------------------
// Flow

struct Reached {
    cplx z;
};
struct BlowUp {
    double t_escape;
    cplx z_last;
};
using FlowOutcome = std::variant<Reached, BlowUp>;

inline bool reached(const FlowOutcome& o) { return std::holds_alternative<Reached>(o); }

struct FlowOptions {
    double tol = 1e-10;
    double escape_radius = 0.0;  // 0: field default
    long max_steps = 2'000'000;
};

/// Flow end state. The displacement z(t1) - c and the logarithm of the
/// variational factor v = dz/dc are integrated directly, so that small
/// displacements, v - 1 near 0 and extreme multipliers keep full relative
/// accuracy.
struct FlowEnd {
    FlowOutcome outcome;
    cplx displacement{};        // z(t1) - c, valid when reached
    std::optional<cplx> v;      // dz(t1)/dc
    std::optional<cplx> v_minus_one;
    std::optional<cplx> log_v;  // log dz(t1)/dc, finite when v under- or overflows
    long steps = 0;
};

namespace detail {

inline cplx expm1(cplx u) {
    const double s = std::sin(0.5 * u.imag());
    return {std::expm1(u.real()) * std::cos(u.imag()) - 2.0 * s * s, std::exp(u.real()) * std::sin(u.imag())};
}

template <PolynomialField F>
FlowEnd run_flow(const F& f, cplx c, double t0, double t1, const FlowOptions& opt, bool variational) {
    if (!(t0 < t1)) throw std::invalid_argument("integrate: need t0 < t1");
    if (!(opt.tol > 0.0)) throw std::invalid_argument("integrate: tol must be positive");
    const int deg = f.degree();
    const double r_esc = opt.escape_radius > 0.0 ? opt.escape_radius : f.escape_radius();

    using State = std::array<cplx, 2>;
    std::array<double, kMaxDegree + 1> buf{};
    auto rhs = [&](double t, const State& y, State& dy) {
        coefficients_checked(f, t, buf);
        const cplx z = c + y[0];
        dy[0] = horner(buf, deg, z);
        dy[1] = variational ? horner_derivative(buf, deg, z) : cplx{};
    };
    auto escaped = [&](const State& y) { return std::abs(c + y[0]) >= r_esc; };

    if (std::abs(c) >= r_esc) {
        std::array<double, kMaxDegree + 1> c0{};
        coefficients_checked(f, t0, c0);
        double t_escape = t0;
        if (deg >= 2 && c0[std::size_t(deg)] > 0.0)
            t_escape += 1.0 / ((deg - 1) * c0[std::size_t(deg)] * std::pow(std::abs(c), deg - 1));
        return FlowEnd{BlowUp{std::min(t_escape, t1), c}, {}, {}, {}, {}, 0};
    }

    // Absolute floor at the roundoff level of the right-hand side near c;
    // below it the increments of z - c are noise.
    double rhs_scale = 0.0;
    for (int k = 0; k < 4; ++k) {
        coefficients_checked(f, t0 + (t1 - t0) * k / 4.0, buf);
        double s = 0.0, p = 1.0;
        for (int m = 0; m <= deg; ++m, p *= std::abs(c)) s += std::abs(buf[std::size_t(m)]) * p;
        rhs_scale = std::max(rhs_scale, s);
    }
    ode::Options o;
    o.rtol = opt.tol;
    o.atol = std::max(opt.tol * 1e-20, 16.0 * std::numeric_limits<double>::epsilon() * (t1 - t0) * rhs_scale);
    o.max_steps = opt.max_steps;
    // Local time scale |z / f(z)| ~ 1 / |z|^(deg-1) for large |z|.
    auto time_scale = [&](double, const State& y) {
        const double r = std::abs(c + y[0]);
        return r > 1.0 && deg > 1 ? std::min(1.0, std::pow(r, -(deg - 1))) : 1.0;
    };
    auto res = ode::integrate(rhs, t0, t1, State{cplx{}, cplx{}}, o,
                              [&](double, const State& y) { return escaped(y); }, time_scale);

    FlowEnd end{Reached{}, {}, {}, {}, {}, res.steps};
    switch (res.status) {
    case ode::Status::Completed:
        end.outcome = Reached{c + res.y[0]};
        end.displacement = res.y[0];
        if (variational) {
            end.v_minus_one = expm1(res.y[1]);
            end.v = std::exp(res.y[1]);
            end.log_v = res.y[1];
        }
        return end;
    case ode::Status::StepUnderflow: {
        // Where the leading term dominates the escape is monotone; once the
        // remaining time to infinity is below the resolution of t the
        // crossing of r_esc is placed along the current ray.
        const cplx z = c + res.y[0];
        coefficients_checked(f, res.t, buf);
        const double r = std::abs(z);
        const double lead = std::abs(buf[std::size_t(deg)]);
        double lower = 0.0;
        for (int k = deg - 1; k >= 0; --k) lower = lower * r + std::abs(buf[std::size_t(k)]);
        if (deg >= 2 && lead > 0.0 && lower <= 0.5 * lead * std::pow(r, deg)) {
            const double tail = 2.0 / ((deg - 1) * lead * std::pow(r, deg - 1));
            if (tail <= 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(res.t))) {
                end.outcome = BlowUp{std::min(res.t + tail, t1), z * (r_esc / std::abs(z))};
                return end;
            }
        }
        throw StepUnderflow(res.t, c);
    }
    case ode::Status::MaxSteps:
        throw NumericalFailure("integration exceeded the step budget");
    case ode::Status::Stopped:
        break;
    }

    // Escape: bisect the last accepted step for the crossing of r_esc, then
    // add the z' ~ lead z^deg tail from the crossing to infinity.
    double lo = 0.0, hi = 1.0;
    State k0{}, out = res.y;
    State k_start{};
    rhs(res.t_prev, res.y_prev, k_start);
    State z_hi = res.y;
    for (int it = 0; it < 50; ++it) {
        const double mid = 0.5 * (lo + hi);
        k0 = k_start;
        double err = 0.0;
        ode::dopri_step(rhs, res.t_prev, res.y_prev, mid * res.h_last, k0, out, err, o);
        if (escaped(out)) {
            hi = mid;
            z_hi = out;
        } else {
            lo = mid;
        }
        if ((hi - lo) * res.h_last < 1e-16 * (t1 - t0)) break;
    }
    const double t_cross = res.t_prev + hi * res.h_last;
    const cplx z_cross = c + z_hi[0];
    coefficients_checked(f, t_cross, buf);
    const double lead = buf[std::size_t(deg)];
    double t_escape = t_cross;
    if (deg >= 2 && lead > 0.0) t_escape += 1.0 / ((deg - 1) * lead * std::pow(std::abs(z_cross), deg - 1));
    end.outcome = BlowUp{std::min(t_escape, t1), z_cross};
    return end;
}

}  // namespace detail

template <PolynomialField F>
FlowOutcome integrate(const F& f, cplx c, double t0, double t1, const FlowOptions& opt = {}) {
    return detail::run_flow(f, c, t0, t1, opt, false).outcome;
}

/// The flow over [0, omega].
template <PolynomialField F>
FlowOutcome transit(const F& f, cplx c, const FlowOptions& opt = {}) {
    return integrate(f, c, 0.0, f.period(), opt);
}

/// The flow over [0, omega] together with dz(omega)/dc; the derivative is
/// empty on blow-up.
template <PolynomialField F>
std::pair<FlowOutcome, std::optional<cplx>> transit_with_variational(const F& f, cplx c,
                                                                     const FlowOptions& opt = {}) {
    auto end = detail::run_flow(f, c, 0.0, f.period(), opt, true);
    return {end.outcome, end.v};
}

template <PolynomialField F>
FlowEnd transit_full(const F& f, cplx c, bool variational, const FlowOptions& opt = {}) {
    return detail::run_flow(f, c, 0.0, f.period(), opt, variational);
}

}  // namespace abel
