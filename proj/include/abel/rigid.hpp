#pragma once

// Rigid planar systems
//   x' = lambda x - y + x (R_{n-1} + ... + R_0)(x, y)
//   y' = x + lambda y + y (R_{n-1} + ... + R_0)(x, y)
// with theta' = 1, reduced to dr/dtheta = sum_i R_i(cos, sin) r^(i+1) + lambda r.

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "abel/displacement.hpp"
#include "abel/errors.hpp"
#include "abel/flow.hpp"
#include "abel/ode.hpp"
#include "abel/trigpoly.hpp"

namespace abel {

struct RigidSystem {
    int n = 3;
    double lambda = 0.0;
    std::map<int, HomogeneousPoly> R;  // degree -> R_degree, degrees 0..n-1

    RigidSystem() = default;
    RigidSystem(int n_, double lambda_, std::map<int, HomogeneousPoly> R_)
        : n(n_), lambda(lambda_), R(std::move(R_)) {
        validate();
    }

    void validate() const {
        if (n < 3) throw std::invalid_argument("RigidSystem: n must be at least 3");
        if (n > kMaxDegree) throw std::invalid_argument("RigidSystem: n too large");
        for (const auto& [i, h] : R) {
            if (i < 0 || i > n - 1) throw std::invalid_argument("RigidSystem: R degree outside 0..n-1");
            if (h.degree() != i) throw std::invalid_argument("RigidSystem: R_" + std::to_string(i) + " has wrong degree");
        }
    }

    /// R_i restricted to the unit circle (zero when absent).
    TrigPoly circle(int i) const {
        const auto it = R.find(i);
        return it == R.end() ? TrigPoly(0.0) : restrict_to_circle(it->second);
    }

    /// The right-hand side sum_i R_i(x, y) of the radial factor.
    double radial_factor(double x, double y) const {
        double s = 0.0;
        for (const auto& [i, h] : R) s += h(x, y);
        return s;
    }
};

// ---------------------------------------------------------------------------
// Polar equation

/// dr/dtheta = sum_i c_i(theta) r^(i+1) + lambda r, period 2 pi.
class PolarEquation {
public:
    explicit PolarEquation(const RigidSystem& rs) : lambda_(rs.lambda) {
        rs.validate();
        int top = 0;
        for (const auto& [i, h] : rs.R) {
            bool nonzero = false;
            for (double c : h.coefs()) nonzero = nonzero || c != 0.0;
            if (nonzero) top = std::max(top, i + 1);
        }
        degree_ = std::max(top, 1);
        coef_.assign(std::size_t(degree_ + 1), TrigPoly(0.0));
        for (const auto& [i, h] : rs.R)
            if (i + 1 <= degree_) coef_[std::size_t(i + 1)] = restrict_to_circle(h);
        double norm = std::abs(lambda_);
        for (const auto& c : coef_) norm = std::max(norm, sup_bound(c));
        const double lead = certified_lower_bound(coef_.back());
        escape_radius_ = default_escape_radius(std::max(degree_, 3), lead > 0.0 ? norm / lead : norm);
    }

    int degree() const { return degree_; }
    double period() const { return 2.0 * std::numbers::pi; }
    double escape_radius() const { return escape_radius_; }
    double lambda() const { return lambda_; }
    /// Coefficient of r^m.
    const TrigPoly& coefficient(int m) const { return coef_.at(std::size_t(m)); }

    void coefficients(double theta, double* out) const {
        for (int m = 0; m <= degree_; ++m) out[m] = coef_[std::size_t(m)].eval(theta);
        out[1] += lambda_;
    }

private:
    int degree_ = 1;
    double lambda_ = 0.0;
    double escape_radius_ = 1e3;
    std::vector<TrigPoly> coef_;
};

struct PolarReduction {
    PolarEquation polar;
    std::optional<AbelEquation> abel;  // present when the polar equation is exactly of Abel form
};

namespace detail {

inline bool is_zero(const TrigPoly& p) { return p.mean() == 0.0 && p.coefficient_l1() == 0.0; }

inline bool is_one(const TrigPoly& p, double tol = 1e-12) {
    return std::abs(p.mean() - 1.0) <= tol && p.coefficient_l1() <= tol;
}

}  // namespace detail

/// The abel form needs lambda = 0, R_{n-1} = 1 on the circle and no degrees
/// other than n-1, n-2, n-3.
inline PolarReduction polar_reduce(const RigidSystem& rs) {
    PolarReduction red{PolarEquation(rs), std::nullopt};
    bool abel_form = rs.lambda == 0.0 && detail::is_one(rs.circle(rs.n - 1));
    for (const auto& [i, h] : rs.R)
        if (i < rs.n - 3 && !detail::is_zero(restrict_to_circle(h))) abel_form = false;
    if (abel_form) {
        const TrigPoly beta = rs.n - 3 >= 0 ? rs.circle(rs.n - 3) : TrigPoly(0.0);
        red.abel = AbelEquation(rs.n, rs.circle(rs.n - 2), beta, 2.0 * std::numbers::pi);
    }
    return red;
}

/// B = int_0^{2 pi} R_{n-3}(cos, sin).
inline double liapunov_B(const RigidSystem& rs) { return integral_over_period(rs.circle(rs.n - 3)); }

struct Passes {};
struct Fails {
    int k = 0;
    double mean_integral = 0.0;
};
using CenterCheck = std::variant<Passes, Fails>;

/// Necessary condition for a center: every R_k has zero circle integral.
/// Degree 0 is included since R_0 acts as a linear radial term.
inline CenterCheck center_necessary_check(const RigidSystem& rs, double tol = 1e-12) {
    for (const auto& [k, h] : rs.R) {
        const double I = integral_over_period(restrict_to_circle(h));
        if (std::abs(I) > tol) return Fails{k, I};
    }
    return Passes{};
}

// ---------------------------------------------------------------------------
// Limit cycles

struct LimitCycle {
    double r0 = 0.0;
    double multiplier = 1.0;
    bool stable = false;
};

/// Largest r in (0, upper] whose polar solution exists on [0, 2 pi], by
/// bisection on definedness. A start the integrator cannot follow within
/// 2e5 steps counts as undefined, so the result is a lower bound then.
template <PolynomialField F>
double positive_domain_boundary(const F& f, double upper, FlowOptions opt = {}) {
    opt.max_steps = std::min(opt.max_steps, 200000L);
    auto defined = [&](double r) {
        try {
            return reached(transit(f, cplx(r, 0.0), opt));
        } catch (const NumericalFailure&) {
            return false;
        }
    };
    if (defined(upper)) return upper;
    double lo = 0.0, hi = upper;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        (defined(mid) ? lo : hi) = mid;
    }
    return lo;
}

/// Positive 2 pi-periodic solutions of a real polar-type field, r0 in (0, r_max).
template <PolynomialField F>
std::vector<LimitCycle> limit_cycles_of(const F& f, double r_max, const DisplacementOptions& opt = {}) {
    if (!(r_max > 0.0)) throw std::invalid_argument("find_limit_cycles: r_max must be positive");
    std::vector<LimitCycle> out;
    for (const auto& o : real_periodic_solutions(f, 0.0, r_max, opt)) {
        const double r0 = o.c0.real();
        if (!(r0 > 1e-12 * r_max)) continue;
        out.push_back({r0, o.multiplier.real(), o.multiplier.real() < 1.0});
    }
    return out;
}

/// Limit cycles of the rigid system as positive periodic solutions of the
/// polar equation. r_max <= 0 selects the positive domain boundary.
inline std::vector<LimitCycle> find_limit_cycles(const RigidSystem& rs, double r_max = 0.0,
                                                 const DisplacementOptions& opt = {}) {
    const PolarEquation eq(rs);
    if (!(r_max > 0.0)) r_max = positive_domain_boundary(eq, eq.escape_radius(), opt.flow);
    if (!(r_max > 0.0)) return {};
    return limit_cycles_of(eq, r_max, opt);
}

// ---------------------------------------------------------------------------
// Theorem report for x' = -y + x(R_{n-1} + R_{n-2} + R_{n-3}), y' = x + y(...)

struct Clause {
    bool holds = false;
    std::string evidence;
};

struct TheoremReport {
    double B = 0.0;
    CenterCheck center;
    std::vector<LimitCycle> cycles;
    Clause not_a_center;   // (i)
    Clause at_most_one;    // (ii), B < 0: at most one cycle, and it is unstable
    Clause no_cycle;       // (iii), B = 0: no cycle
};

/// Hypotheses: n odd, lambda = 0, R_{n-1} = 1 on the circle, R_{n-3} <= 0
/// certified, no other degrees.
inline TheoremReport theorem41_report(const RigidSystem& rs, double tol = 1e-12, const DisplacementOptions& opt = {}) {
    if (rs.n % 2 == 0) throw HypothesisNotCertified("n odd");
    if (rs.lambda != 0.0) throw HypothesisNotCertified("lambda = 0");
    if (!detail::is_one(rs.circle(rs.n - 1))) throw HypothesisNotCertified("R_{n-1} = 1");
    for (const auto& [i, h] : rs.R)
        if (i < rs.n - 3 && !detail::is_zero(restrict_to_circle(h))) throw HypothesisNotCertified("only R_{n-1}, R_{n-2}, R_{n-3}");
    if (!is_certified_nonpositive(certify_nonpositive(rs.circle(rs.n - 3)))) throw HypothesisNotCertified("R_{n-3} <= 0");

    TheoremReport rep;
    rep.B = liapunov_B(rs);
    rep.center = center_necessary_check(rs, tol);
    if (const auto* f = std::get_if<Fails>(&rep.center)) {
        rep.not_a_center = {true, "circle integral of R_" + std::to_string(f->k) + " is " + std::to_string(f->mean_integral)};
    } else {
        rep.not_a_center = {false, "all circle integrals vanish"};
    }
    rep.cycles = find_limit_cycles(rs, 0.0, opt);
    const auto count = rep.cycles.size();
    const bool all_unstable = std::all_of(rep.cycles.begin(), rep.cycles.end(), [](const LimitCycle& c) { return c.multiplier > 1.0; });
    if (rep.B < -tol) {
        rep.at_most_one = {count <= 1 && all_unstable, std::to_string(count) + " cycle(s), " + (all_unstable ? "all unstable" : "not all unstable")};
        rep.no_cycle = {true, "not applicable (B < 0)"};
    } else {
        rep.at_most_one = {true, "not applicable (B = 0)"};
        rep.no_cycle = {count == 0, std::to_string(count) + " cycle(s)"};
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Pairing phi(theta) -> -phi(theta + pi)

struct Confirmed {
    double max_deviation = 0.0;
};
struct Deviation {
    double d = 0.0;
};
using PairCheck = std::variant<Confirmed, Deviation>;

namespace detail {

/// Solution values at theta_j = 2 pi j / samples, j = 0..samples.
template <PolynomialField F>
std::optional<std::vector<double>> real_samples(const F& f, double r0, int samples, const FlowOptions& opt) {
    std::vector<double> v{r0};
    cplx z(r0, 0.0);
    const double h = f.period() / samples;
    for (int j = 0; j < samples; ++j) {
        const auto o = integrate(f, z, j * h, (j + 1) * h, opt);
        if (!reached(o)) return std::nullopt;
        z = std::get<Reached>(o).z;
        v.push_back(z.real());
    }
    return v;
}

}  // namespace detail

/// psi(theta) = -phi(theta + pi) must solve the polar equation: the
/// solution started from -phi(pi) is compared with it at sample points.
inline PairCheck pair_symmetry_check(const RigidSystem& rs, const LimitCycle& cycle, int samples = 64,
                                     double tol = 1e-7, const FlowOptions& opt = {}) {
    if (rs.n % 2 == 0) throw HypothesisNotCertified("n odd");
    if (samples < 2 || samples % 2) throw std::invalid_argument("pair_symmetry_check: samples must be even");
    FlowOptions fo = opt;
    fo.tol = std::min(opt.tol, 1e-12);
    const PolarEquation eq(rs);
    const auto phi = detail::real_samples(eq, cycle.r0, samples, fo);
    if (!phi) return Deviation{std::numeric_limits<double>::infinity()};
    const int half = samples / 2;
    const auto psi = detail::real_samples(eq, -(*phi)[std::size_t(half)], samples, fo);
    if (!psi) return Deviation{std::numeric_limits<double>::infinity()};
    double dev = 0.0;
    for (int j = 0; j <= samples; ++j) {
        // phi is 2 pi-periodic: index j + half wraps past samples.
        const double expect = -(*phi)[std::size_t((j + half) % samples)];
        dev = std::max(dev, std::abs((*psi)[std::size_t(j)] - expect));
    }
    if (dev <= tol * std::max(1.0, cycle.r0)) return Confirmed{dev};
    return Deviation{dev};
}

// ---------------------------------------------------------------------------
// Leading-coefficient normalisation

class LeadingCoefficientVanishes : public std::domain_error {
public:
    LeadingCoefficientVanishes() : std::domain_error("R_{n-1} is not certified positive on the circle") {}
};

/// dr/ds = r^n + sum_{m<n} (c_m / R_{n-1})(theta(s)) r^m with s = int_0^theta R_{n-1}.
/// theta(s) is tabulated once and polished by Newton on every evaluation.
class NormalizedPolarEquation {
public:
    explicit NormalizedPolarEquation(const RigidSystem& rs, int table = 1024) : polar_(rs) {
        lead_ = polar_.coefficient(polar_.degree());
        if (polar_.degree() != rs.n || !(certified_lower_bound(lead_) > 0.0)) throw LeadingCoefficientVanishes();
        period_ = integral_over_period(lead_);
        const double two_pi = 2.0 * std::numbers::pi;
        theta_.resize(std::size_t(table) + 1);
        double th = 0.0;
        for (int i = 0; i <= table; ++i) {
            th = solve(period_ * i / table, th);
            theta_[std::size_t(i)] = th;
        }
        theta_.back() = two_pi;
        double norm = 0.0;
        const double low = certified_lower_bound(lead_);
        for (int m = 0; m < polar_.degree(); ++m) norm = std::max(norm, sup_bound(polar_.coefficient(m)) / low);
        norm = std::max(norm, std::abs(polar_.lambda()) / low);
        escape_radius_ = default_escape_radius(polar_.degree(), norm);
    }

    int degree() const { return polar_.degree(); }
    double period() const { return period_; }
    double escape_radius() const { return escape_radius_; }

    /// theta as a function of the new time s.
    double theta_of(double s) const {
        const double two_pi = 2.0 * std::numbers::pi;
        const double turns = std::floor(s / period_);
        const double u = s - turns * period_;
        const double pos = u / period_ * double(theta_.size() - 1);
        const std::size_t i = std::min(std::size_t(pos), theta_.size() - 2);
        const double w = pos - double(i);
        const double guess = theta_[i] + w * (theta_[i + 1] - theta_[i]);
        return turns * two_pi + solve(u, guess);
    }

    void coefficients(double s, double* out) const {
        const double th = theta_of(s);
        polar_.coefficients(th, out);
        const double l = out[degree()];
        for (int m = 0; m < degree(); ++m) out[m] /= l;
        out[degree()] = 1.0;
    }

private:
    // s(theta) = int_0^theta lead, inverted by safeguarded Newton.
    double solve(double s, double guess) const {
        double th = guess;
        for (int it = 0; it < 50; ++it) {
            const double g = lead_.antiderivative(th) - s;
            const double step = g / lead_.eval(th);
            th -= step;
            if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(th))) break;
        }
        return th;
    }

    PolarEquation polar_;
    TrigPoly lead_;
    double period_ = 0.0;
    double escape_radius_ = 1e3;
    std::vector<double> theta_;
};

inline NormalizedPolarEquation reparameterize(const RigidSystem& rs) { return NormalizedPolarEquation(rs); }

// ---------------------------------------------------------------------------
// Cartesian cross-check

struct CartesianCheck {
    double deviation = 0.0;     // |r_cartesian(2 pi) - r_polar(2 pi)|
    double r_cartesian = 0.0;
    double r_polar = 0.0;
    double theta_drift = 0.0;   // max |unwrapped angle(t) - t|
};

/// Integrates the planar system from (r0, 0) for time 2 pi and compares the
/// radius with the polar solution at theta = 2 pi.
inline CartesianCheck cartesian_cross_check(const RigidSystem& rs, double r0, double tol = 1e-12, int samples = 256) {
    const PolarEquation eq(rs);
    FlowOptions fo;
    fo.tol = tol;
    const auto polar = transit(eq, cplx(r0, 0.0), fo);
    if (!reached(polar)) throw std::invalid_argument("cartesian_cross_check: r0 outside the polar domain");

    using State = std::array<double, 2>;
    auto rhs = [&](double, const State& p, State& dp) {
        const double s = rs.radial_factor(p[0], p[1]);
        dp[0] = rs.lambda * p[0] - p[1] + p[0] * s;
        dp[1] = p[0] + rs.lambda * p[1] + p[1] * s;
    };
    ode::Options o;
    o.rtol = tol;
    o.atol = tol * 1e-3 * std::max(r0, 1e-300);
    const double two_pi = 2.0 * std::numbers::pi;
    State p{r0, 0.0};
    CartesianCheck chk;
    double angle = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double t0 = two_pi * j / samples, t1 = two_pi * (j + 1) / samples;
        auto res = ode::integrate(rhs, t0, t1, p, o);
        if (res.status != ode::Status::Completed) throw NumericalFailure("cartesian_cross_check: integration failed");
        const double prev = std::atan2(p[1], p[0]);
        p = res.y;
        angle += std::remainder(std::atan2(p[1], p[0]) - prev, two_pi);
        chk.theta_drift = std::max(chk.theta_drift, std::abs(angle - t1));
    }
    chk.r_cartesian = std::hypot(p[0], p[1]);
    chk.r_polar = std::get<Reached>(polar).z.real();
    chk.deviation = std::abs(chk.r_cartesian - chk.r_polar);
    return chk;
}

}  // namespace abel
