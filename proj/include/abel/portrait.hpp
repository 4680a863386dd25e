#pragma once

// Phase-portrait geometry near infinity: the disc of radius rho, the arms
// G_k around the rays theta = k pi / (n-1), the gaps H_k between them, and
// the sector sign checks on theta' for the Abel equation.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "abel/errors.hpp"
#include "abel/flow.hpp"
#include "abel/trigpoly.hpp"

namespace abel {

struct ArmGeometry {
    int n = 3;
    double a = 6.0;
    double rho = 6.6;
    double norm_P = 0.0;
};

inline ArmGeometry arm_geometry(int n, double norm_p) {
    if (n < 3) throw std::invalid_argument("arm_geometry: degree must be at least 3");
    return ArmGeometry{n, arm_constant(norm_p), disk_radius(n, norm_p), norm_p};
}

template <class Eq>
ArmGeometry arm_geometry(const Eq& eq) {
    return arm_geometry(eq.n(), eq.norm());
}

struct Region {
    enum class Kind { Disk, Arm, Gap };
    Kind kind = Kind::Disk;
    int k = 0;

    static Region disk() { return {Kind::Disk, 0}; }
    static Region arm(int k) { return {Kind::Arm, k}; }
    static Region gap(int k) { return {Kind::Gap, k}; }
    bool operator==(const Region&) const = default;
};

inline std::string to_string(const Region& r) {
    switch (r.kind) {
    case Region::Kind::Disk: return "D";
    case Region::Kind::Arm: return "G" + std::to_string(r.k);
    case Region::Kind::Gap: return "H" + std::to_string(r.k);
    }
    return "?";
}

/// Disk for |z| <= rho; Arm(k) when theta is strictly within a/r of
/// k pi/(n-1) (the nearest centre wins where arms overlap); Gap(k) for
/// theta between the arms k and k+1, edges included.
inline Region classify_point(cplx z, const ArmGeometry& g) {
    const double r = std::abs(z);
    if (r <= g.rho) return Region::disk();
    const double two_pi = 2.0 * std::numbers::pi;
    const double step = std::numbers::pi / (g.n - 1);
    const int arms = 2 * g.n - 2;
    double theta = std::atan2(z.imag(), z.real());
    if (theta < 0.0) theta += two_pi;
    const double width = g.a / r;
    const int nearest = int(std::lround(theta / step)) % arms;
    double d = std::remainder(theta - nearest * step, two_pi);
    if (std::abs(d) < width) return Region::arm(nearest);
    const int k = std::min(int(std::floor(theta / step)), arms - 1);
    return Region::gap(k);
}

/// Region of conj(z) in terms of the region of z.
inline Region reflect(const Region& r, int n) {
    const int arms = 2 * n - 2;
    switch (r.kind) {
    case Region::Kind::Disk: return r;
    case Region::Kind::Arm: return Region::arm((arms - r.k) % arms);
    case Region::Kind::Gap: return Region::gap(arms - 1 - r.k);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Escape arms

struct Bounded {};
struct Escapes {
    int k = 0;
    double t_escape = 0.0;   // negative for backward escapes
    bool parity_ok = true;   // even k forward, odd k backward
};
using EscapeResult = std::variant<Bounded, Escapes>;

class AmbiguousEscape : public std::runtime_error {
public:
    AmbiguousEscape(cplx z, Region r)
        : std::runtime_error("blow-up point (" + std::to_string(z.real()) + "," + std::to_string(z.imag()) +
                             ") lies in gap " + to_string(r)),
          z_(z), region_(r) {}
    cplx z() const { return z_; }
    Region region() const { return region_; }

private:
    cplx z_;
    Region region_;
};

enum class Direction { Forward, Backward };

inline constexpr int kBackwardPeriods = 10;

/// Forward: flow over [0, omega]. Backward: flow of the reversed field over
/// up to kBackwardPeriods periods. A blow-up is attributed to the arm that
/// contains the crossing point of the escape radius.
template <PolynomialField F>
EscapeResult escape_arm(const F& f, cplx c, const ArmGeometry& g, Direction dir = Direction::Forward,
                        const FlowOptions& opt = {}) {
    FlowOutcome out;
    if (dir == Direction::Forward) {
        out = transit(f, c, opt);
    } else {
        const Reversed<F> rev(f);
        out = integrate(rev, c, 0.0, kBackwardPeriods * f.period(), opt);
    }
    const auto* b = std::get_if<BlowUp>(&out);
    if (!b) return Bounded{};
    const Region reg = classify_point(b->z_last, g);
    if (reg.kind != Region::Kind::Arm) throw AmbiguousEscape(b->z_last, reg);
    const bool even = reg.k % 2 == 0;
    if (dir == Direction::Forward) return Escapes{reg.k, b->t_escape, even};
    return Escapes{reg.k, -b->t_escape, !even};
}

// ---------------------------------------------------------------------------
// Trajectory samples

struct TrajectorySample {
    double t;
    cplx z;
    Region region;
};

/// z(t, c) at `per_period` equally spaced times per period over `periods`
/// periods; stops after the first sample past a blow-up (reported at the
/// escape-radius crossing).
template <PolynomialField F>
std::vector<TrajectorySample> sample_trajectory(const F& f, cplx c, double periods, int per_period,
                                                const ArmGeometry& g, const FlowOptions& opt = {}) {
    if (!(periods > 0.0) || per_period < 1) throw std::invalid_argument("sample_trajectory: bad sampling");
    const int count = int(std::ceil(periods * per_period));
    const double h = f.period() / per_period;
    std::vector<TrajectorySample> out{{0.0, c, classify_point(c, g)}};
    cplx z = c;
    for (int i = 0; i < count; ++i) {
        const double t0 = i * h, t1 = std::min((i + 1) * h, periods * f.period());
        const auto o = integrate(f, z, t0, t1, opt);
        if (const auto* b = std::get_if<BlowUp>(&o)) {
            out.push_back({b->t_escape, b->z_last, classify_point(b->z_last, g)});
            break;
        }
        z = std::get<Reached>(o).z;
        out.push_back({t1, z, classify_point(z, g)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Sector checks for the Abel equation

/// theta' at (r, theta, t) for z' = z^n + alpha z^(n-1) + beta z^(n-2).
inline double theta_dot(const AbelEquation& eq, double r, double theta, double t) {
    const int n = eq.n();
    return std::pow(r, n - 1) * std::sin((n - 1) * theta) +
           std::pow(r, n - 2) * eq.alpha().eval(t) * std::sin((n - 2) * theta) +
           std::pow(r, n - 3) * eq.beta().eval(t) * std::sin((n - 3) * theta);
}

struct SectorContainment {
    bool upper = false;  // k pi/(n-2) > k pi/(n-1) + a/rho
    bool lower = false;  // (k-1) pi/(n-2) < k pi/(n-1) - a/rho
};

inline SectorContainment sector_containment(const ArmGeometry& g, int k) {
    const double pi = std::numbers::pi;
    const int n = g.n;
    const double w = g.a / g.rho;
    return {k * pi / (n - 2) > k * pi / (n - 1) + w, (k - 1) * pi / (n - 2) < k * pi / (n - 1) - w};
}

struct Verified {};
struct Violated {
    double t = 0.0;
    double theta = 0.0;
};
using SectorResult = std::variant<Verified, Violated>;

/// theta' < 0 on theta_1 = k pi/(n-2) and theta' > 0 on theta_2 = (k-1) pi/(n-2)
/// at `t_samples` times, plus the certified margin
/// r^(n-1) |sin((n-1) theta_i)| > |P| r^(n-3). For k = 1, theta_2 = 0 is the
/// invariant real axis, where theta' = 0 identically and is accepted.
inline SectorResult sector_sign_check(const AbelEquation& eq, int k, double r, int t_samples = 256) {
    const int n = eq.n();
    if (k < 1 || k > n - 3 || k % 2 == 0) throw std::invalid_argument("sector_sign_check: k must be odd in [1, n-3]");
    if (t_samples < 1) throw std::invalid_argument("sector_sign_check: t_samples must be positive");
    const auto g = arm_geometry(eq);
    if (!(r >= g.rho)) throw std::invalid_argument("sector_sign_check: r must be at least rho");
    if (!is_certified_nonpositive(certify_nonpositive(eq.beta()))) throw HypothesisNotCertified("beta <= 0");

    const double pi = std::numbers::pi;
    const double th1 = k * pi / (n - 2), th2 = (k - 1) * pi / (n - 2);
    const double norm = eq.norm();
    for (double th : {th1, th2}) {
        const double lead = std::pow(r, n - 1) * std::abs(std::sin((n - 1) * th));
        if (th == 0.0) continue;
        if (!(lead > norm * std::pow(r, n - 3))) return Violated{0.0, th};
    }
    for (int i = 0; i < t_samples; ++i) {
        const double t = eq.omega() * i / t_samples;
        if (!(theta_dot(eq, r, th1, t) < 0.0)) return Violated{t, th1};
        const double d2 = theta_dot(eq, r, th2, t);
        if (th2 == 0.0 ? d2 != 0.0 : !(d2 > 0.0)) return Violated{t, th2};
    }
    return Verified{};
}

}  // namespace abel
