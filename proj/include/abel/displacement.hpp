#pragma once

// The displacement map q(c) = z(omega, c) - c: evaluation, Newton
// refinement of its zeros, argument-principle counting on circles, and
// search for real zeros.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "abel/flow.hpp"
#include "abel/parallel.hpp"

namespace abel {

struct DisplacementOptions {
    FlowOptions flow{};
    double newton_tol = 1e-12;       // |q| target
    int max_iter = 100;
    double derivative_tol = 1e-6;    // |q'| below this: treat as a multiple zero
    double dedup_tol = 1e-6;
    double local_radius = 1e-3;      // contour radius for local multiplicity
    int initial_samples = 64;
    int max_contour_points = 1 << 16;
};

struct PeriodicOrbit {
    cplx c0{};
    int multiplicity = 1;
    bool is_real = false;
    double residual = 0.0;   // |q(c0)|
    cplx multiplier{};       // dz(omega)/dc at c0
    cplx log_multiplier{};   // its logarithm, finite even when the multiplier is not
};

struct CountReport {
    cplx contour_center{};
    double contour_radius = 0.0;
    int winding = 0;
    std::vector<PeriodicOrbit> orbits;
    bool certified = false;
};

enum class ContourFailure { ThroughZero, HitsBlowUp };

class ContourError : public std::runtime_error {
public:
    ContourError(ContourFailure kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ContourFailure kind() const { return kind_; }

private:
    ContourFailure kind_;
};

struct NoConvergence {
    cplx last{};
    int iterations = 0;
    bool entered_undefined = false;
};

using NewtonResult = std::variant<PeriodicOrbit, NoConvergence>;

/// q and q' at one point; empty when c is outside the domain Q.
struct QValue {
    cplx q;
    cplx dq;
};

template <PolynomialField F>
std::optional<cplx> q(const F& f, cplx c, const FlowOptions& opt = {}) {
    auto end = transit_full(f, c, false, opt);
    if (!reached(end.outcome)) return std::nullopt;
    return end.displacement;
}

template <PolynomialField F>
std::optional<cplx> q_prime(const F& f, cplx c, const FlowOptions& opt = {}) {
    auto end = transit_full(f, c, true, opt);
    if (!reached(end.outcome)) return std::nullopt;
    return *end.v_minus_one;
}

template <PolynomialField F>
std::optional<QValue> q_with_derivative(const F& f, cplx c, const FlowOptions& opt = {}) {
    auto end = transit_full(f, c, true, opt);
    if (!reached(end.outcome)) return std::nullopt;
    return QValue{end.displacement, *end.v_minus_one};
}

// ---------------------------------------------------------------------------
// Argument principle

struct WindingResult {
    int winding = 0;
    double raw = 0.0;          // total argument change / 2 pi
    bool certified = false;
    std::size_t points = 0;
    double min_abs = 0.0;
    double max_abs = 0.0;
};

/// Winding number of q around the circle |c - center| = radius. Arcs are
/// bisected until consecutive argument increments are below pi/2 and the
/// relative change of q is below 1/2.
template <PolynomialField F>
WindingResult winding_number(const F& f, cplx center, double radius, const DisplacementOptions& opt = {}) {
    if (!(radius > 0.0)) throw std::invalid_argument("winding_number: radius must be positive");
    const int n0 = std::max(opt.initial_samples, 8);
    const double two_pi = 2.0 * std::numbers::pi;
    auto eval_at = [&](double theta) -> cplx {
        const auto v = q(f, center + std::polar(radius, theta), opt.flow);
        if (!v) throw ContourError(ContourFailure::HitsBlowUp, "contour point outside the domain of q");
        return *v;
    };

    struct Node {
        double theta;
        cplx value;
    };
    auto initial = parallel_map<cplx>(std::size_t(n0), [&](std::size_t k) { return eval_at(two_pi * double(k) / n0); });

    WindingResult res;
    res.min_abs = std::numeric_limits<double>::infinity();
    double total = 0.0;
    std::size_t points = std::size_t(n0);
    bool capped = false;
    auto note = [&](cplx v) {
        res.min_abs = std::min(res.min_abs, std::abs(v));
        res.max_abs = std::max(res.max_abs, std::abs(v));
    };
    for (const auto& v : initial) note(v);

    for (int k = 0; k < n0; ++k) {
        // Depth-first refinement of one initial arc, in order.
        std::vector<std::pair<Node, Node>> stack{{Node{two_pi * k / n0, initial[std::size_t(k)]},
                                                 Node{two_pi * (k + 1) / n0, initial[std::size_t((k + 1) % n0)]}}};
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            const double d = std::arg(b.value / a.value);
            const double lo = std::min(std::abs(a.value), std::abs(b.value));
            const double jump = std::abs(b.value - a.value) / lo;
            if ((std::abs(d) < 0.5 * std::numbers::pi && jump < 0.5) || capped) {
                total += d;
                continue;
            }
            if (b.theta - a.theta < 1e-12) {
                // A jump that survives refinement: the arc straddles a thin
                // blow-up curve, or runs into a zero.
                if (lo < 1e-8 * res.max_abs)
                    throw ContourError(ContourFailure::ThroughZero, "contour passes (nearly) through a zero of q");
                throw ContourError(ContourFailure::HitsBlowUp, "contour crosses the blow-up set");
            }
            if (points >= std::size_t(opt.max_contour_points)) {
                capped = true;
                total += d;
                continue;
            }
            const double tm = 0.5 * (a.theta + b.theta);
            Node m{tm, eval_at(tm)};
            note(m.value);
            ++points;
            stack.push_back({m, b});
            stack.push_back({a, m});
        }
    }
    if (res.min_abs < 1e-8 * res.max_abs || res.min_abs == 0.0)
        throw ContourError(ContourFailure::ThroughZero, "contour passes (nearly) through a zero of q");
    res.points = points;
    res.raw = total / two_pi;
    res.winding = int(std::lround(res.raw));
    res.certified = !capped && std::abs(res.raw - res.winding) < 0.05;
    return res;
}

// ---------------------------------------------------------------------------
// Orbits

namespace detail {

/// Local multiplicity from the winding on shrinking circles around c0.
template <PolynomialField F>
std::optional<int> local_multiplicity(const F& f, cplx c0, double radius, const DisplacementOptions& opt) {
    for (int attempt = 0; attempt < 4; ++attempt, radius *= 0.1) {
        try {
            auto w = winding_number(f, c0, radius, opt);
            if (w.certified && w.winding >= 1) return w.winding;
        } catch (const ContourError&) {
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Fills residual, multiplier and multiplicity for a located zero.
template <PolynomialField F>
std::optional<PeriodicOrbit> make_orbit(const F& f, cplx c0, const DisplacementOptions& opt = {}) {
    if (std::abs(c0.imag()) < opt.dedup_tol) c0 = {c0.real(), 0.0};
    const auto end = transit_full(f, c0, true, opt.flow);
    if (!reached(end.outcome)) return std::nullopt;
    PeriodicOrbit o;
    o.c0 = c0;
    o.is_real = c0.imag() == 0.0;
    o.residual = std::abs(end.displacement);
    o.multiplier = *end.v;
    o.log_multiplier = *end.log_v;
    if (std::abs(*end.v_minus_one) > opt.derivative_tol) {
        o.multiplicity = 1;
    } else {
        o.multiplicity = detail::local_multiplicity(f, c0, opt.local_radius, opt).value_or(1);
    }
    return o;
}

namespace detail {

/// Plain Newton on the displacement of the time-reversed flow. Zeros are
/// the same; an orbit that is strongly repelling forward is attracting
/// backward, so this polishes where forward shooting loses digits.
template <PolynomialField F>
cplx backward_polish(const F& f, cplx c, const DisplacementOptions& opt) {
    const Reversed<F> rev(f);
    for (int it = 0; it < 8; ++it) {
        const auto pv = q_with_derivative(rev, c, opt.flow);
        if (!pv || pv->dq == 0.0) break;
        const cplx step = -pv->q / pv->dq;
        if (!q(rev, c + step, opt.flow)) break;
        c += step;
        if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(c))) break;
    }
    return c;
}

}  // namespace detail

namespace detail {

/// Newton iteration on q using the variational derivative. Steps into the
/// blow-up region are halved; a vanishing derivative falls back to a damped
/// secant step. Linear convergence with a stable ratio r is read as a zero
/// of multiplicity m = 1/(1-r) and the step is scaled by m.
template <PolynomialField F>
NewtonResult newton_one_way(const F& f, cplx c_init, double tol, int max_iter, const DisplacementOptions& opt = {}) {
    cplx c = c_init;
    auto cur = q_with_derivative(f, c, opt.flow);
    if (!cur) return NoConvergence{c, 0, true};
    std::optional<std::pair<cplx, cplx>> prev;  // (c, q)
    double last_len = 0.0, last_ratio = -1.0;

    auto finish = [&](cplx at) -> NewtonResult {
        auto o = make_orbit(f, at, opt);
        if (!o) return NoConvergence{at, max_iter, true};
        return *o;
    };

    for (int it = 1; it <= max_iter; ++it) {
        if (cur->q == 0.0) return finish(c);
        cplx step;
        if (std::abs(cur->dq) > 0.0 && std::isfinite(std::abs(cur->dq))) {
            step = -cur->q / cur->dq;
            const double len = std::abs(step);
            if (last_len > 0.0) {
                const double ratio = len / last_len;
                if (last_ratio > 0.3 && ratio < 0.95 && std::abs(ratio - last_ratio) < 0.02) {
                    step *= std::round(1.0 / (1.0 - ratio));
                    last_ratio = -1.0;
                } else {
                    last_ratio = ratio;
                }
            }
            last_len = len;
        } else if (prev && prev->second != cur->q) {
            step = -0.5 * cur->q * (c - prev->first) / (cur->q - prev->second);
        } else {
            step = 1e-3 * std::max(1.0, std::abs(c));
        }
        cplx next = c + step;
        auto nv = q_with_derivative(f, next, opt.flow);
        for (int halve = 0; !nv && halve < 12; ++halve) {
            step *= 0.5;
            next = c + step;
            nv = q_with_derivative(f, next, opt.flow);
        }
        if (!nv) return NoConvergence{c, it, true};
        prev = std::make_pair(c, cur->q);
        c = next;
        cur = nv;
        const double scale = std::max(1.0, std::abs(c));
        if (std::abs(step) <= 1e-12 * scale) return finish(c);
        if (std::abs(cur->q) <= tol * scale && std::abs(step) <= 1e-8 * scale) return finish(c);
    }
    // Forward shooting stalls at the noise floor of strongly repelling
    // orbits; retry on the time-reversed flow.
    if (std::abs(1.0 + cur->dq) > 1e3) {
        const cplx polished = detail::backward_polish(f, c, opt);
        const Reversed<F> rev(f);
        const auto pv = q_with_derivative(rev, polished, opt.flow);
        if (pv && std::abs(pv->q) <= tol * std::max(1.0, std::abs(polished)))
            if (auto o = make_orbit(f, polished, opt)) return *o;
    }
    return NoConvergence{c, max_iter, false};
}

}  // namespace detail

template <PolynomialField F>
CountReport winding_count(const F& f, cplx center, double radius, int initial_samples,
                          DisplacementOptions opt = {}) {
    opt.initial_samples = initial_samples;
    auto w = winding_number(f, center, radius, opt);
    CountReport rep;
    rep.contour_center = center;
    rep.contour_radius = radius;
    rep.winding = w.winding;
    rep.certified = w.certified;
    return rep;
}

// ---------------------------------------------------------------------------
// Real search

namespace detail {

/// Zeros within tol of each other merge, and so do zeros sharing a disc of
/// radius local_radius with a multiple zero, since that disc's winding
/// already counts them. The smallest residual is kept.
inline void dedup_orbits(std::vector<PeriodicOrbit>& orbits, double tol, double local_radius = 0.0) {
    std::sort(orbits.begin(), orbits.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
        if (a.c0.real() != b.c0.real()) return a.c0.real() < b.c0.real();
        return a.c0.imag() < b.c0.imag();
    });
    std::vector<PeriodicOrbit> out;
    for (const auto& o : orbits) {
        auto dup = std::find_if(out.begin(), out.end(), [&](const PeriodicOrbit& p) {
            const double d = std::abs(p.c0 - o.c0);
            return d < tol * std::max(1.0, std::abs(o.c0)) ||
                   (d < local_radius && (p.multiplicity > 1 || o.multiplicity > 1));
        });
        if (dup == out.end()) out.push_back(o);
        else if (o.residual < dup->residual) *dup = o;
    }
    orbits = std::move(out);
}

}  // namespace detail

namespace detail {

/// Sign changes (and exact zeros) of real q on a grid over the real domain
/// inside [c_min, c_max], bisected to 1e-13.
template <PolynomialField F>
std::vector<double> real_roots(const F& f, double c_min, double c_max, const DisplacementOptions& opt) {
    auto qr = [&](double c) -> std::optional<double> {
        auto v = q(f, cplx(c, 0.0), opt.flow);
        if (!v) return std::nullopt;
        return v->real();
    };

    // Defined anchor: the real domain is an interval (solutions are ordered).
    std::optional<double> anchor;
    if (c_min <= 0.0 && 0.0 <= c_max && qr(0.0)) anchor = 0.0;
    for (int k = 0; !anchor && k <= 64; ++k) {
        const double c = c_min + (c_max - c_min) * (k + 0.5) / 65.0;
        if (qr(c)) anchor = c;
    }
    if (!anchor) return {};

    auto boundary = [&](double inside, double outside) {
        if (qr(outside)) return outside;
        for (int it = 0; it < 200 && std::abs(outside - inside) > 1e-13 * std::max(1.0, std::abs(inside)); ++it) {
            const double mid = 0.5 * (inside + outside);
            (qr(mid) ? inside : outside) = mid;
        }
        return inside;
    };
    const double lo = boundary(*anchor, c_min);
    const double hi = boundary(*anchor, c_max);

    std::vector<double> grid;
    constexpr int uniform = 128;
    for (int k = 0; k <= uniform; ++k) grid.push_back(lo + (hi - lo) * k / uniform);
    // Logarithmic points on both sides of 0, where bifurcating orbits sit.
    const double span = hi - lo;
    for (double e = -6.0; e <= std::log10(std::max(span, 1e-6)); e += 0.1) {
        const double d = std::pow(10.0, e);
        for (double c : {d, -d})
            if (c > lo && c < hi) grid.push_back(c);
    }
    if (lo < 0.0 && hi > 0.0) grid.push_back(0.0);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const auto values = parallel_map<std::optional<double>>(grid.size(), [&](std::size_t i) { return qr(grid[i]); });

    std::vector<double> roots;
    std::optional<std::size_t> last;  // last index with a defined nonzero value
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!values[i]) continue;
        const double v = *values[i];
        if (v == 0.0) {
            roots.push_back(grid[i]);
            last.reset();
            continue;
        }
        if (last && (*values[*last] < 0.0) != (v < 0.0)) {
            double a = grid[*last], b = grid[i];
            double fa = *values[*last];
            for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::abs(a)); ++it) {
                const double m = 0.5 * (a + b);
                const auto fm = qr(m);
                if (!fm) break;
                if (*fm == 0.0) {
                    a = b = m;
                    break;
                }
                if ((*fm < 0.0) == (fa < 0.0)) {
                    a = m;
                    fa = *fm;
                } else {
                    b = m;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        last = i;
    }
    return roots;
}

/// Orbit data for a zero located on the time-reversed flow. The forward
/// data is used when the forward flow resolves it; otherwise residual and
/// multiplier come from the backward displacement (multiplier inverted).
template <PolynomialField F>
std::optional<PeriodicOrbit> orbit_from_backward(const F& f, cplx c0, const DisplacementOptions& opt) {
    if (std::abs(c0.imag()) < opt.dedup_tol) c0 = {c0.real(), 0.0};
    if (auto o = make_orbit(f, c0, opt); o && o->residual <= 1e-10 * std::max(1.0, std::abs(c0))) return o;
    const Reversed<F> rev(f);
    const auto end = transit_full(rev, c0, true, opt.flow);
    if (!reached(end.outcome)) return std::nullopt;
    PeriodicOrbit o;
    o.c0 = c0;
    o.is_real = c0.imag() == 0.0;
    o.residual = std::abs(end.displacement);
    o.log_multiplier = -*end.log_v;
    o.multiplier = std::exp(o.log_multiplier);
    o.multiplicity = 1;
    return o;
}

}  // namespace detail

/// Newton iteration on q in both time directions; the converged zero
/// nearest c_init wins. A repelling orbit attracts under the reversed flow,
/// so it is reached from starts where forward shooting falls into another
/// basin or leaves the domain.
template <PolynomialField F>
NewtonResult newton_refine(const F& f, cplx c_init, double tol, int max_iter, const DisplacementOptions& opt = {}) {
    if (!(tol > 0.0)) throw std::invalid_argument("newton_refine: tol must be positive");
    const auto fwd = detail::newton_one_way(f, c_init, tol, max_iter, opt);
    const Reversed<F> rev(f);
    const auto bwd = detail::newton_one_way(rev, c_init, tol, max_iter, opt);
    std::optional<PeriodicOrbit> back;
    if (const auto* o = std::get_if<PeriodicOrbit>(&bwd); o && o->residual <= tol * std::max(1.0, std::abs(o->c0)))
        back = detail::orbit_from_backward(f, o->c0, opt);
    const auto* ahead = std::get_if<PeriodicOrbit>(&fwd);
    if (ahead && back) return std::abs(ahead->c0 - c_init) <= std::abs(back->c0 - c_init) ? *ahead : *back;
    if (ahead) return *ahead;
    if (back) return *back;
    return fwd;
}

/// All real zeros of q in [c_min, c_max] found by sign changes (plus exact
/// zeros such as the origin). Both time directions are scanned, so strongly
/// repelling orbits are found as attracting ones of the reversed flow.
/// Zeros of even multiplicity away from grid points do not change sign and
/// are not reported.
template <PolynomialField F>
std::vector<PeriodicOrbit> real_periodic_solutions(const F& f, double c_min, double c_max,
                                                   const DisplacementOptions& opt = {}) {
    if (!(c_min < c_max)) throw std::invalid_argument("real_periodic_solutions: need c_min < c_max");
    const Reversed<F> rev(f);
    std::vector<PeriodicOrbit> orbits;
    for (double r : detail::real_roots(f, c_min, c_max, opt)) {
        auto refined = detail::newton_one_way(f, cplx(r, 0.0), opt.newton_tol, 20, opt);
        if (auto* o = std::get_if<PeriodicOrbit>(&refined); o && std::abs(o->c0.real() - r) < 1e-6 * std::max(1.0, std::abs(r))) {
            orbits.push_back(*o);
        } else if (auto o2 = make_orbit(f, cplx(r, 0.0), opt)) {
            orbits.push_back(*o2);
        }
    }
    for (double r : detail::real_roots(rev, c_min, c_max, opt)) {
        double c = r;
        auto refined = detail::newton_one_way(rev, cplx(r, 0.0), opt.newton_tol, 20, opt);
        if (auto* o = std::get_if<PeriodicOrbit>(&refined); o && std::abs(o->c0.real() - r) < 1e-6 * std::max(1.0, std::abs(r)))
            c = o->c0.real();
        if (auto o2 = detail::orbit_from_backward(f, cplx(c, 0.0), opt)) orbits.push_back(*o2);
    }
    detail::dedup_orbits(orbits, opt.dedup_tol, opt.local_radius);
    return orbits;
}

// ---------------------------------------------------------------------------
// Global search

/// Every located periodic solution with a certified local contour around
/// each distinct one; `total` sums the local winding numbers.
struct GlobalCount {
    std::vector<PeriodicOrbit> orbits;
    std::vector<CountReport> contours;
    int total = 0;
    bool certified = false;
    std::vector<std::string> notes;
};

namespace detail {

/// Cauchy-type bound on the roots of the time-averaged polynomial.
template <PolynomialField F>
double averaged_root_bound(const F& f) {
    std::array<double, kMaxDegree + 1> acc{}, buf{};
    constexpr int samples = 64;
    for (int k = 0; k < samples; ++k) {
        f.coefficients(f.period() * k / samples, buf.data());
        for (int m = 0; m <= f.degree(); ++m) acc[std::size_t(m)] += buf[std::size_t(m)] / samples;
    }
    const double lead = std::abs(acc[std::size_t(f.degree())]);
    double mx = 0.0;
    for (int m = 0; m < f.degree(); ++m) mx = std::max(mx, std::abs(acc[std::size_t(m)]));
    return lead > 0.0 ? 1.0 + mx / lead : 1.0;
}

}  // namespace detail

template <PolynomialField F>
GlobalCount find_periodic_solutions(const F& f, const DisplacementOptions& opt = {}) {
    GlobalCount out;
    std::vector<PeriodicOrbit> found;
    const double bound = detail::averaged_root_bound(f);
    const double reach = std::max(4.0 * bound, 4.0);

    for (const auto& o : real_periodic_solutions(f, -reach, reach, opt)) found.push_back(o);

    double scale = bound;
    for (const auto& o : found) scale = std::max(scale, std::abs(o.c0));
    std::vector<cplx> seeds;
    for (double ring : {0.15, 0.5, 1.0}) {
        for (int k = 0; k < 8; ++k)
            seeds.push_back(std::polar(ring * scale, (k + 0.5) * std::numbers::pi / 4.0));
    }
    const Reversed<F> rev(f);
    // Seeds are refined in both time directions; backward results are
    // converted to forward orbit data.
    auto refined = parallel_map<NewtonResult>(2 * seeds.size(), [&](std::size_t i) -> NewtonResult {
        if (i < seeds.size()) return detail::newton_one_way(f, seeds[i], opt.newton_tol, 60, opt);
        auto r = detail::newton_one_way(rev, seeds[i - seeds.size()], opt.newton_tol, 60, opt);
        if (const auto* o = std::get_if<PeriodicOrbit>(&r)) {
            if (o->residual > 1e-8 * std::max(1.0, std::abs(o->c0))) return NoConvergence{o->c0, 60, false};
            if (auto fwd = detail::orbit_from_backward(f, o->c0, opt)) return *fwd;
            return NoConvergence{o->c0, 60, true};
        }
        return r;
    });
    for (const auto& r : refined) {
        if (const auto* o = std::get_if<PeriodicOrbit>(&r)) {
            const double accept = 1e-8 * std::max(1.0, std::abs(o->c0));
            if (o->residual > accept) {
                const auto back = q(rev, o->c0, opt.flow);
                if (!back || std::abs(*back) > accept) continue;
            }
            found.push_back(*o);
            if (!o->is_real) {
                PeriodicOrbit c = *o;
                c.c0 = std::conj(o->c0);
                c.multiplier = std::conj(o->multiplier);
                c.log_multiplier = std::conj(o->log_multiplier);
                found.push_back(c);
            }
        }
    }
    detail::dedup_orbits(found, opt.dedup_tol, opt.local_radius);

    out.certified = true;
    for (std::size_t i = 0; i < found.size(); ++i) {
        auto& orb = found[i];
        double sep = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < found.size(); ++j)
            if (j != i) sep = std::min(sep, std::abs(found[j].c0 - orb.c0));
        // Repelling orbits are counted on the time-reversed flow, whose
        // displacement has the same zeros with the same multiplicities and
        // is well conditioned there.
        const bool backward = orb.log_multiplier.real() > 0.0;
        const auto dq = backward ? q_prime(rev, orb.c0, opt.flow).value_or(cplx(1.0))
                                 : q_prime(f, orb.c0, opt.flow).value_or(cplx(1.0));
        double r = std::min(0.3 * sep, 0.5);
        if (std::abs(dq) > opt.derivative_tol)
            r = std::min(r, 0.25 * std::max(std::abs(orb.c0), 1e-2) / std::max(1.0, std::abs(dq)));
        CountReport rep;
        bool done = false;
        for (int attempt = 0; attempt < 30 && !done; ++attempt, r *= 0.5) {
            try {
                rep = backward ? winding_count(rev, orb.c0, r, opt.initial_samples, opt)
                               : winding_count(f, orb.c0, r, opt.initial_samples, opt);
                done = rep.certified;
            } catch (const ContourError&) {
            }
        }
        if (!done) {
            out.certified = false;
            out.notes.push_back("no certified local contour around c=(" + std::to_string(orb.c0.real()) + "," +
                                std::to_string(orb.c0.imag()) + ")");
            out.orbits.push_back(orb);
            continue;
        }
        if (rep.winding == 0) {
            // Certified empty disc: the candidate was not a zero.
            out.notes.push_back("discarded candidate without a zero at c=(" + std::to_string(orb.c0.real()) + "," +
                                std::to_string(orb.c0.imag()) + ")");
            continue;
        }
        orb.multiplicity = rep.winding;
        rep.orbits = {orb};
        out.total += rep.winding;
        out.contours.push_back(rep);
        out.orbits.push_back(orb);
    }
    return out;
}

/// Tries a single circle about 0 enclosing every located orbit; returns
/// empty when every tried radius meets the blow-up set.
template <PolynomialField F>
std::optional<CountReport> enclosing_contour(const F& f, const std::vector<PeriodicOrbit>& orbits,
                                             const DisplacementOptions& opt = {}) {
    double rmax = 0.0;
    for (const auto& o : orbits) rmax = std::max(rmax, std::abs(o.c0));
    const double base = std::max(rmax, 1e-3);
    for (double factor : {1.05, 1.2, 1.5, 2.0, 3.0}) {
        try {
            auto rep = winding_count(f, cplx{}, base * factor, opt.initial_samples, opt);
            if (rep.certified) {
                for (const auto& o : orbits)
                    if (std::abs(o.c0) < rep.contour_radius) rep.orbits.push_back(o);
                return rep;
            }
        } catch (const ContourError&) {
        }
    }
    return std::nullopt;
}

}  // namespace abel
