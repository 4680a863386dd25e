// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "abel/abel.hpp"
#include "instances.hpp"
#include "oracles.hpp"

using namespace abel;
using instances::kTwoPi;
using instances::Source;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

/// |q(c0)| on the forward field, or on the reversed field when the forward
/// value is swamped by a huge multiplier.
template <class F>
double location_residual(const F& f, cplx c0) {
    double best = std::numeric_limits<double>::infinity();
    if (auto v = q(f, c0)) best = std::abs(*v);
    const Reversed<F> rev(f);
    if (auto v = q(rev, c0)) best = std::min(best, std::abs(*v));
    return best;
}

// 1 -------------------------------------------------------------------------
Outcome global_count() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto eqs = instances::count_family();
    int good = 0;
    std::string bad;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        const auto& eq = eqs[i];
        if (!is_certified_nonpositive(certify_nonpositive(eq.beta()))) {
            bad += fmt(" #%zu:beta", i);
            continue;
        }
        const auto g = find_periodic_solutions(eq);
        if (g.certified && g.total == eq.n())
            ++good;
        else
            bad += fmt(" #%zu:n=%d,total=%d,cert=%d", i, eq.n(), g.total, int(g.certified));
    }
    const double dt = seconds_since(t0);
    const bool pass = good == int(eqs.size()) && dt < 60.0;
    return {pass, fmt("%d/%zu equations counted exactly n, %.1f s (limit 60 s)%s", good, eqs.size(), dt, bad.c_str())};
}

// 2 -------------------------------------------------------------------------
AbelEquation origin_instance(Source& src, int n, int kind) {
    auto harmonic_only = [&](double amp) { return TrigPoly(0.0, src.harmonics(src.integer(1, 3), amp), kTwoPi); };
    const bool n3 = n == 3;
    switch (kind) {
    case 0: {
        const TrigPoly alpha(src.uniform(-1.0, 1.0), src.harmonics(src.integer(1, 3), 1.0), kTwoPi);
        const TrigPoly beta(src.sign() * src.uniform(0.2, 1.0), src.harmonics(src.integer(0, 2), 0.5), kTwoPi);
        return AbelEquation(n, alpha, beta, kTwoPi);
    }
    case 1: {
        const TrigPoly alpha(src.sign() * src.uniform(0.2, 1.0), src.harmonics(src.integer(0, 2), 1.0), kTwoPi);
        return AbelEquation(n, alpha, n3 ? TrigPoly(0.0, kTwoPi) : harmonic_only(0.5), kTwoPi);
    }
    default:
        return AbelEquation(n, harmonic_only(1.0), n3 ? TrigPoly(0.0, kTwoPi) : harmonic_only(0.5), kTwoPi);
    }
}

Outcome origin_multiplicity() {
    Source src(7301);
    const OriginCase expected[] = {OriginCase::BNonzero, OriginCase::BZeroANonzero, OriginCase::BothZero};
    int good = 0, cases[3] = {0, 0, 0};
    std::string bad;
    for (int i = 0; i < 50; ++i) {
        const int n = 3 + i % 5, kind = i % 3;
        const auto eq = origin_instance(src, n, kind);
        const auto cls = classify_origin(eq);
        const auto general = multiplicity_origin_general(eq.general());
        const auto w = winding_count(eq, cplx{}, 1e-3, 64);
        const bool ok = cls.case_label == expected[kind] && general && *general == cls.multiplicity && w.certified &&
                        w.winding == cls.multiplicity;
        if (ok) {
            ++good;
            ++cases[kind];
        } else {
            bad += fmt(" #%d:n=%d,closed=%d,series=%d,winding=%d", i, n, cls.multiplicity, general ? *general : -1,
                       w.winding);
        }
    }
    return {good == 50, fmt("%d/50 agree (B!=0: %d, B=0 A!=0: %d, A=B=0: %d)%s", good, cases[0], cases[1], cases[2],
                            bad.c_str())};
}

// 3 -------------------------------------------------------------------------
Outcome sign_cases() {
    Source src(5157);
    int good[3] = {0, 0, 0};
    std::string bad;
    for (int kind = 0; kind < 3; ++kind) {
        for (int i = 0; i < 10; ++i) {
            const int n = src.integer(3, 7);
            AbelEquation eq = [&] {
                if (kind == 0) {
                    const double eps = src.uniform(0.005, 0.05);
                    std::vector<Harmonic> hb{{1, 0.2 * eps * src.uniform(-1, 1), 0.2 * eps * src.uniform(-1, 1)}};
                    return AbelEquation(n, TrigPoly(src.uniform(-0.5, 0.5), src.harmonics(src.integer(1, 3), 0.5), kTwoPi),
                                        TrigPoly(-eps, hb, kTwoPi), kTwoPi);
                }
                if (kind == 1)
                    return AbelEquation(n, TrigPoly(src.sign() * src.uniform(0.2, 1.0), src.harmonics(src.integer(0, 2), 0.5), kTwoPi),
                                        TrigPoly(0.0, kTwoPi), kTwoPi);
                return AbelEquation(n, TrigPoly(0.0, src.harmonics(src.integer(1, 3), 0.8), kTwoPi), TrigPoly(0.0, kTwoPi),
                                    kTwoPi);
            }();
            const auto r = corollary_cases(eq);
            bool ok = false;
            switch (kind) {
            case 0: ok = r.kind == CorollaryCase::TwoNonzero && r.positive == 1 && r.negative == 1; break;
            case 1:
                ok = r.kind == CorollaryCase::OneNonzero && r.positive + r.negative == 1 &&
                     (r.A > 0 ? r.negative == 1 : r.positive == 1);
                break;
            default: ok = r.kind == CorollaryCase::NoNonzero && r.nonzero_real.empty(); break;
            }
            for (const auto& o : r.nonzero_real) ok = ok && location_residual(eq, o.c0) < 1e-8;
            if (ok)
                ++good[kind];
            else
                bad += fmt(" case%d#%d:n=%d,+%d,-%d", kind + 1, i, n, r.positive, r.negative);
        }
    }
    const bool pass = good[0] == 10 && good[1] == 10 && good[2] == 10;
    return {pass, fmt("two nonzero %d/10, one nonzero %d/10, none %d/10%s", good[0], good[1], good[2], bad.c_str())};
}

// 4 -------------------------------------------------------------------------
Outcome autonomous_oracle() {
    Source src(4242);
    int good = 0, total = 0;
    double worst = 0.0;
    std::string bad;
    for (int n = 3; n <= 7; ++n) {
        std::vector<std::pair<double, double>> params{{0.7, -0.5}, {-1.2, -0.3}, {0.0, -0.8}, {0.6, 0.0}};
        params.push_back({src.uniform(-1.5, 1.5), -src.uniform(0.05, 1.5)});
        for (const auto& [a, b] : params) {
            ++total;
            const AbelEquation eq(n, TrigPoly(a, kTwoPi), TrigPoly(b, kTwoPi), kTwoPi);
            std::vector<double> coef(std::size_t(n), 0.0);
            coef[std::size_t(n - 1)] = a;
            coef[std::size_t(n - 2)] = b;
            const auto roots = oracle::monic_roots(coef);
            const auto g = find_periodic_solutions(eq);
            bool ok = g.certified && g.orbits.size() == roots.size();
            for (const auto& r : roots) {
                double best = std::numeric_limits<double>::infinity();
                int mult = -1;
                for (const auto& o : g.orbits)
                    if (std::abs(o.c0 - r.z) < best) {
                        best = std::abs(o.c0 - r.z);
                        mult = o.multiplicity;
                    }
                worst = std::max(worst, best);
                ok = ok && best < 1e-8 && mult == r.multiplicity;
            }
            if (ok)
                ++good;
            else
                bad += fmt(" n=%d(a=%g,b=%g)", n, a, b);
        }
    }
    return {good == total, fmt("%d/%d equations match the root finder, worst position error %.1e%s", good, total, worst,
                               bad.c_str())};
}

// 5 -------------------------------------------------------------------------
Outcome closed_form_flow() {
    Source src(99);
    double worst_z = 0.0, worst_t = 0.0;
    int checked = 0, blowups = 0, mismatched = 0;
    for (int n = 3; n <= 7; ++n) {
        const AbelEquation eq(n, TrigPoly(0.0, 1.0), TrigPoly(0.0, 1.0), 1.0);
        for (int i = 0; i < 40; ++i) {
            const cplx c = i < 20 ? cplx(src.uniform(-1.3, 1.3), 0.0)
                                  : std::polar(src.uniform(0.05, 1.2), src.uniform(-std::numbers::pi, std::numbers::pi));
            const auto out = transit(eq, c);
            const bool real_positive_k = c.imag() == 0.0 && std::pow(c.real(), n - 1) > 0.0;
            const double tstar = real_positive_k ? oracle::pure_blowup_time(n, c.real()) : 1e300;
            if (tstar < 1.0) {
                const auto* b = std::get_if<BlowUp>(&out);
                if (!b) {
                    ++mismatched;
                    continue;
                }
                ++blowups;
                worst_t = std::max(worst_t, std::abs(b->t_escape - tstar) / tstar);
                continue;
            }
            if (!oracle::pure_flow_defined(n, c, 1.0)) continue;
            double peak = 0.0;
            for (int k = 0; k <= 200; ++k) peak = std::max(peak, std::abs(oracle::pure_flow(n, c, k / 200.0)));
            if (peak > 100.0) continue;
            const auto* r = std::get_if<Reached>(&out);
            if (!r) {
                ++mismatched;
                continue;
            }
            ++checked;
            const cplx expect = oracle::pure_flow(n, c, 1.0);
            worst_z = std::max(worst_z, std::abs(r->z - expect) / std::max(std::abs(expect), 1e-300));
        }
    }
    const bool pass = mismatched == 0 && worst_z < 1e-8 && worst_t < 1e-4 && checked > 0 && blowups > 0;
    return {pass, fmt("%d endpoints (worst rel. error %.1e), %d blow-ups (worst rel. time error %.1e), %d mismatched",
                      checked, worst_z, blowups, worst_t, mismatched)};
}

// 6 -------------------------------------------------------------------------
Outcome derivative_check() {
    Source src(606);
    const auto eqs = instances::count_family(31337, 1.0);
    FlowOptions fine;
    fine.tol = 1e-13;
    const double h = 1e-5;
    int points = 0, tries = 0;
    double worst = 0.0;
    while (points < 100 && tries < 10000) {
        ++tries;
        const auto& eq = eqs[std::size_t(tries) % eqs.size()];
        const cplx c = std::polar(src.uniform(0.0, 1.2), src.uniform(-std::numbers::pi, std::numbers::pi));
        const auto qd = q_with_derivative(eq, c, fine);
        const auto qp = q(eq, c + h, fine), qm = q(eq, c - h, fine);
        if (!qd || !qp || !qm) continue;
        ++points;
        const cplx fd = (*qp - *qm) / (2.0 * h);
        worst = std::max(worst, std::abs(qd->dq - fd) / std::max(1.0, std::abs(qd->dq)));
    }
    return {points == 100 && worst < 1e-5,
            fmt("%d points in Q, worst |q' - FD| / max(1, |q'|) = %.1e (limit 1e-5)", points, worst)};
}

// 7 -------------------------------------------------------------------------
Outcome homotopy_invariance() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto eqs = instances::count_family();
    int certified = 0, constant = 0;
    std::string bad;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        const auto fc = count_along_family(eqs[i], 11);
        if (!fc.certified) {
            bad += fmt(" #%zu:uncertified", i);
            continue;
        }
        ++certified;
        if (fc.all_equal)
            ++constant;
        else
            bad += fmt(" #%zu:varies", i);
    }
    return {certified > 0 && constant == certified,
            fmt("%d/%zu grids certified, %d of them constant in s, %.1f s%s", certified, eqs.size(), constant,
                seconds_since(t0), bad.c_str())};
}

// 8 -------------------------------------------------------------------------
RigidSystem hopf_system(int n, double eps) {
    std::map<int, HomogeneousPoly> R{{n - 1, HomogeneousPoly::radial((n - 1) / 2)},
                                     {n - 3, HomogeneousPoly::radial((n - 3) / 2, -eps)}};
    return RigidSystem(n, 0.0, R);
}

Outcome rigid_theorem() {
    const auto t0 = std::chrono::steady_clock::now();
    Source src(808);
    int hopf_ok = 0, flat_ok = 0, center_ok = 0, systems = 0;
    double worst = 0.0;
    std::string bad;
    for (int n : {3, 5, 7}) {
        for (double eps : {1e-3, 1e-2, 1e-1}) {
            const auto rs = hopf_system(n, eps);
            const auto rep = theorem41_report(rs);
            ++systems;
            if (std::holds_alternative<Fails>(center_necessary_check(rs))) ++center_ok;
            bool ok = rep.cycles.size() == 1;
            if (ok) {
                worst = std::max(worst, std::abs(rep.cycles[0].r0 - std::sqrt(eps)));
                ok = std::abs(rep.cycles[0].r0 - std::sqrt(eps)) < 1e-8 && rep.cycles[0].multiplier > 1.0;
            }
            if (ok)
                ++hopf_ok;
            else
                bad += fmt(" hopf n=%d eps=%g cycles=%zu", n, eps, rep.cycles.size());
        }
        // B = 0: odd-degree R_{n-2} only
        std::vector<double> coefs(std::size_t(n - 1));
        for (auto& x : coefs) x = src.uniform(-0.5, 0.5);
        const RigidSystem rs(n, 0.0, {{n - 1, HomogeneousPoly::radial((n - 1) / 2)}, {n - 2, HomogeneousPoly(coefs)}});
        const auto rep = theorem41_report(rs);
        ++systems;
        if (std::holds_alternative<Fails>(center_necessary_check(rs))) ++center_ok;
        if (rep.cycles.empty() && rep.no_cycle.holds)
            ++flat_ok;
        else
            bad += fmt(" B=0 n=%d cycles=%zu", n, rep.cycles.size());
    }
    const double dt = seconds_since(t0);
    const bool pass = hopf_ok == 9 && flat_ok == 3 && center_ok == systems && dt < 30.0;
    return {pass, fmt("Hopf %d/9 (worst |r0 - sqrt(eps)| %.1e), B=0 without cycles %d/3, not a center %d/%d, %.1f s "
                      "(limit 30 s)%s",
                      hopf_ok, worst, flat_ok, center_ok, systems, dt, bad.c_str())};
}

// 9 -------------------------------------------------------------------------
Outcome polar_cartesian() {
    Source src(909);
    int good = 0;
    double worst_dev = 0.0, worst_drift = 0.0;
    for (int i = 0; i < 20; ++i) {
        const int n = 3 + 2 * (i % 3);
        std::map<int, HomogeneousPoly> R;
        for (int d = 1; d <= n - 1; ++d) {
            std::vector<double> c(std::size_t(d + 1));
            for (auto& x : c) x = src.uniform(-0.5, 0.5);
            R.emplace(d, HomogeneousPoly(c));
        }
        const RigidSystem rs(n, src.uniform(-0.2, 0.2), R);
        const PolarEquation eq(rs);
        const double boundary = positive_domain_boundary(eq, eq.escape_radius());
        const double r0 = src.uniform(0.1, 0.6) * std::min(boundary, 1.0);
        const auto cc = cartesian_cross_check(rs, r0);
        worst_dev = std::max(worst_dev, cc.deviation);
        worst_drift = std::max(worst_drift, cc.theta_drift);
        if (cc.deviation < 1e-6 && cc.theta_drift < 1e-8) ++good;
    }
    return {good == 20, fmt("%d/20 systems, worst radius deviation %.1e, worst angle drift %.1e", good, worst_dev,
                            worst_drift)};
}

// 10 ------------------------------------------------------------------------
Outcome sector_geometry() {
    Source src(1010);
    int checks = 0, good = 0;
    std::string bad;
    for (int n : {5, 7, 9}) {
        for (int rep = 0; rep < 3; ++rep) {
            const auto eq = src.abel(n, rep == 0 ? 0.5 : 2.0);
            const auto g = arm_geometry(eq);
            for (int k = 1; k <= n - 3; k += 2) {
                ++checks;
                const auto r = sector_sign_check(eq, k, g.rho);
                const auto sc = sector_containment(g, k);
                if (std::holds_alternative<Verified>(r) && sc.upper && sc.lower)
                    ++good;
                else
                    bad += fmt(" n=%d k=%d", n, k);
            }
        }
    }
    return {good == checks, fmt("%d/%d (n, k) sector checks verified with both containments%s", good, checks, bad.c_str())};
}

// 11 ------------------------------------------------------------------------
Outcome ilyashenko() {
    const auto b = ilyashenko_log_bound(1.5, 3);
    bool ok = b.X == 324.0 && b.log_log_bound > 325.8 && b.log_log_bound < 326.0;
    const double Cs[] = {1.1, 1.5, 2.0, 3.0, 5.0};
    const int ns[] = {1, 2, 3, 4, 5};
    bool monotone = true;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            const double v = ilyashenko_log_bound(Cs[i], ns[j]).log_log_bound;
            if (i + 1 < 5) monotone = monotone && ilyashenko_log_bound(Cs[i + 1], ns[j]).log_log_bound > v;
            if (j + 1 < 5) monotone = monotone && ilyashenko_log_bound(Cs[i], ns[j + 1]).log_log_bound > v;
        }
    return {ok && monotone, fmt("X = %.17g, log-log bound = %.6f, monotone on 5x5 grid: %s", b.X, b.log_log_bound,
                                monotone ? "yes" : "no")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"global count equals n", global_count},
        {"origin multiplicity: closed form, series, local winding", origin_multiplicity},
        {"nonzero real periodic solutions by sign case", sign_cases},
        {"constant coefficients against polynomial roots", autonomous_oracle},
        {"flow of z' = z^n against the closed form", closed_form_flow},
        {"q' against central differences", derivative_check},
        {"count constant along the s-family", homotopy_invariance},
        {"rigid systems: Hopf cycle, no cycle for B = 0, not a center", rigid_theorem},
        {"polar and Cartesian integration agree", polar_cartesian},
        {"sector sign checks and containment", sector_geometry},
        {"Ilyashenko bound", ilyashenko},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - std::size_t(failed), criteria.size());
    return failed == 0 ? 0 : 1;
}
