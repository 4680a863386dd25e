#pragma once

// JSON reading and writing. Inputs are parsed strictly: unknown keys and
// wrong types are errors. Complex numbers are written as {"re": x, "im": y}.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "abel/displacement.hpp"
#include "abel/homotopy.hpp"
#include "abel/multiplicity.hpp"
#include "abel/portrait.hpp"
#include "abel/rigid.hpp"

#ifndef ABEL_VERSION
#define ABEL_VERSION "1.0.0"
#endif

namespace abel {

inline constexpr const char* kVersion = ABEL_VERSION;

using json = nlohmann::json;

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace io {

namespace detail {

inline void require_object(const json& j, const std::string& what) {
    if (!j.is_object()) throw ConfigError(what + ": expected an object");
}

inline void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
    require_object(j, what);
    for (const auto& [key, _] : j.items())
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw ConfigError(what + ": unknown field \"" + key + "\"");
}

inline double number(const json& j, const std::string& what) {
    if (!j.is_number()) throw ConfigError(what + ": expected a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(what + ": must be finite");
    return v;
}

inline int integer(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ConfigError(what + ": expected an integer");
    return j.get<int>();
}

inline double number_or(const json& j, const char* key, double fallback, const std::string& what) {
    return j.contains(key) ? number(j.at(key), what + "." + key) : fallback;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Output

inline json to_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

inline json to_json(const TrigPoly& p) {
    json h = json::array();
    for (const auto& x : p.harmonics()) h.push_back({{"j", x.j}, {"cos", x.cos_coef}, {"sin", x.sin_coef}});
    return {{"mean", p.mean()}, {"harmonics", h}};
}

inline json to_json(const AbelEquation& eq) {
    return {{"n", eq.n()}, {"omega", eq.omega()}, {"alpha", to_json(eq.alpha())}, {"beta", to_json(eq.beta())}};
}

inline json to_json(const PeriodicOrbit& o) {
    return {{"c0", to_json(o.c0)},
            {"multiplicity", o.multiplicity},
            {"is_real", o.is_real},
            {"residual", o.residual},
            {"multiplier", to_json(o.multiplier)},
            {"log_multiplier", to_json(o.log_multiplier)}};
}

inline json to_json(const std::vector<PeriodicOrbit>& v) {
    json a = json::array();
    for (const auto& o : v) a.push_back(to_json(o));
    return a;
}

inline json to_json(const CountReport& r) {
    return {{"contour_center", to_json(r.contour_center)},
            {"contour_radius", r.contour_radius},
            {"winding", r.winding},
            {"orbits", to_json(r.orbits)},
            {"certified", r.certified}};
}

inline json to_json(const OriginClassification& c) {
    return {{"A", c.A},
            {"B", c.B},
            {"multiplicity", c.multiplicity},
            {"case_label", to_string(c.case_label)},
            {"closed_form", c.closed_form}};
}

inline json to_json(const SignCertificate& s) {
    if (std::holds_alternative<CertifiedNonpositive>(s)) return {{"status", "CertifiedNonpositive"}};
    if (const auto* v = std::get_if<CertifiedViolated>(&s)) return {{"status", "CertifiedViolated"}, {"t", v->t}};
    return {{"status", "Undetermined"}};
}

inline json to_json(const FamilyCount& f) {
    json counts = json::array();
    for (const auto& c : f.counts) counts.push_back(c ? json(*c) : json(nullptr));
    return {{"s_grid", f.s_grid},       {"counts", counts},       {"notes", f.notes},
            {"contour_radius", f.contour_radius}, {"certified", f.certified}, {"all_equal", f.all_equal}};
}

inline json to_json(const CorollaryReport& r) {
    return {{"case", to_string(r.kind)},
            {"sign", r.sign},
            {"A", r.A},
            {"B", r.B},
            {"nonzero_real", to_json(r.nonzero_real)},
            {"positive", r.positive},
            {"negative", r.negative},
            {"consistent", r.consistent}};
}

inline json to_json(const BifurcationStep& s) {
    return {{"epsA", s.epsA},
            {"epsB", s.epsB},
            {"origin_multiplicity", s.origin_multiplicity},
            {"real_orbits", s.real_orbits},
            {"emerged", s.emerged},
            {"conjugate_pairs", s.conjugate_pairs},
            {"total", s.total},
            {"certified", s.certified},
            {"consistent", s.consistent}};
}

inline json to_json(const IlyashenkoBound& b) {
    return {{"X", std::isfinite(b.X) ? json(b.X) : json(nullptr)},
            {"log_X", b.log_X},
            {"log_log_bound", b.log_log_bound}};
}

inline json to_json(const LimitCycle& c) {
    return {{"r0", c.r0}, {"multiplier", c.multiplier}, {"stable", c.stable}};
}

inline json to_json(const CenterCheck& c) {
    if (const auto* f = std::get_if<Fails>(&c)) return {{"status", "Fails"}, {"k", f->k}, {"mean_integral", f->mean_integral}};
    return {{"status", "Passes"}};
}

inline json to_json(const Clause& c) { return {{"holds", c.holds}, {"evidence", c.evidence}}; }

inline json to_json(const TheoremReport& r) {
    json cycles = json::array();
    for (const auto& c : r.cycles) cycles.push_back(to_json(c));
    return {{"B", r.B},
            {"center_check", to_json(r.center)},
            {"cycles", cycles},
            {"not_a_center", to_json(r.not_a_center)},
            {"at_most_one_unstable", to_json(r.at_most_one)},
            {"no_cycle_when_B_zero", to_json(r.no_cycle)}};
}

inline json to_json(const CartesianCheck& c) {
    return {{"deviation", c.deviation},
            {"r_cartesian", c.r_cartesian},
            {"r_polar", c.r_polar},
            {"theta_drift", c.theta_drift}};
}

inline json to_json(const DisplacementOptions& o, double tau) {
    return {{"tol", o.flow.tol},
            {"escape_radius", o.flow.escape_radius},
            {"newton_tol", o.newton_tol},
            {"derivative_tol", o.derivative_tol},
            {"dedup_tol", o.dedup_tol},
            {"local_radius", o.local_radius},
            {"samples", o.initial_samples},
            {"max_contour_points", o.max_contour_points},
            {"tau", tau}};
}

// ---------------------------------------------------------------------------
// Input

/// {"mean": m, "harmonics": [{"j": 1, "cos": a, "sin": b}, ...]}; a bare
/// number is a constant.
inline TrigPoly trigpoly_from_json(const json& j, double omega, const std::string& what) {
    if (j.is_number()) return TrigPoly(detail::number(j, what), omega);
    detail::only_keys(j, {"mean", "harmonics"}, what);
    const double mean = detail::number_or(j, "mean", 0.0, what);
    std::vector<Harmonic> hs;
    if (j.contains("harmonics")) {
        const auto& arr = j.at("harmonics");
        if (!arr.is_array()) throw ConfigError(what + ".harmonics: expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            const std::string w = what + ".harmonics[" + std::to_string(i) + "]";
            detail::only_keys(arr[i], {"j", "cos", "sin"}, w);
            if (!arr[i].contains("j")) throw ConfigError(w + ": missing \"j\"");
            hs.push_back({detail::integer(arr[i].at("j"), w + ".j"), detail::number_or(arr[i], "cos", 0.0, w),
                          detail::number_or(arr[i], "sin", 0.0, w)});
        }
    }
    try {
        return TrigPoly(mean, std::move(hs), omega);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(what + ": " + e.what());
    }
}

/// Run-time tolerance overrides: {"tol", "tau", "samples"}.
struct Tolerances {
    std::optional<double> tol;
    std::optional<double> tau;
    std::optional<int> samples;
};

inline Tolerances tolerances_from_json(const json& j) {
    detail::only_keys(j, {"tol", "tau", "samples"}, "tolerances");
    Tolerances t;
    if (j.contains("tol")) t.tol = detail::number(j.at("tol"), "tolerances.tol");
    if (j.contains("tau")) t.tau = detail::number(j.at("tau"), "tolerances.tau");
    if (j.contains("samples")) t.samples = detail::integer(j.at("samples"), "tolerances.samples");
    if (t.tol && !(*t.tol > 0.0)) throw ConfigError("tolerances.tol must be positive");
    if (t.tau && !(*t.tau > 0.0)) throw ConfigError("tolerances.tau must be positive");
    if (t.samples && *t.samples < 8) throw ConfigError("tolerances.samples must be at least 8");
    return t;
}

struct EquationConfig {
    AbelEquation eq;
    Tolerances tolerances;
};

/// {"n": 3, "omega": 6.28..., "alpha": ..., "beta": ..., "tolerances": {...}};
/// omega defaults to 2 pi, alpha and beta to 0.
inline EquationConfig equation_from_json(const json& j) {
    detail::only_keys(j, {"n", "omega", "alpha", "beta", "tolerances"}, "equation");
    if (!j.contains("n")) throw ConfigError("equation: missing \"n\"");
    const int n = detail::integer(j.at("n"), "equation.n");
    const double omega = detail::number_or(j, "omega", 2.0 * std::numbers::pi, "equation");
    if (!(omega > 0.0)) throw ConfigError("equation.omega must be positive");
    const TrigPoly alpha = j.contains("alpha") ? trigpoly_from_json(j.at("alpha"), omega, "equation.alpha")
                                               : TrigPoly(0.0, omega);
    const TrigPoly beta = j.contains("beta") ? trigpoly_from_json(j.at("beta"), omega, "equation.beta")
                                             : TrigPoly(0.0, omega);
    Tolerances t;
    if (j.contains("tolerances")) t = tolerances_from_json(j.at("tolerances"));
    try {
        return {AbelEquation(n, alpha, beta, omega), t};
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

inline HomogeneousPoly homogeneous_from_json(const json& j, const std::string& what) {
    const json* coefs = &j;
    if (j.is_object()) {
        detail::only_keys(j, {"coefs"}, what);
        if (!j.contains("coefs")) throw ConfigError(what + ": missing \"coefs\"");
        coefs = &j.at("coefs");
    }
    if (!coefs->is_array() || coefs->empty()) throw ConfigError(what + ": expected a nonempty coefficient array");
    std::vector<double> c;
    for (std::size_t i = 0; i < coefs->size(); ++i)
        c.push_back(detail::number((*coefs)[i], what + "[" + std::to_string(i) + "]"));
    return HomogeneousPoly(std::move(c));
}

struct RigidConfig {
    RigidSystem system;
    Tolerances tolerances;
};

/// {"n": 5, "lambda": 0, "R": {"4": [c...], "2": {"coefs": [c...]}}}; the
/// coefficients of R_i are those of x^i, x^(i-1) y, ..., y^i.
inline RigidConfig rigid_from_json(const json& j) {
    detail::only_keys(j, {"n", "lambda", "R", "tolerances"}, "system");
    if (!j.contains("n")) throw ConfigError("system: missing \"n\"");
    const int n = detail::integer(j.at("n"), "system.n");
    const double lambda = detail::number_or(j, "lambda", 0.0, "system");
    std::map<int, HomogeneousPoly> R;
    if (j.contains("R")) {
        detail::require_object(j.at("R"), "system.R");
        for (const auto& [key, value] : j.at("R").items()) {
            int deg = 0;
            std::size_t used = 0;
            try {
                deg = std::stoi(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || key.empty()) throw ConfigError("system.R: key \"" + key + "\" is not a degree");
            R.emplace(deg, homogeneous_from_json(value, "system.R." + key));
        }
    }
    Tolerances t;
    if (j.contains("tolerances")) t = tolerances_from_json(j.at("tolerances"));
    try {
        return {RigidSystem(n, lambda, std::move(R)), t};
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

/// [{"epsA": a, "epsB": b}, ...]
inline std::vector<ScheduleStep> schedule_from_json(const json& j) {
    if (!j.is_array()) throw ConfigError("schedule: expected an array");
    std::vector<ScheduleStep> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string w = "schedule[" + std::to_string(i) + "]";
        detail::only_keys(j[i], {"epsA", "epsB"}, w);
        out.push_back({detail::number_or(j[i], "epsA", 0.0, w), detail::number_or(j[i], "epsB", 0.0, w)});
    }
    return out;
}

}  // namespace io
}  // namespace abel
