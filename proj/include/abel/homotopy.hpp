#pragma once

// Counting along the family z' = z^n + s alpha z^(n-1) + s beta z^(n-2),
// the sign cases for nonzero real periodic solutions, bifurcation out of
// the origin, and Ilyashenko's explicit bound in log-log form.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abel/displacement.hpp"
#include "abel/errors.hpp"
#include "abel/multiplicity.hpp"
#include "abel/parallel.hpp"

namespace abel {

struct FamilyCount {
    std::vector<double> s_grid;
    std::vector<std::optional<int>> counts;  // empty entry: no certified count at that s
    std::vector<std::string> notes;
    double contour_radius = 0.0;             // 0: counted on local discs
    bool certified = false;                  // every entry present
    bool all_equal = false;                  // certified and all counts identical
};

/// Counts at s = 0, 1/(s_steps-1), ..., 1. With radius > 0 each count is the
/// winding on |c| = radius; otherwise the certified global count.
inline FamilyCount count_along_family(const AbelEquation& eq, int s_steps = 11, double radius = 0.0,
                                      const DisplacementOptions& opt = {}) {
    if (s_steps < 2) throw std::invalid_argument("count_along_family: need at least 2 grid points");
    if (std::holds_alternative<CertifiedViolated>(certify_nonpositive(eq.beta())))
        throw HypothesisNotCertified("beta <= 0");
    FamilyCount fc;
    fc.contour_radius = std::max(radius, 0.0);
    for (int i = 0; i < s_steps; ++i) fc.s_grid.push_back(double(i) / (s_steps - 1));

    struct Entry {
        std::optional<int> count;
        std::string note;
    };
    const auto entries = parallel_map<Entry>(fc.s_grid.size(), [&](std::size_t i) -> Entry {
        const auto member = eq.scaled(fc.s_grid[i]);
        try {
            if (radius > 0.0) {
                const auto rep = winding_count(member, cplx{}, radius, opt.initial_samples, opt);
                if (rep.certified) return {rep.winding, ""};
                return {std::nullopt, "winding not certified"};
            }
            const auto g = find_periodic_solutions(member, opt);
            if (g.certified) return {g.total, ""};
            return {std::nullopt, g.notes.empty() ? "global count not certified" : g.notes.front()};
        } catch (const std::exception& e) {
            return {std::nullopt, e.what()};
        }
    });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        fc.counts.push_back(entries[i].count);
        if (!entries[i].note.empty()) fc.notes.push_back("s=" + std::to_string(fc.s_grid[i]) + ": " + entries[i].note);
    }
    fc.certified = std::all_of(fc.counts.begin(), fc.counts.end(), [](const auto& c) { return c.has_value(); });
    fc.all_equal = fc.certified && std::all_of(fc.counts.begin(), fc.counts.end(),
                                               [&](const auto& c) { return *c == *fc.counts.front(); });
    return fc;
}

// ---------------------------------------------------------------------------
// Sign cases

enum class CorollaryCase { TwoNonzero, OneNonzero, NoNonzero };

inline std::string to_string(CorollaryCase c) {
    switch (c) {
    case CorollaryCase::TwoNonzero: return "TwoNonzero";
    case CorollaryCase::OneNonzero: return "OneNonzero";
    case CorollaryCase::NoNonzero: return "NoNonzero";
    }
    return "?";
}

struct CorollaryReport {
    CorollaryCase kind = CorollaryCase::NoNonzero;
    int sign = 0;                 // OneNonzero: +1 positive (A < 0), -1 negative (A > 0)
    double A = 0.0;
    double B = 0.0;
    std::vector<PeriodicOrbit> nonzero_real;
    int positive = 0;
    int negative = 0;
    bool consistent = false;      // real search agrees with the case
};

namespace detail {

inline double search_reach(const AbelEquation& eq) { return std::max(4.0 * averaged_root_bound(eq), 4.0); }

inline std::vector<PeriodicOrbit> nonzero_real_orbits(const AbelEquation& eq, const DisplacementOptions& opt) {
    const double reach = search_reach(eq);
    std::vector<PeriodicOrbit> out;
    for (const auto& o : real_periodic_solutions(eq, -reach, reach, opt))
        if (std::abs(o.c0) > 1e-12 * reach) out.push_back(o);
    return out;
}

}  // namespace detail

/// Case from the exact A, B: two nonzero solutions if B < 0, one real one
/// of sign opposite to A if B = 0 != A, none if A = B = 0; cross-checked
/// against the real search. Case (i) accepts at most one orbit of each sign.
inline CorollaryReport corollary_cases(const AbelEquation& eq, double tau, const DisplacementOptions& opt = {}) {
    if (!is_certified_nonpositive(certify_nonpositive(eq.beta()))) throw HypothesisNotCertified("beta <= 0");
    CorollaryReport r;
    r.A = integral_over_period(eq.alpha());
    r.B = integral_over_period(eq.beta());
    if (r.B < -tau) {
        r.kind = CorollaryCase::TwoNonzero;
    } else if (std::abs(r.A) > tau) {
        r.kind = CorollaryCase::OneNonzero;
        r.sign = r.A < 0.0 ? 1 : -1;
    } else {
        r.kind = CorollaryCase::NoNonzero;
    }
    r.nonzero_real = detail::nonzero_real_orbits(eq, opt);
    for (const auto& o : r.nonzero_real) (o.c0.real() > 0.0 ? r.positive : r.negative) += 1;
    switch (r.kind) {
    case CorollaryCase::TwoNonzero: r.consistent = r.positive <= 1 && r.negative <= 1; break;
    case CorollaryCase::OneNonzero:
        r.consistent = r.positive + r.negative == 1 && (r.sign > 0 ? r.positive == 1 : r.negative == 1);
        break;
    case CorollaryCase::NoNonzero: r.consistent = r.positive + r.negative == 0; break;
    }
    return r;
}

inline CorollaryReport corollary_cases(const AbelEquation& eq, const DisplacementOptions& opt = {}) {
    return corollary_cases(eq, default_tau(eq.omega()), opt);
}

// ---------------------------------------------------------------------------
// Bifurcation out of the origin

class ScheduleViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ScheduleStep {
    double epsA = 0.0;
    double epsB = 0.0;
};

struct BifurcationStep {
    double epsA = 0.0;
    double epsB = 0.0;
    int origin_multiplicity = 0;
    std::vector<double> real_orbits;   // nonzero real c0, ascending
    int emerged = 0;                   // multiplicity sum of located nonzero orbits
    int conjugate_pairs = 0;
    int total = 0;                     // certified global count
    bool certified = false;
    bool consistent = false;           // certified and origin + emerged == n
};

struct BifurcationTrace {
    int n = 0;
    std::vector<BifurcationStep> steps;
};

/// Shifts the means of alpha by epsA and beta by epsB at each step and
/// records what has left the origin.
inline BifurcationTrace bifurcation_trace(const AbelEquation& base, const std::vector<ScheduleStep>& schedule,
                                          const DisplacementOptions& opt = {}) {
    const double tau = default_tau(base.omega());
    const auto cls = classify_origin(base, tau);
    if (std::abs(cls.A) > tau || std::abs(cls.B) > tau)
        throw std::invalid_argument("bifurcation_trace: base equation must have A = B = 0");
    for (const auto& s : schedule)
        if (s.epsB > 0.0) throw ScheduleViolation("bifurcation_trace: epsB must be nonpositive");

    BifurcationTrace tr;
    tr.n = base.n();
    tr.steps = parallel_map<BifurcationStep>(schedule.size(), [&](std::size_t i) {
        const auto& s = schedule[i];
        const AbelEquation eq(base.n(), base.alpha().with_mean(base.alpha().mean() + s.epsA),
                              base.beta().with_mean(base.beta().mean() + s.epsB), base.omega());
        BifurcationStep st;
        st.epsA = s.epsA;
        st.epsB = s.epsB;
        st.origin_multiplicity = classify_origin(eq, tau).multiplicity;
        for (const auto& o : detail::nonzero_real_orbits(eq, opt)) st.real_orbits.push_back(o.c0.real());
        const auto g = find_periodic_solutions(eq, opt);
        st.certified = g.certified;
        st.total = g.total;
        for (const auto& o : g.orbits) {
            if (std::abs(o.c0) == 0.0) continue;
            st.emerged += o.multiplicity;
            if (o.c0.imag() > 0.0) ++st.conjugate_pairs;
        }
        st.consistent = st.certified && st.origin_multiplicity + st.emerged == base.n();
        return st;
    });
    return tr;
}

// ---------------------------------------------------------------------------
// Ilyashenko's bound 8 exp((3C+2) exp(X)), X = (3/2)(2C+3)^n

struct IlyashenkoBound {
    double X = 0.0;          // +inf when it overflows
    double log_X = 0.0;
    double log_log_bound = 0.0;
};

inline IlyashenkoBound ilyashenko_log_bound(double C, int n) {
    if (!(C > 1.0)) throw DomainError("ilyashenko_log_bound: C must exceed 1");
    if (n < 1) throw DomainError("ilyashenko_log_bound: n must be positive");
    IlyashenkoBound b;
    b.X = 1.5 * std::pow(2.0 * C + 3.0, n);
    b.log_X = std::isfinite(b.X) ? std::log(b.X) : std::log(1.5) + n * std::log(2.0 * C + 3.0);
    const double k = 3.0 * C + 2.0;
    b.log_log_bound = b.X + std::log(k) + std::log1p(std::log(8.0) * std::exp(-b.X) / k);
    return b;
}

}  // namespace abel
