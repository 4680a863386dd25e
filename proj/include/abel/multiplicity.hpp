#pragma once

// Multiplicity of the origin as a periodic solution: closed form for the
// Abel equation, and the power-series recursion z(t, c) = sum_k a_k(t) c^k
// for general equations with P_n = 0.

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abel/flow.hpp"
#include "abel/ode.hpp"

namespace abel {

enum class OriginCase { BNonzero, BZeroANonzero, BothZero };

inline std::string to_string(OriginCase c) {
    switch (c) {
    case OriginCase::BNonzero: return "BNonzero";
    case OriginCase::BZeroANonzero: return "BZeroANonzero";
    case OriginCase::BothZero: return "BothZero";
    }
    return "?";
}

struct OriginClassification {
    double A = 0.0;
    double B = 0.0;
    int multiplicity = 0;
    OriginCase case_label = OriginCase::BothZero;
    // False for n = 3 with B = 0 and beta not identically zero: there beta
    // multiplies z itself, a_1 is not constant, and the multiplicity is
    // taken from the series instead.
    bool closed_form = true;
};

class PnNotZero : public std::invalid_argument {
public:
    PnNotZero() : std::invalid_argument("series expansion needs P_n identically zero") {}
};

inline double default_tau(double omega) { return 1e-9 * std::max(1.0, omega); }


struct SeriesCoefficients {
    int K = 0;
    std::vector<double> t;                 // sample times, t.front() = 0, t.back() = omega
    std::vector<std::vector<double>> a;    // a[k-1][i] = a_k(t[i])
    std::vector<double> at_period;         // a_k(omega), k = 1..K
};

namespace detail {

/// Coefficients c^1..c^K of (sum a_i c^i)^m for m = 1..n, built by repeated
/// truncated Cauchy products; rhs[k] = sum_m coef_m [c^k] power_m.
inline void series_rhs(const double* coef, int n, const std::vector<double>& a, std::vector<double>& rhs,
                       std::vector<double>& pow, std::vector<double>& next) {
    const std::size_t K = a.size();
    pow = a;
    for (std::size_t k = 0; k < K; ++k) rhs[k] = coef[1] * pow[k];
    for (int m = 2; m <= n; ++m) {
        // next = pow * a; index k stands for c^(k+1)
        for (std::size_t k = 0; k < K; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i + 1 <= k; ++i) s += pow[i] * a[k - 1 - i];
            next[k] = s;
        }
        std::swap(pow, next);
        if (coef[m] != 0.0)
            for (std::size_t k = 0; k < K; ++k) rhs[k] += coef[m] * pow[k];
    }
}

}  // namespace detail

/// Integrates the linear recursion for a_1..a_K jointly over [0, omega].
inline SeriesCoefficients series_coefficients(const GeneralEquation& eq, int K, double tol = 1e-12,
                                              int samples = 64) {
    if (!eq.constant_term_vanishes()) throw PnNotZero();
    const int n = eq.n();
    if (K < 1 || K > 2 * n) throw std::invalid_argument("series_coefficients: need 1 <= K <= 2n");
    if (!(tol > 0.0)) throw std::invalid_argument("series_coefficients: tol must be positive");
    if (samples < 1) throw std::invalid_argument("series_coefficients: samples must be positive");

    std::vector<double> coef(static_cast<std::size_t>(n + 1));
    std::vector<double> pow(static_cast<std::size_t>(K)), next(static_cast<std::size_t>(K));
    auto rhs = [&](double t, const std::vector<double>& y, std::vector<double>& dy) {
        eq.coefficients(t, coef.data());
        detail::series_rhs(coef.data(), n, y, dy, pow, next);
    };
    ode::Options o;
    o.rtol = tol;
    o.atol = tol * 1e-3;

    SeriesCoefficients out;
    out.K = K;
    out.a.assign(std::size_t(K), {});
    std::vector<double> y(std::size_t(K), 0.0);
    y[0] = 1.0;
    const double omega = eq.omega();
    auto record = [&](double t) {
        out.t.push_back(t);
        for (int k = 0; k < K; ++k) out.a[std::size_t(k)].push_back(y[std::size_t(k)]);
    };
    record(0.0);
    for (int i = 0; i < samples; ++i) {
        const double t0 = omega * i / samples, t1 = omega * (i + 1) / samples;
        auto res = ode::integrate(rhs, t0, t1, y, o);
        if (res.status != ode::Status::Completed) throw NumericalFailure("series_coefficients: integration failed");
        y = res.y;
        record(t1);
    }
    out.at_period = y;
    return out;
}

/// Order of the origin as a zero of q from the series at t = omega:
/// 1 when a_1(omega) != 1, otherwise the first K >= 2 with |a_K(omega)| > tau.
/// Empty when nothing exceeds tau up to K = 2n.
inline std::optional<int> multiplicity_origin_general(const GeneralEquation& eq, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("multiplicity_origin_general: tau must be positive");
    const auto s = series_coefficients(eq, 2 * eq.n());
    if (std::abs(s.at_period[0] - 1.0) > tau) return 1;
    for (int k = 2; k <= s.K; ++k)
        if (std::abs(s.at_period[std::size_t(k - 1)]) > tau) return k;
    return std::nullopt;
}

inline std::optional<int> multiplicity_origin_general(const GeneralEquation& eq) {
    return multiplicity_origin_general(eq, default_tau(eq.omega()));
}

/// A = int alpha, B = int beta; multiplicity n-2 if B != 0, n-1 if only A != 0,
/// n otherwise.
inline OriginClassification classify_origin(const AbelEquation& eq, double tau) {
    if (!(tau > 0.0)) throw std::invalid_argument("classify_origin: tau must be positive");
    OriginClassification c;
    c.A = integral_over_period(eq.alpha());
    c.B = integral_over_period(eq.beta());
    if (std::abs(c.B) > tau) {
        c.case_label = OriginCase::BNonzero;
        c.multiplicity = eq.n() - 2;
    } else if (std::abs(c.A) > tau) {
        c.case_label = OriginCase::BZeroANonzero;
        c.multiplicity = eq.n() - 1;
    } else {
        c.case_label = OriginCase::BothZero;
        c.multiplicity = eq.n();
    }
    const bool beta_zero = eq.beta().is_constant() && eq.beta().mean() == 0.0;
    if (eq.n() == 3 && c.case_label != OriginCase::BNonzero && !beta_zero) {
        c.closed_form = false;
        if (auto m = multiplicity_origin_general(eq.general(), tau)) c.multiplicity = *m;
    }
    return c;
}

inline OriginClassification classify_origin(const AbelEquation& eq) {
    return classify_origin(eq, default_tau(eq.omega()));
}

}  // namespace abel
