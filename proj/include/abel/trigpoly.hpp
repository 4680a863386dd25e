#pragma once

// Real periodic trigonometric polynomials and homogeneous polynomials
// restricted to the unit circle.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

namespace abel {

struct Harmonic {
    int j = 1;
    double cos_coef = 0.0;
    double sin_coef = 0.0;
};

/// p(t) = mean + sum_j (a_j cos(2 pi j t / omega) + b_j sin(2 pi j t / omega))
class TrigPoly {
public:
    TrigPoly() = default;

    explicit TrigPoly(double mean, double omega = 2.0 * std::numbers::pi)
        : TrigPoly(mean, {}, omega) {}

    TrigPoly(double mean, std::vector<Harmonic> harmonics,
             double omega = 2.0 * std::numbers::pi)
        : mean_(mean), omega_(omega), harmonics_(std::move(harmonics)) {
        if (!(omega_ > 0.0) || !std::isfinite(omega_))
            throw std::invalid_argument("TrigPoly: period must be positive");
        for (std::size_t i = 0; i < harmonics_.size(); ++i) {
            if (harmonics_[i].j <= 0)
                throw std::invalid_argument("TrigPoly: harmonic index must be positive");
            if (i > 0 && harmonics_[i].j <= harmonics_[i - 1].j)
                throw std::invalid_argument("TrigPoly: harmonic indices must be strictly increasing");
        }
    }

    double mean() const { return mean_; }
    double omega() const { return omega_; }
    const std::vector<Harmonic>& harmonics() const { return harmonics_; }
    double frequency() const { return 2.0 * std::numbers::pi / omega_; }

    int max_harmonic() const { return harmonics_.empty() ? 0 : harmonics_.back().j; }

    bool is_constant() const {
        return std::all_of(harmonics_.begin(), harmonics_.end(), [](const Harmonic& h) {
            return h.cos_coef == 0.0 && h.sin_coef == 0.0;
        });
    }

    double operator()(double t) const { return eval(t); }

    double eval(double t) const {
        if (harmonics_.empty()) return mean_;
        const double phi = frequency() * t;
        const std::complex<double> base(std::cos(phi), std::sin(phi));
        std::complex<double> rot(1.0, 0.0);
        int at = 0;
        double v = mean_;
        for (const auto& h : harmonics_) {
            // Short rotation chains; re-anchor for large jumps in j.
            if (h.j - at > 8) {
                rot = std::polar(1.0, phi * h.j);
                at = h.j;
            }
            while (at < h.j) {
                rot *= base;
                ++at;
            }
            v += h.cos_coef * rot.real() + h.sin_coef * rot.imag();
        }
        return v;
    }

    /// d/dt p(t)
    double derivative(double t) const {
        const double k = frequency();
        double v = 0.0;
        for (const auto& h : harmonics_) {
            const double phi = k * h.j * t;
            v += k * h.j * (h.sin_coef * std::cos(phi) - h.cos_coef * std::sin(phi));
        }
        return v;
    }

    /// Exact integral of p over [0, t].
    double antiderivative(double t) const {
        const double k = frequency();
        double v = mean_ * t;
        for (const auto& h : harmonics_) {
            const double w = k * h.j;
            v += h.cos_coef * std::sin(w * t) / w - h.sin_coef * (std::cos(w * t) - 1.0) / w;
        }
        return v;
    }

    /// Sup-norm bounds of p, p' and p'' from coefficient sums.
    double coefficient_l1() const {
        double s = 0.0;
        for (const auto& h : harmonics_) s += std::abs(h.cos_coef) + std::abs(h.sin_coef);
        return s;
    }
    double derivative_bound() const {
        double s = 0.0;
        for (const auto& h : harmonics_) s += h.j * (std::abs(h.cos_coef) + std::abs(h.sin_coef));
        return s * frequency();
    }
    double second_derivative_bound() const {
        double s = 0.0;
        for (const auto& h : harmonics_)
            s += double(h.j) * h.j * (std::abs(h.cos_coef) + std::abs(h.sin_coef));
        return s * frequency() * frequency();
    }

    TrigPoly with_mean(double m) const { return TrigPoly(m, harmonics_, omega_); }

    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator*(double s, const TrigPoly& a);
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);

private:
    double mean_ = 0.0;
    double omega_ = 2.0 * std::numbers::pi;
    std::vector<Harmonic> harmonics_;
};

namespace detail {

// Dense cosine/sine coefficient arrays indexed by harmonic (index 0 is the mean).
struct DenseTrig {
    std::vector<double> c, s;

    explicit DenseTrig(std::size_t size) : c(size, 0.0), s(size, 0.0) {}

    explicit DenseTrig(const TrigPoly& p)
        : c(p.max_harmonic() + 1, 0.0), s(p.max_harmonic() + 1, 0.0) {
        c[0] = p.mean();
        for (const auto& h : p.harmonics()) {
            c[h.j] = h.cos_coef;
            s[h.j] = h.sin_coef;
        }
    }

    TrigPoly to_poly(double omega) const {
        std::vector<Harmonic> hs;
        for (std::size_t j = 1; j < c.size(); ++j)
            if (c[j] != 0.0 || s[j] != 0.0) hs.push_back({int(j), c[j], s[j]});
        return TrigPoly(c.empty() ? 0.0 : c[0], std::move(hs), omega);
    }
};

inline void check_same_period(const TrigPoly& a, const TrigPoly& b) {
    if (std::abs(a.omega() - b.omega()) > 1e-14 * std::max(a.omega(), b.omega()))
        throw std::invalid_argument("TrigPoly: mismatched periods");
}

}  // namespace detail

inline TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    detail::check_same_period(a, b);
    detail::DenseTrig da(a), db(b);
    detail::DenseTrig out(std::max(da.c.size(), db.c.size()));
    for (std::size_t j = 0; j < da.c.size(); ++j) out.c[j] += da.c[j], out.s[j] += da.s[j];
    for (std::size_t j = 0; j < db.c.size(); ++j) out.c[j] += db.c[j], out.s[j] += db.s[j];
    return out.to_poly(a.omega());
}

inline TrigPoly operator*(double k, const TrigPoly& a) {
    std::vector<Harmonic> hs = a.harmonics_;
    for (auto& h : hs) h.cos_coef *= k, h.sin_coef *= k;
    return TrigPoly(k * a.mean_, std::move(hs), a.omega_);
}

// Product-to-sum expansion.
inline TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    detail::check_same_period(a, b);
    detail::DenseTrig da(a), db(b);
    const int na = int(da.c.size()) - 1, nb = int(db.c.size()) - 1;
    detail::DenseTrig out(std::size_t(na + nb + 1));
    auto add_cos = [&](int m, double v) { out.c[std::abs(m)] += v; };
    auto add_sin = [&](int m, double v) {
        if (m > 0) out.s[m] += v;
        else if (m < 0) out.s[-m] -= v;
    };
    for (int j = 0; j <= na; ++j) {
        for (int k = 0; k <= nb; ++k) {
            const double cj = da.c[j], sj = da.s[j], ck = db.c[k], sk = db.s[k];
            if (cj == 0.0 && sj == 0.0) break;
            // cos j cos k, sin j sin k, sin j cos k, cos j sin k
            add_cos(j - k, 0.5 * (cj * ck + sj * sk));
            add_cos(j + k, 0.5 * (cj * ck - sj * sk));
            add_sin(j + k, 0.5 * (sj * ck + cj * sk));
            add_sin(j - k, 0.5 * (sj * ck - cj * sk));
        }
    }
    // Harmonic 0 has no sine component; the add_cos path folds |m| already.
    out.s[0] = 0.0;
    return out.to_poly(a.omega());
}

inline TrigPoly operator-(const TrigPoly& a) { return -1.0 * a; }
inline TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) { return a + (-1.0) * b; }

inline double eval(const TrigPoly& p, double t) { return p.eval(t); }

inline double integral_over_period(const TrigPoly& p) { return p.mean() * p.omega(); }

inline double sup_bound(const TrigPoly& p) { return std::abs(p.mean()) + p.coefficient_l1(); }

// ---------------------------------------------------------------------------
// Sign certification

struct CertifiedNonpositive {};
struct CertifiedViolated {
    double t;
};
struct Undetermined {};

using SignCertificate = std::variant<CertifiedNonpositive, CertifiedViolated, Undetermined>;

namespace detail {

// Upper bound of p on [a, b] from endpoint values, using the Lipschitz
// constant and the second-derivative bound.
inline double interval_upper(double pa, double pb, double h, double lip, double curv) {
    const double by_lip = 0.5 * (pa + pb) + 0.5 * lip * h;
    const double by_curv = std::max(pa, pb) + curv * h * h / 8.0;
    return std::min(by_lip, by_curv);
}

}  // namespace detail

/// Tri-state certificate for p(t) <= 0 on the whole period. Sampling starts
/// at `samples` points and doubles (to 2^16) while undecided.
inline SignCertificate certify_nonpositive(const TrigPoly& p, int samples = 64) {
    if (samples < 8) throw std::invalid_argument("certify_nonpositive: samples must be >= 8");
    if (p.mean() + p.coefficient_l1() <= 0.0) return CertifiedNonpositive{};
    const double lip = p.derivative_bound();
    const double curv = p.second_derivative_bound();
    for (int n = samples; n <= (1 << 16); n *= 2) {
        const double h = p.omega() / n;
        std::vector<double> v(n + 1);
        int arg = 0;
        for (int k = 0; k < n; ++k) {
            v[k] = p.eval(k * h);
            if (v[k] > v[arg]) arg = k;
        }
        v[n] = v[0];
        if (v[arg] > 0.0) return CertifiedViolated{arg * h};
        bool ok = true;
        for (int k = 0; k < n && ok; ++k)
            ok = detail::interval_upper(v[k], v[k + 1], h, lip, curv) <= 0.0;
        if (ok) return CertifiedNonpositive{};
    }
    return Undetermined{};
}

inline bool is_certified_nonpositive(const SignCertificate& c) {
    return std::holds_alternative<CertifiedNonpositive>(c);
}

/// Certified lower bound of p over a period (sampling plus curvature slack).
inline double certified_lower_bound(const TrigPoly& p, int samples = 1024) {
    const double trivial = p.mean() - p.coefficient_l1();
    if (p.harmonics().empty()) return p.mean();
    const double lip = p.derivative_bound();
    const double curv = p.second_derivative_bound();
    const double h = p.omega() / samples;
    double lo = std::numeric_limits<double>::infinity();
    double prev = p.eval(0.0), first = prev;
    for (int k = 1; k <= samples; ++k) {
        const double cur = k == samples ? first : p.eval(k * h);
        lo = std::min(lo, -detail::interval_upper(-prev, -cur, h, lip, curv));
        prev = cur;
    }
    return std::max(lo, trivial);
}

// ---------------------------------------------------------------------------
// Homogeneous polynomials

/// h(x, y) = sum_m coefs[m] x^(degree-m) y^m
class HomogeneousPoly {
public:
    HomogeneousPoly() : coefs_{0.0} {}
    explicit HomogeneousPoly(std::vector<double> coefs) : coefs_(std::move(coefs)) {
        if (coefs_.empty()) throw std::invalid_argument("HomogeneousPoly: empty coefficient list");
    }

    int degree() const { return int(coefs_.size()) - 1; }
    const std::vector<double>& coefs() const { return coefs_; }

    double operator()(double x, double y) const {
        const int d = degree();
        double v = 0.0;
        for (int m = 0; m <= d; ++m) v += coefs_[m] * std::pow(x, d - m) * std::pow(y, m);
        return v;
    }

    /// (x^2 + y^2)^k scaled by s; degree 2k.
    static HomogeneousPoly radial(int k, double s = 1.0) {
        std::vector<double> c(2 * k + 1, 0.0);
        double binom = 1.0;
        for (int i = 0; i <= k; ++i) {
            c[2 * i] = s * binom;
            binom = binom * (k - i) / (i + 1);
        }
        return HomogeneousPoly(std::move(c));
    }

    static HomogeneousPoly zero(int degree) {
        return HomogeneousPoly(std::vector<double>(degree + 1, 0.0));
    }

private:
    std::vector<double> coefs_;
};

/// theta -> h(cos theta, sin theta) as a 2 pi-periodic trigonometric polynomial.
inline TrigPoly restrict_to_circle(const HomogeneousPoly& h) {
    const double two_pi = 2.0 * std::numbers::pi;
    const int d = h.degree();
    const TrigPoly c(0.0, {{1, 1.0, 0.0}}, two_pi);
    const TrigPoly s(0.0, {{1, 0.0, 1.0}}, two_pi);
    // cos_pow[k] = cos^k, sin_pow[k] = sin^k
    std::vector<TrigPoly> cos_pow{TrigPoly(1.0, two_pi)}, sin_pow{TrigPoly(1.0, two_pi)};
    for (int k = 1; k <= d; ++k) {
        cos_pow.push_back(cos_pow.back() * c);
        sin_pow.push_back(sin_pow.back() * s);
    }
    TrigPoly out(0.0, two_pi);
    for (int m = 0; m <= d; ++m) {
        const double a = h.coefs()[m];
        if (a == 0.0) continue;
        out = out + a * (cos_pow[d - m] * sin_pow[m]);
    }
    return out;
}

}  // namespace abel
