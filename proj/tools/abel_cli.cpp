// abel: command-line front end. Reads JSON configs, writes JSON reports or
// CSV tables. Exit codes: 0 ok, 2 bad input, 3 uncertified, 4 numerical failure.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abel/abel.hpp"
#include "abel/io.hpp"

namespace {

using namespace abel;

enum Exit { kOk = 0, kBadInput = 2, kUncertified = 3, kNumerical = 4 };

struct Common {
    std::string input;
    std::string output;
    std::string format = "json";
    std::optional<double> tol;
    std::optional<double> tau;
    std::optional<int> samples;
};

void add_common(CLI::App* sub, Common& c, bool needs_input = true) {
    auto* in = sub->add_option("--input,-i", c.input, "JSON config file");
    if (needs_input) in->required()->check(CLI::ExistingFile);
    sub->add_option("--output,-o", c.output, "output file (default stdout)");
    sub->add_option("--format,-f", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", c.tol, "integration tolerance")->check(CLI::PositiveNumber);
    sub->add_option("--tau", c.tau, "zero tolerance for A and B")->check(CLI::PositiveNumber);
    sub->add_option("--samples", c.samples, "initial contour samples")->check(CLI::Range(8, 1 << 16));
}

json read_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open " + path);
    try {
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

void write_out(const Common& c, const std::string& text) {
    if (c.output.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + c.output);
    f << text;
}

std::string num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

struct Settings {
    DisplacementOptions opt;
    double tau = 0.0;
};

Settings settings(const Common& c, const io::Tolerances& from_config, double omega) {
    Settings s;
    if (auto t = c.tol ? c.tol : from_config.tol) s.opt.flow.tol = *t;
    if (auto n = c.samples ? c.samples : from_config.samples) s.opt.initial_samples = *n;
    s.tau = c.tau ? *c.tau : from_config.tau ? *from_config.tau : default_tau(omega);
    return s;
}

json base_report(const char* command, const Settings& s) {
    return {{"version", kVersion},
            {"command", command},
            {"tolerances", io::to_json(s.opt, s.tau)},
            {"certification", json::array()}};
}

void trail(json& report, const std::string& check, const std::string& status, json detail = json::object()) {
    detail["check"] = check;
    detail["status"] = status;
    report["certification"].push_back(std::move(detail));
}

void sort_orbits(std::vector<PeriodicOrbit>& v) {
    std::sort(v.begin(), v.end(), [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
        return a.c0.real() != b.c0.real() ? a.c0.real() < b.c0.real() : a.c0.imag() < b.c0.imag();
    });
}

std::string orbits_csv(const std::vector<PeriodicOrbit>& v) {
    std::string s = "re,im,multiplicity,is_real,residual,multiplier_re,multiplier_im\n";
    for (const auto& o : v)
        s += num(o.c0.real()) + "," + num(o.c0.imag()) + "," + std::to_string(o.multiplicity) + "," +
             (o.is_real ? "1" : "0") + "," + num(o.residual) + "," + num(o.multiplier.real()) + "," +
             num(o.multiplier.imag()) + "\n";
    return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void sign_trail(json& report, const AbelEquation& eq) {
    const auto cert = certify_nonpositive(eq.beta());
    json d = io::to_json(cert);
    const std::string status = d["status"];
    d.erase("status");
    trail(report, "beta <= 0", status, d);
}

bool beta_ok(const AbelEquation& eq) { return is_certified_nonpositive(certify_nonpositive(eq.beta())); }

// ---------------------------------------------------------------------------

int cmd_analyze(const Common& c, std::optional<double> radius) {
    const auto cfg = io::equation_from_json(read_json(c.input));
    const auto& eq = cfg.eq;
    const auto s = settings(c, cfg.tolerances, eq.omega());
    json rep = base_report("analyze", s);
    rep["equation"] = io::to_json(eq);
    sign_trail(rep, eq);
    const bool hyp = beta_ok(eq);

    const auto origin = classify_origin(eq, s.tau);
    rep["A"] = origin.A;
    rep["B"] = origin.B;
    rep["origin"] = io::to_json(origin);
    if (!origin.closed_form) trail(rep, "origin multiplicity from the closed form", "replaced by series");

    if (hyp) {
        rep["corollary"] = io::to_json(corollary_cases(eq, s.tau, s.opt));
    } else {
        rep["corollary"] = nullptr;
        trail(rep, "sign cases", "skipped", {{"reason", "beta <= 0 not certified"}});
    }

    auto g = find_periodic_solutions(eq, s.opt);
    sort_orbits(g.orbits);
    rep["orbits"] = io::to_json(g.orbits);
    json count = {{"method", "local discs"}, {"total", g.total}, {"certified", g.certified}, {"notes", g.notes}};
    json discs = json::array();
    for (const auto& d : g.contours) discs.push_back(io::to_json(d));
    count["contours"] = discs;
    bool certified = g.certified;
    if (radius) {
        try {
            auto w = winding_count(eq, cplx{}, *radius, s.opt.initial_samples, s.opt);
            for (const auto& o : g.orbits)
                if (std::abs(o.c0) < *radius) w.orbits.push_back(o);
            count["circle"] = io::to_json(w);
            certified = certified && w.certified;
        } catch (const ContourError& e) {
            count["circle"] = {{"contour_radius", *radius}, {"error", e.what()}, {"certified", false}};
            certified = false;
        }
    }
    rep["count"] = count;
    trail(rep, "count", g.certified ? "certified" : "not certified", {{"total", g.total}});
    if (hyp && g.certified && g.total != eq.n())
        trail(rep, "count equals n", "violated", {{"total", g.total}, {"n", eq.n()}});

    write_out(c, c.format == "csv" ? orbits_csv(g.orbits) : dump(rep));
    return hyp && certified ? kOk : kUncertified;
}

int cmd_count(const Common& c, std::optional<double> radius) {
    const auto cfg = io::equation_from_json(read_json(c.input));
    const auto& eq = cfg.eq;
    const auto s = settings(c, cfg.tolerances, eq.omega());
    json rep = base_report("count", s);
    rep["equation"] = io::to_json(eq);
    sign_trail(rep, eq);

    std::vector<CountReport> reports;
    bool certified = false;
    if (radius) {
        reports.push_back(winding_count(eq, cplx{}, *radius, s.opt.initial_samples, s.opt));
        certified = reports.back().certified;
        rep["winding"] = reports.back().winding;
    } else {
        auto g = find_periodic_solutions(eq, s.opt);
        reports = g.contours;
        certified = g.certified;
        rep["winding"] = g.total;
        rep["notes"] = g.notes;
    }
    rep["certified"] = certified;
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(io::to_json(r));
    rep["contours"] = arr;
    trail(rep, "count", certified ? "certified" : "not certified");

    if (c.format == "csv") {
        std::string out = "center_re,center_im,radius,winding,certified\n";
        for (const auto& r : reports)
            out += num(r.contour_center.real()) + "," + num(r.contour_center.imag()) + "," + num(r.contour_radius) +
                   "," + std::to_string(r.winding) + "," + (r.certified ? "1" : "0") + "\n";
        write_out(c, out);
    } else {
        write_out(c, dump(rep));
    }
    return certified ? kOk : kUncertified;
}

int cmd_real(const Common& c, std::optional<double> lo, std::optional<double> hi) {
    const auto cfg = io::equation_from_json(read_json(c.input));
    const auto& eq = cfg.eq;
    const auto s = settings(c, cfg.tolerances, eq.omega());
    const double reach = abel::detail::search_reach(eq);
    const double a = lo ? *lo : -reach, b = hi ? *hi : reach;
    if (!(a < b)) throw ConfigError("real: need --min < --max");
    auto orbits = real_periodic_solutions(eq, a, b, s.opt);
    sort_orbits(orbits);
    json rep = base_report("real", s);
    rep["equation"] = io::to_json(eq);
    rep["interval"] = {a, b};
    rep["orbits"] = io::to_json(orbits);
    trail(rep, "real search", "sign changes only", {{"note", "even-multiplicity zeros away from grid points are not reported"}});
    write_out(c, c.format == "csv" ? orbits_csv(orbits) : dump(rep));
    return kOk;
}

int cmd_homotopy(const Common& c, int steps, std::optional<double> radius) {
    const auto cfg = io::equation_from_json(read_json(c.input));
    const auto& eq = cfg.eq;
    const auto s = settings(c, cfg.tolerances, eq.omega());
    json rep = base_report("homotopy", s);
    rep["equation"] = io::to_json(eq);
    sign_trail(rep, eq);
    const auto fc = count_along_family(eq, steps, radius.value_or(0.0), s.opt);
    rep["family"] = io::to_json(fc);
    trail(rep, "every grid point counted", fc.certified ? "certified" : "not certified");
    if (c.format == "csv") {
        std::string out = "s,count,certified\n";
        for (std::size_t i = 0; i < fc.s_grid.size(); ++i)
            out += num(fc.s_grid[i]) + "," + (fc.counts[i] ? std::to_string(*fc.counts[i]) : "") + "," +
                   (fc.counts[i] ? "1" : "0") + "\n";
        write_out(c, out);
    } else {
        write_out(c, dump(rep));
    }
    return fc.certified ? kOk : kUncertified;
}

int cmd_bifurcate(const Common& c, const std::string& schedule_path) {
    const auto cfg = io::equation_from_json(read_json(c.input));
    const auto& eq = cfg.eq;
    const auto s = settings(c, cfg.tolerances, eq.omega());
    const auto schedule = io::schedule_from_json(read_json(schedule_path));
    json rep = base_report("bifurcate", s);
    rep["equation"] = io::to_json(eq);
    sign_trail(rep, eq);
    BifurcationTrace tr;
    try {
        tr = bifurcation_trace(eq, schedule, s.opt);
    } catch (const ScheduleViolation& e) {
        throw ConfigError(e.what());
    }
    json steps = json::array();
    bool certified = true;
    for (const auto& st : tr.steps) {
        steps.push_back(io::to_json(st));
        certified = certified && st.certified;
    }
    rep["n"] = tr.n;
    rep["steps"] = steps;
    trail(rep, "every step counted", certified ? "certified" : "not certified");
    if (c.format == "csv") {
        std::string out = "step,epsA,epsB,origin_multiplicity,real_orbits,emerged,conjugate_pairs,total,certified,consistent\n";
        for (std::size_t i = 0; i < tr.steps.size(); ++i) {
            const auto& st = tr.steps[i];
            std::string orbits;
            for (std::size_t k = 0; k < st.real_orbits.size(); ++k) orbits += (k ? ";" : "") + num(st.real_orbits[k]);
            out += std::to_string(i) + "," + num(st.epsA) + "," + num(st.epsB) + "," +
                   std::to_string(st.origin_multiplicity) + "," + orbits + "," + std::to_string(st.emerged) + "," +
                   std::to_string(st.conjugate_pairs) + "," + std::to_string(st.total) + "," +
                   (st.certified ? "1" : "0") + "," + (st.consistent ? "1" : "0") + "\n";
        }
        write_out(c, out);
    } else {
        write_out(c, dump(rep));
    }
    return certified ? kOk : kUncertified;
}

cplx parse_point(const std::string& text) {
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        const double re = std::stod(text.substr(0, comma), &used);
        if (used != text.substr(0, comma).size()) throw std::invalid_argument("");
        double im = 0.0;
        if (comma != std::string::npos) {
            const auto rest = text.substr(comma + 1);
            im = std::stod(rest, &used);
            if (used != rest.size()) throw std::invalid_argument("");
        }
        return {re, im};
    } catch (const std::exception&) {
        throw ConfigError("--c: expected re,im");
    }
}

json escape_json(const EscapeResult& r) {
    if (const auto* e = std::get_if<Escapes>(&r))
        return {{"status", "Escapes"}, {"arm", e->k}, {"t_escape", e->t_escape}, {"parity_ok", e->parity_ok}};
    return {{"status", "Bounded"}};
}

int cmd_portrait(const Common& c, const std::string& point, double periods, int per_period) {
    const auto cfg = io::equation_from_json(read_json(c.input));
    const auto& eq = cfg.eq;
    const auto s = settings(c, cfg.tolerances, eq.omega());
    const cplx z0 = parse_point(point);
    if (!(periods > 0.0) || per_period < 1) throw ConfigError("portrait: need --periods > 0 and --per-period >= 1");
    const auto g = arm_geometry(eq);
    const auto samples = sample_trajectory(eq, z0, periods, per_period, g, s.opt.flow);

    if (c.format == "csv") {
        std::string out = "t,re,im,region\n";
        for (const auto& p : samples)
            out += num(p.t) + "," + num(p.z.real()) + "," + num(p.z.imag()) + "," + to_string(p.region) + "\n";
        write_out(c, out);
        return kOk;
    }
    json rep = base_report("portrait", s);
    rep["equation"] = io::to_json(eq);
    rep["geometry"] = {{"n", g.n}, {"a", g.a}, {"rho", g.rho}, {"norm_P", g.norm_P}};
    rep["c"] = io::to_json(z0);
    json arr = json::array();
    for (const auto& p : samples) arr.push_back({{"t", p.t}, {"z", io::to_json(p.z)}, {"region", to_string(p.region)}});
    rep["samples"] = arr;
    int code = kOk;
    for (auto dir : {Direction::Forward, Direction::Backward}) {
        const char* key = dir == Direction::Forward ? "escape_forward" : "escape_backward";
        try {
            rep[key] = escape_json(escape_arm(eq, z0, g, dir, s.opt.flow));
        } catch (const AmbiguousEscape& e) {
            rep[key] = {{"status", "AmbiguousEscape"}, {"z", io::to_json(e.z())}, {"region", to_string(e.region())}};
            trail(rep, key, "blow-up point in a gap");
            code = kUncertified;
        }
    }
    write_out(c, dump(rep));
    return code;
}

struct Sweep {
    double a = 0.0, b = 0.0;
    long k = 0;
};

Sweep parse_sweep(const std::string& text) {
    const std::string prefix = "eps=";
    if (text.rfind(prefix, 0) != 0) throw ConfigError("--sweep: expected eps=a:b:k");
    std::vector<std::string> parts;
    std::stringstream ss(text.substr(prefix.size()));
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw ConfigError("--sweep: expected eps=a:b:k");
    Sweep sw;
    try {
        std::size_t u1 = 0, u2 = 0, u3 = 0;
        sw.a = std::stod(parts[0], &u1);
        sw.b = std::stod(parts[1], &u2);
        sw.k = std::stol(parts[2], &u3);
        if (u1 != parts[0].size() || u2 != parts[1].size() || u3 != parts[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ConfigError("--sweep: expected eps=a:b:k");
    }
    if (sw.k < 0 || sw.k > 10000) throw ConfigError("--sweep: point count must be in 0..10000");
    if (!std::isfinite(sw.a) || !std::isfinite(sw.b)) throw ConfigError("--sweep: bounds must be finite");
    return sw;
}

/// One row per eps with R_{n-3} scaled by eps.
int rigid_sweep(const Common& c, const RigidSystem& base, const Sweep& sw, const Settings& s) {
    const int low = base.n - 3;
    if (!base.R.count(low)) throw ConfigError("--sweep: the system has no R_" + std::to_string(low));
    struct Row {
        double eps = 0.0, B = 0.0;
        std::vector<LimitCycle> cycles;
        std::string error;
    };
    const auto rows = parallel_map<Row>(std::size_t(sw.k), [&](std::size_t i) {
        Row r;
        r.eps = sw.k == 1 ? sw.a : sw.a + (sw.b - sw.a) * double(i) / double(sw.k - 1);
        try {
            RigidSystem rs = base;
            auto coefs = rs.R.at(low).coefs();
            for (auto& x : coefs) x *= r.eps;
            rs.R[low] = HomogeneousPoly(coefs);
            r.B = liapunov_B(rs);
            r.cycles = find_limit_cycles(rs, 0.0, s.opt);
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        return r;
    });
    if (c.format == "json") {
        json rep = base_report("rigid", s);
        json arr = json::array();
        for (const auto& r : rows) {
            json cycles = json::array();
            for (const auto& cy : r.cycles) cycles.push_back(io::to_json(cy));
            arr.push_back({{"eps", r.eps}, {"B", r.B}, {"cycles", cycles}, {"error", r.error}});
        }
        rep["sweep"] = arr;
        write_out(c, dump(rep));
        return kOk;
    }
    std::string out = "eps,B,cycles,r0,multiplier,stable,error\n";
    for (const auto& r : rows) {
        std::string err = r.error;
        std::replace(err.begin(), err.end(), ',', ';');
        std::replace(err.begin(), err.end(), '\n', ' ');
        out += num(r.eps) + "," + num(r.B) + "," + std::to_string(r.cycles.size()) + ",";
        if (!r.cycles.empty())
            out += num(r.cycles[0].r0) + "," + num(r.cycles[0].multiplier) + "," + (r.cycles[0].stable ? "1" : "0");
        else
            out += ",,";
        out += "," + err + "\n";
    }
    write_out(c, out);
    return kOk;
}

int cmd_rigid(const Common& c, const std::string& sweep) {
    const auto cfg = io::rigid_from_json(read_json(c.input));
    const auto& rs = cfg.system;
    const auto s = settings(c, cfg.tolerances, 2.0 * std::numbers::pi);
    if (!sweep.empty()) return rigid_sweep(c, rs, parse_sweep(sweep), s);

    json rep = base_report("rigid", s);
    const auto red = polar_reduce(rs);
    rep["n"] = rs.n;
    rep["lambda"] = rs.lambda;
    rep["polar_degree"] = red.polar.degree();
    rep["abel_form"] = red.abel.has_value();
    rep["B"] = liapunov_B(rs);
    rep["center_check"] = io::to_json(center_necessary_check(rs));
    auto cycles = find_limit_cycles(rs, 0.0, s.opt);
    json arr = json::array();
    for (const auto& cy : cycles) {
        json j = io::to_json(cy);
        const auto cc = cartesian_cross_check(rs, cy.r0);
        j["cartesian"] = io::to_json(cc);
        if (rs.n % 2 == 1) {
            const auto pc = pair_symmetry_check(rs, cy, 64, 1e-7, s.opt.flow);
            if (const auto* ok = std::get_if<Confirmed>(&pc))
                j["pair_symmetry"] = {{"status", "Confirmed"}, {"max_deviation", ok->max_deviation}};
            else
                j["pair_symmetry"] = {{"status", "Deviation"}, {"d", std::get<Deviation>(pc).d}};
        }
        arr.push_back(j);
    }
    rep["cycles"] = arr;
    int code = kOk;
    try {
        const auto tr = theorem41_report(rs, 1e-12, s.opt);
        rep["theorem"] = io::to_json(tr);
        trail(rep, "theorem hypotheses", "certified");
        if (!(tr.not_a_center.holds && tr.at_most_one.holds && tr.no_cycle.holds))
            trail(rep, "theorem clauses", "violated");
    } catch (const HypothesisNotCertified& e) {
        rep["theorem"] = nullptr;
        trail(rep, "theorem hypotheses", "not certified", {{"hypothesis", e.hypothesis()}});
        code = kUncertified;
    }
    if (c.format == "csv") {
        std::string out = "r0,multiplier,stable\n";
        for (const auto& cy : cycles)
            out += num(cy.r0) + "," + num(cy.multiplier) + "," + (cy.stable ? "1" : "0") + "\n";
        write_out(c, out);
    } else {
        write_out(c, dump(rep));
    }
    return code;
}

int cmd_bound(const Common& c, double C, int n) {
    IlyashenkoBound b;
    try {
        b = ilyashenko_log_bound(C, n);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    if (c.format == "csv") {
        write_out(c, "C,n,X,log_X,log_log_bound\n" + num(C) + "," + std::to_string(n) + "," + num(b.X) + "," +
                         num(b.log_X) + "," + num(b.log_log_bound) + "\n");
        return kOk;
    }
    json rep = {{"version", kVersion}, {"command", "bound"}, {"C", C}, {"n", n}, {"bound", io::to_json(b)}};
    write_out(c, dump(rep));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Periodic solutions of z' = z^n + alpha(t) z^(n-1) + beta(t) z^(n-2)"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    Common common;
    std::optional<double> radius, lo, hi;
    int steps = 11;
    std::string schedule, point, sweep;
    double periods = 1.0;
    int per_period = 64;
    double bound_C = 0.0;
    int bound_n = 0;

    auto* analyze = app.add_subcommand("analyze", "full report for an Abel equation");
    add_common(analyze, common);
    analyze->add_option("--radius", radius, "also count on the circle |c| = r")->check(CLI::PositiveNumber);

    auto* count = app.add_subcommand("count", "certified count of periodic solutions");
    add_common(count, common);
    count->add_option("--radius", radius, "count on the circle |c| = r instead")->check(CLI::PositiveNumber);

    auto* real = app.add_subcommand("real", "real periodic solutions in an interval");
    add_common(real, common);
    real->add_option("--min", lo, "left end");
    real->add_option("--max", hi, "right end");

    auto* homotopy = app.add_subcommand("homotopy", "counts along z' = z^n + s alpha z^(n-1) + s beta z^(n-2)");
    add_common(homotopy, common);
    homotopy->add_option("--steps", steps, "grid points in s")->check(CLI::Range(2, 10000));
    homotopy->add_option("--radius", radius, "count on a fixed circle")->check(CLI::PositiveNumber);

    auto* bifurcate = app.add_subcommand("bifurcate", "orbits leaving the origin under mean shifts");
    add_common(bifurcate, common);
    bifurcate->add_option("--schedule", schedule, "JSON list of {epsA, epsB}")->required()->check(CLI::ExistingFile);

    auto* portrait = app.add_subcommand("portrait", "trajectory samples with arm and gap labels");
    add_common(portrait, common);
    portrait->add_option("--c", point, "initial value re,im")->required();
    portrait->add_option("--periods", periods, "number of periods");
    portrait->add_option("--per-period", per_period, "samples per period");

    auto* rigid = app.add_subcommand("rigid", "limit cycles of a rigid planar system");
    add_common(rigid, common);
    rigid->add_option("--sweep", sweep, "eps=a:b:k, scales R_{n-3} by eps");

    auto* bound = app.add_subcommand("bound", "Ilyashenko's bound in log-log form");
    add_common(bound, common, false);
    bound->add_option("--C", bound_C, "constant C > 1")->required();
    bound->add_option("--n", bound_n, "degree n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (*analyze) return cmd_analyze(common, radius);
        if (*count) return cmd_count(common, radius);
        if (*real) return cmd_real(common, lo, hi);
        if (*homotopy) return cmd_homotopy(common, steps, radius);
        if (*bifurcate) return cmd_bifurcate(common, schedule);
        if (*portrait) return cmd_portrait(common, point, periods, per_period);
        if (*rigid) return cmd_rigid(common, sweep);
        if (*bound) return cmd_bound(common, bound_C, bound_n);
    } catch (const HypothesisNotCertified& e) {
        std::cerr << "abel: " << e.what() << "\n";
        return kUncertified;
    } catch (const NumericalFailure& e) {
        std::cerr << "abel: numerical failure: " << e.what() << "\n";
        return kNumerical;
    } catch (const ContourError& e) {
        std::cerr << "abel: " << e.what() << "\n";
        return kNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "abel: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "abel: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "abel: " << e.what() << "\n";
        return kNumerical;
    }
    return kBadInput;
}
