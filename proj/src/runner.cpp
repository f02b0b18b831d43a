#include "udw/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "udw/errors.hpp"

namespace udw {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

const char* name(Prefactor p) { return p == Prefactor::MainText ? "maintext" : "appendixd"; }
const char* name(V2Form f) { return f == V2Form::Published ? "published" : "partial-fraction"; }

std::vector<std::pair<std::string, std::string>> metadata(const RunConfig& c, const char* command) {
    DetectorParams p = resolve_params(c);
    std::vector<std::pair<std::string, std::string>> m = {
        {"udw_version", version},
        {"command", command},
        {"traj", c.inertial ? "inertial" : "uad"},
    };
    if (c.inertial)
        m.emplace_back("v", num(c.v));
    else
        m.emplace_back("a", num(c.a));
    m.insert(m.end(), {
                          {"observable", c.observable == Observable::QQ ? "qq" : "pp"},
                          {"omega", num(p.Omega)},
                          {"lambda0", num(p.lambda0)},
                          {"m0", num(p.m0)},
                          {"hbar", num(p.hbar)},
                          {"omega_r", num(p.Omega_r)},
                          {"gamma", num(p.gamma)},
                          {"prefactor", name(c.correlator.prefactor)},
                          {"v2_form", name(c.correlator.v2_form)},
                          {"renorm_offsets", c.correlator.include_renorm_offsets ? "included" : "excluded"},
                      });
    if (c.oracle || c.command == Command::Compare) {
        m.emplace_back("kappa_max", c.quadrature.kappa_max > 0 ? num(c.quadrature.kappa_max) : "auto");
        m.emplace_back("abs_tol", num(c.quadrature.abs_tol));
        m.emplace_back("rel_tol", num(c.quadrature.rel_tol));
        m.emplace_back("compare_abs_tol", num(c.compare_abs_tol));
        m.emplace_back("compare_rel_tol", num(c.compare_rel_tol));
    }
    for (const auto& v : validate_params(p, resolve_trajectory(c)).violations)
        m.emplace_back(v.hard ? "error" : "warning", to_string(v.code) + ": " + v.message);
    return m;
}

void check_hard(const RunConfig& c) {
    auto report = validate_params(resolve_params(c), resolve_trajectory(c));
    for (const auto& v : report.violations)
        if (v.hard) throw DomainError(v.message);
}

bool within(double closed, double oracle, double err, const RunConfig& c) {
    return std::abs(closed - oracle) <= std::max(c.compare_abs_tol, c.compare_rel_tol * std::abs(oracle)) + err;
}

bool row_passes(const Row& r, const RunConfig& c) {
    if (!within(r.total, r.oracle_total, r.oracle_error, c)) return false;
    if (c.inertial) return true;
    return within(r.v1, r.oracle_v1, r.oracle_error, c) && within(r.neg_v2, r.oracle_neg_v2, r.oracle_error, c);
}

SweepTable sweep(const RunConfig& c, const std::vector<double>& grid, const char* command) {
    SweepTable t;
    t.meta = metadata(c, command);
    if (!c.label.empty()) t.meta.emplace_back("curve", c.label);
    if (c.eta) t.meta.emplace_back("eta", num(*c.eta));
    else {
        t.meta.emplace_back("eta_start", num(c.range.start));
        t.meta.emplace_back("eta_stop", num(c.range.stop));
        t.meta.emplace_back("eta_count", std::to_string(c.range.count));
        t.meta.emplace_back("eta_spacing", c.range.spacing == Spacing::Log ? "log" : "linear");
    }

    struct Slot {
        std::optional<Row> row;
        std::optional<PointError> error;
    };
    std::vector<Slot> slots(grid.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < grid.size(); i = next++) {
            try {
                slots[i].row = evaluate_point(c, grid[i]);
            } catch (const QuadratureFailure& e) {
                slots[i].error = PointError{grid[i], 2, e.what()};
            } catch (const Error& e) {
                slots[i].error = PointError{grid[i], 1, e.what()};
            }
        }
    };
    int jobs = std::clamp(c.jobs, 1, int(std::max<size_t>(grid.size(), 1)));
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    for (auto& s : slots) {
        if (s.row) t.rows.push_back(*s.row);
        if (s.error) t.errors.push_back(*s.error);
    }
    std::stable_sort(t.rows.begin(), t.rows.end(), [](const Row& x, const Row& y) { return x.eta < y.eta; });
    return t;
}

std::vector<double> grid_for(const RunConfig& c) {
    if (c.eta) return {*c.eta};
    std::vector<double> g = eta_grid(c.range);
    g.insert(g.end(), c.extra_eta.begin(), c.extra_eta.end());
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

}  // namespace

bool SweepTable::with_oracle() const {
    return std::any_of(rows.begin(), rows.end(), [](const Row& r) { return r.has_oracle; });
}

int SweepTable::exit_code() const {
    int code = 0;
    for (const auto& e : errors) code = std::max(code, e.exit_code);
    if (code == 0 && summary && !summary->pass) code = 3;
    return code;
}

DetectorParams resolve_params(const RunConfig& c) { return params_from_omega(c.lambda0, c.omega, c.m0, c.hbar); }

Trajectory resolve_trajectory(const RunConfig& c) {
    if (c.inertial) return Inertial{c.v, 0, 0};
    return UniformAcceleration{c.a};
}

std::vector<double> eta_grid(const EtaRange& r) {
    if (!(r.start > 0)) throw DomainError("eta range must start above 0");
    if (r.count < 1) throw DomainError("eta count must be >= 1");
    if (r.count == 1) return {r.start};
    if (!(r.stop > r.start)) throw DomainError("eta range stop must exceed start");
    std::vector<double> g(r.count);
    for (int i = 0; i < r.count; ++i) {
        double s = double(i) / (r.count - 1);
        g[i] = r.spacing == Spacing::Log ? r.start * std::pow(r.stop / r.start, s) : r.start + s * (r.stop - r.start);
    }
    g.back() = r.stop;
    return g;
}

Row evaluate_point(const RunConfig& c, double eta) {
    DetectorParams p = resolve_params(c);
    bool dot = c.observable == Observable::PP;
    Row r;
    r.eta = eta;
    if (c.inertial) {
        r.v1 = dot ? pp_inertial(p, eta, c.correlator) : qq_inertial(p, eta, c.correlator);
        r.total = r.v1;
    } else {
        CorrelatorValue v = dot ? pp_uad(p, c.a, eta, c.correlator) : qq_uad(p, c.a, eta, c.correlator);
        r.v1 = v.v1;
        r.neg_v2 = v.neg_v2;
        r.total = v.total;
    }
    if (!c.oracle) return r;

    r.has_oracle = true;
    if (c.inertial) {
        OracleValue o = dot ? pp_inertial_oracle(p, eta, c.quadrature) : qq_inertial_oracle(p, eta, c.quadrature);
        r.oracle_v1 = r.oracle_total = o.value;
        r.oracle_error = o.error;
        r.abs_diff = std::abs(r.total - o.value);
        r.rel_diff = r.abs_diff / std::abs(o.value);
    } else {
        OracleResult o = dot ? pp_uad_oracle(p, c.a, eta, c.quadrature) : qq_uad_oracle(p, c.a, eta, c.quadrature);
        r.oracle_v1 = o.v1;
        r.oracle_neg_v2 = o.neg_v2;
        r.oracle_total = o.total;
        r.oracle_error = o.error();
        // worst of the three pieces, so a compensating error cannot hide in the total
        for (auto [x, y] : {std::pair{r.v1, o.v1}, {r.neg_v2, o.neg_v2}, {r.total, o.total}}) {
            double d = std::abs(x - y);
            r.abs_diff = std::max(r.abs_diff, d);
            r.rel_diff = std::max(r.rel_diff, d / std::abs(y));
        }
    }
    return r;
}

SweepTable run_eval(const RunConfig& c) {
    if (!c.eta) throw DomainError("eval needs --eta");
    check_hard(c);
    SweepTable t;
    t.meta = metadata(c, "eval");
    t.meta.emplace_back("eta", num(*c.eta));
    t.rows.push_back(evaluate_point(c, *c.eta));
    return t;
}

SweepTable run_sweep(const RunConfig& c) {
    check_hard(c);
    return sweep(c, grid_for(c), "sweep");
}

SweepTable run_compare(const RunConfig& c) {
    check_hard(c);
    RunConfig cc = c;
    cc.oracle = true;
    SweepTable t = sweep(cc, grid_for(c), "compare");
    CompareSummary s;
    for (const Row& r : t.rows) {
        s.max_abs_diff = std::max(s.max_abs_diff, r.abs_diff);
        s.max_rel_diff = std::max(s.max_rel_diff, r.rel_diff);
        if (!row_passes(r, cc)) s.pass = false;
    }
    if (!t.errors.empty()) s.pass = false;
    t.summary = s;
    return t;
}

std::vector<SweepTable> run_figure(const RunConfig& c) {
    std::vector<SweepTable> out;
    for (const RunConfig& curve : figure_curves(c.figure, c)) {
        SweepTable t = c.oracle ? run_compare(curve) : run_sweep(curve);
        t.meta.insert(t.meta.begin() + 2, {"figure", c.figure});
        out.push_back(std::move(t));
    }
    return out;
}

ValidationReport run_validate(const RunConfig& c) {
    DetectorParams p;
    try {
        p = resolve_params(c);
    } catch (const OverDamped& e) {
        ValidationReport r;
        r.violations.push_back({ViolationCode::OverDamped, true, e.what(), c.lambda0});
        return r;
    } catch (const NonPositiveInput& e) {
        ValidationReport r;
        r.violations.push_back({ViolationCode::NonPositiveInput, true, e.what(), 0});
        return r;
    }
    return validate_params(p, resolve_trajectory(c));
}

}  // namespace udw
