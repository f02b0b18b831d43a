#include "udw/oracle.hpp"

#include <gsl/gsl_sf_expint.h>

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <vector>

#include "udw/errors.hpp"
#include "udw/mode.hpp"

namespace udw {

namespace {

constexpr double pi = std::numbers::pi;

using Fn = std::function<double(double)>;

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk(const Fn& f, double a, double b) {
    double err = 0;
    double v = boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 0, 0.0, &err);
    if (!std::isfinite(v)) throw QuadratureFailure("non-finite integrand");
    return {a, b, v, err};
}

// Global adaptive Gauss-Kronrod over fixed breakpoints. tol_abs is in raw (unscaled) units.
OracleValue adaptive(const Fn& f, std::vector<double> pts, double tol_abs, double rel_tol, long max_sub) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::priority_queue<Panel> q;
    double sum = 0, err = 0;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        Panel p = gk(f, pts[i], pts[i + 1]);
        sum += p.value;
        err += p.error;
        q.push(p);
    }
    long subdivisions = long(q.size());
    while (err > std::max(tol_abs, rel_tol * std::abs(sum))) {
        if (subdivisions >= max_sub) throw QuadratureFailure("tolerance not met within max_subdivisions");
        Panel w = q.top();
        q.pop();
        double m = 0.5 * (w.a + w.b);
        if (!(m > w.a && m < w.b)) throw QuadratureFailure("panel cannot be split further");
        Panel l = gk(f, w.a, m), r = gk(f, m, w.b);
        sum += l.value + r.value - w.value;
        err += l.error + r.error - w.error;
        q.push(l);
        q.push(r);
        ++subdivisions;
    }
    // recompute the totals to shed accumulated rounding
    sum = 0;
    err = 0;
    while (!q.empty()) {
        sum += q.top().value;
        err += q.top().error;
        q.pop();
    }
    return {sum, err};
}

struct Setup {
    double Omega, gamma, eta, kmax;
};

// breakpoints on [lo, hi]: resonances, the thermal scale, and one per oscillation period
std::vector<double> breakpoints(const Setup& s, double lo, double hi, double a) {
    std::vector<double> pts = {lo, hi};
    auto add = [&](double x) {
        if (x > lo && x < hi) pts.push_back(x);
    };
    add(0);
    for (double sgn : {-1.0, 1.0}) {
        double c = sgn * s.Omega;
        add(c);
        add(c - 0.5 * s.Omega);
        add(c + 0.5 * s.Omega);
        for (double m : {1.0, 4.0, 16.0, 64.0}) {
            add(c - m * s.gamma);
            add(c + m * s.gamma);
        }
        if (a > 0)
            for (double m : {0.25, 1.0, 3.0}) add(sgn * m * a);
    }
    std::sort(pts.begin(), pts.end());
    double h = 2 * pi / s.eta;
    std::vector<double> out;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        double x0 = pts[i], x1 = pts[i + 1];
        int n = std::max(1, int(std::ceil((x1 - x0) / h)));
        for (int k = 0; k < n; ++k) out.push_back(x0 + (x1 - x0) * k / n);
    }
    out.push_back(hi);
    return out;
}

// int_K^inf of the fitted tail. After the log subtraction the integrand behaves like
// (A cos + B sin)(eta k)/k + (E cos + F sin)(eta k)/k^2 + D/k^3.
OracleValue fitted_tail(const Fn& f, double K, double eta, TailModel model) {
    double period = 2 * pi / eta;
    double width = std::min(2 * period, 0.5 * K);
    const int n = 25;
    Eigen::MatrixXd M(n, 5);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        double k = K - width * i / (n - 1);
        double c = std::cos(eta * k), s = std::sin(eta * k);
        M.row(i) << c, s, c / k, s / k, 1 / (k * k);
        y(i) = k * f(k);
    }
    Eigen::VectorXd c = M.colPivHouseholderQr().solve(y);
    double x = K * eta;
    double ci = gsl_sf_Ci(x), si_tail = pi / 2 - gsl_sf_Si(x);
    double cosK = std::cos(x), sinK = std::sin(x);
    double I_c1 = -ci, I_s1 = si_tail;
    double I_c2 = cosK / K - eta * si_tail;
    double I_s2 = sinK / K - eta * ci;
    double tail = c(0) * I_c1 + c(1) * I_s1 + c(2) * I_c2 + c(3) * I_s2 + c(4) / (2 * K * K);
    double resid = (M * c - y).cwiseAbs().maxCoeff();
    if (!std::isfinite(tail)) throw QuadratureFailure("tail fit failed");
    if (model == TailModel::None) return {0, std::abs(tail) + resid * width};
    // next order of the expansion is O(1/K^3) after integration
    return {tail, 0.05 * std::abs(c(4)) / (K * K) + std::abs(c(2)) / (eta * K * K) + resid / K};
}

Setup setup(const DetectorParams& p, double a, double eta, const QuadratureConfig& cfg) {
    if (!(eta > 0) || !std::isfinite(eta)) throw DomainError("eta must be > 0");
    if (!(cfg.abs_tol > 0) || !(cfg.rel_tol > 0)) throw DomainError("tolerances must be positive");
    double kmax = cfg.kappa_max > 0 ? cfg.kappa_max : 400 * std::max({p.Omega, p.gamma, a});
    if (!(kmax > 10 * p.Omega))
        throw QuadratureFailure("kappa_max must exceed 10 Omega for the tail model to apply");
    return {p.Omega, p.gamma, eta, kmax};
}

double reference(double k, double W) { return k / (k * k + W * W); }

cplx kernel(const DetectorParams& p, double k, double eta, bool dot) {
    return dot ? response_kernel_dot(p, k, eta) : response_kernel(p, k, eta);
}

double tail_coefficient(const DetectorParams& p, double eta, bool dot) {
    // |sum_j b_j e^{w_j eta}|^2 + |sum_j b_j|^2, read off the kernel at large kappa
    auto k = oscillator_constants(p);
    cplx s = dot ? k.c_plus * k.w_plus * std::exp(k.w_plus * eta) + k.c_minus * k.w_minus * std::exp(k.w_minus * eta)
                 : k.c_plus * std::exp(k.w_plus * eta) + k.c_minus * std::exp(k.w_minus * eta);
    return std::norm(s) + (dot ? 1.0 : 0.0);
}

// positive-side subtracted integral of g(k) over [lo, kmax] plus the tail beyond
OracleValue positive_side(const Fn& g, const Setup& s, double lo, double a, const QuadratureConfig& cfg,
                          double scale) {
    double tol = cfg.abs_tol / scale;
    OracleValue tail = fitted_tail(g, s.kmax, s.eta, cfg.tail_model);
    OracleValue body = adaptive(g, breakpoints(s, lo, s.kmax, a), 0.5 * tol, cfg.rel_tol, cfg.max_subdivisions);
    return {scale * (body.value + tail.value), scale * (body.error + tail.error)};
}

OracleResult uad_oracle(const DetectorParams& p, double a, double eta, const QuadratureConfig& cfg, bool dot) {
    if (!(a > 0)) throw DomainError("proper acceleration must be > 0");
    Setup s = setup(p, a, eta, cfg);
    double P = oracle_prefactor(p);
    double C = tail_coefficient(p, eta, dot);

    Fn f1 = [&](double k) {
        double v = thermal_factor(k, a) * std::norm(kernel(p, k, eta, dot));
        return k > 0 ? v - C * reference(k, p.Omega) : v;
    };
    // the weight is below e^{-45} past this point
    double lo = -45 / (2 * pi) * a;
    OracleValue v1 = positive_side(f1, s, lo, a, cfg, P);

    // -int_{-inf}^0 k|K(k)|^2 dk = int_0^inf k |K(-k)|^2 dk
    Fn f2 = [&](double k) { return k * std::norm(kernel(p, -k, eta, dot)) - C * reference(k, p.Omega); };
    OracleValue v2 = positive_side(f2, s, 0, 0, cfg, P);

    OracleResult r;
    r.v1 = v1.value;
    r.v1_error = v1.error;
    r.neg_v2 = v2.value;
    r.neg_v2_error = v2.error;
    r.total = r.v1 + r.neg_v2;
    return r;
}

}  // namespace

double thermal_factor(double kappa, double a) {
    if (!(a > 0)) throw DomainError("thermal_factor: a must be > 0");
    if (kappa == 0) return a / (2 * pi);
    double x = 2 * pi * kappa / a;
    if (x < -10) {
        // -kappa e^{x} / (1 - e^{x}) with e^{x} small
        double e = std::exp(x);
        return -kappa * e / (1 - e);
    }
    return kappa / -std::expm1(-x);
}

double oracle_prefactor(const DetectorParams& p) {
    return p.lambda0 * p.lambda0 * p.hbar / (4 * pi * pi * p.m0 * p.m0);
}

OracleResult qq_uad_oracle(const DetectorParams& p, double a, double eta, const QuadratureConfig& cfg) {
    return uad_oracle(p, a, eta, cfg, false);
}

OracleResult pp_uad_oracle(const DetectorParams& p, double a, double eta, const QuadratureConfig& cfg) {
    return uad_oracle(p, a, eta, cfg, true);
}

InertialLines inertial_lines(const DetectorParams& p, double eta, bool dot, const QuadratureConfig& cfg) {
    Setup s = setup(p, 0, eta, cfg);
    double P = oracle_prefactor(p);
    double C = tail_coefficient(p, eta, dot);
    Fn raw = [&](double k) { return k * std::norm(kernel(p, k, eta, dot)); };
    Fn sub = [&](double k) { return raw(k) - C * reference(k, p.Omega); };

    InertialLines r;
    r.positive = positive_side(sub, s, 0, 0, cfg, P);
    // mirror the negative side onto [0, kmax]
    Fn mirrored = [&](double k) { return -sub(-k); };
    OracleValue m = positive_side(mirrored, s, 0, 0, cfg, P);
    r.negative = {-m.value, m.error};

    double tol = cfg.abs_tol / P;
    OracleValue full =
        adaptive(raw, breakpoints(s, -s.kmax, s.kmax, 0), 0.5 * tol, cfg.rel_tol, cfg.max_subdivisions);
    r.full = {P * full.value, P * full.error};
    return r;
}

OracleValue qq_inertial_oracle(const DetectorParams& p, double eta, const QuadratureConfig& cfg) {
    Setup s = setup(p, 0, eta, cfg);
    double P = oracle_prefactor(p);
    double C = tail_coefficient(p, eta, false);
    Fn sub = [&](double k) { return k * std::norm(response_kernel(p, k, eta)) - C * reference(k, p.Omega); };
    return positive_side(sub, s, 0, 0, cfg, P);
}

OracleValue pp_inertial_oracle(const DetectorParams& p, double eta, const QuadratureConfig& cfg) {
    Setup s = setup(p, 0, eta, cfg);
    double P = oracle_prefactor(p);
    double C = tail_coefficient(p, eta, true);
    Fn sub = [&](double k) { return k * std::norm(response_kernel_dot(p, k, eta)) - C * reference(k, p.Omega); };
    return positive_side(sub, s, 0, 0, cfg, P);
}

}  // namespace udw
