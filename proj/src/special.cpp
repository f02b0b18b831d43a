#include "udw/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "udw/errors.hpp"

namespace udw {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double pi = std::numbers::pi;

void require_finite(cplx v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw ConvergenceError(std::string(what) + ": non-finite result");
}

void require_finite_input(cplx z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw DomainError(std::string(what) + ": non-finite argument");
}

}  // namespace

cplx gamma0_series(cplx z) {
    if (z == cplx(0)) throw DomainError("gamma0: z = 0");
    // -gamma_E - log z - sum_{k>=1} (-z)^k / (k k!)
    cplx term = 1, sum = 0;
    for (int k = 1; k < 500; ++k) {
        term *= -z / double(k);
        cplx add = term / double(k);
        sum += add;
        if (std::abs(add) <= eps * 0.25 * std::abs(sum)) break;
    }
    return -euler_gamma - std::log(z) - sum;
}

cplx gamma0_scaled_cf(cplx z) {
    // e^z E1(z) = 1/(z+1- 1/(z+3- 4/(z+5- ...))), modified Lentz
    const double tiny = 1e-300;
    cplx f = tiny, C = f, D = 0;
    for (int n = 1; n < 200000; ++n) {
        cplx an = n == 1 ? cplx(1) : cplx(-double(n - 1) * double(n - 1));
        cplx bn = z + double(2 * n - 1);
        D = bn + an * D;
        if (D == cplx(0)) D = tiny;
        C = bn + an / C;
        if (C == cplx(0)) C = tiny;
        D = 1.0 / D;
        cplx delta = C * D;
        f *= delta;
        if (std::abs(delta - 1.0) < 2 * eps) return f;
    }
    throw ConvergenceError("gamma0: continued fraction did not converge");
}

cplx gamma0(cplx z) {
    require_finite_input(z, "gamma0");
    if (z == cplx(0)) throw DomainError("gamma0: z = 0");
    cplx r;
    if (std::abs(z) < 2.5) {
        r = gamma0_series(z);
    } else {
        r = std::exp(-z) * gamma0_scaled_cf(z);
        // exp(-z) underflows to zero for huge Re z; that is the right limit
        if (std::isnan(r.real()) || std::isnan(r.imag())) r = 0;
    }
    require_finite(r, "gamma0");
    return r;
}

cplx gamma0_scaled(cplx z) {
    require_finite_input(z, "gamma0_scaled");
    if (z == cplx(0)) throw DomainError("gamma0: z = 0");
    cplx r = std::abs(z) < 2.5 ? std::exp(z) * gamma0_series(z) : gamma0_scaled_cf(z);
    require_finite(r, "gamma0_scaled");
    return r;
}

cplx coth(cplx z) {
    require_finite_input(z, "coth");
    double n = std::round(z.imag() / pi);
    if (z.real() == 0 && std::abs(z.imag() - n * pi) <= 4 * eps * std::max(1.0, std::abs(z.imag())))
        throw PoleError("coth: pole at i*n*pi");
    if (z.real() < 0) return -coth(-z);
    // Re z >= 0, so |e^{-2z}| <= 1 and nothing overflows
    cplx e = std::exp(-2.0 * z);
    return (1.0 + e) / (1.0 - e);
}

cplx digamma(cplx z) {
    require_finite_input(z, "digamma");
    if (z.imag() == 0 && z.real() <= 0 && z.real() == std::floor(z.real()))
        throw PoleError("digamma: non-positive integer");
    if (z.real() < -1e5) {
        // reflection; cot(pi z) = i coth(i pi z)
        return digamma(1.0 - z) - pi * I * coth(I * pi * z);
    }
    cplx acc = 0;
    while (z.real() < 8) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    static constexpr std::array<double, 8> B = {1.0 / 6,         -1.0 / 30,   1.0 / 42,
                                                -1.0 / 30,       5.0 / 66,    -691.0 / 2730,
                                                7.0 / 6,         -3617.0 / 510};
    cplx iz2 = 1.0 / (z * z), p = 1;
    cplx s = std::log(z) - 0.5 / z;
    for (int k = 1; k <= 8; ++k) {
        p *= iz2;
        s -= B[k - 1] / (2.0 * k) * p;
    }
    return s + acc;
}

namespace {

bool bad_y(cplx y) {
    // 1 + y a non-positive integer, equivalently n + y = 0 for some n >= 1
    return y.imag() == 0 && y.real() <= -1 && y.real() == std::floor(y.real());
}

// sum_{n>=1} e^{-nt}/(n+y) for small t via Euler-Maclaurin after N-1 explicit terms
cplx lerch_sum_em(cplx y, double t) {
    int N = std::max(1, int(std::ceil(16.0 - y.real())));
    cplx s = 0;
    for (int n = 1; n < N; ++n) s += std::exp(-n * t) / (double(n) + y);

    cplx Ny = double(N) + y;
    // integral from N to infinity is e^{yt} Gamma(0, (N+y)t) = e^{-Nt} e^{(N+y)t} Gamma(0, (N+y)t).
    // Re(N+y) > 0 keeps the ray off the cut.
    s += std::exp(-double(N) * t) * gamma0_scaled(Ny * t);

    // f(s) = e^{-st}/(s+y); derivatives at N by Leibniz
    auto deriv = [&](int m) {
        cplx g = 1.0 / Ny;  // g^{(i)} = (-1)^i i! / (s+y)^{i+1}
        cplx total = 0;
        double binom = 1;
        for (int i = 0; i <= m; ++i) {
            if (i > 0) {
                binom = binom * double(m - i + 1) / double(i);
                g *= -double(i) / Ny;
            }
            total += binom * std::pow(-t, m - i) * g;
        }
        return std::exp(-double(N) * t) * total;
    };
    s += 0.5 * deriv(0);
    // B_{2k}/(2k)!
    static constexpr std::array<double, 8> c = {
        1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600, 1.0 / 47900160,
        -691.0 / 1307674368000.0, 1.0 / 74724249600.0, -3617.0 / 10670622842880000.0};
    for (int k = 1; k <= 8; ++k) s -= c[k - 1] * deriv(2 * k - 1);
    return s;
}

}  // namespace

cplx lerch_sum(cplx y, double t) {
    require_finite_input(y, "lerch_sum");
    if (!(t > 0)) throw DomainError("lerch_sum: t must be > 0");
    if (bad_y(y)) throw PoleError("lerch_sum: n + y = 0");
    if (t < 0.05) return lerch_sum_em(y, t);
    double q = std::exp(-t);
    cplx s = 0;
    double qn = 1;
    for (long n = 1; n < 1000000; ++n) {
        qn *= q;
        cplx add = qn / (double(n) + y);
        s += add;
        // remaining terms bounded by qn q / (1-q) / |n+1+y| roughly
        if (qn * q / (1 - q) <= eps * 0.25 * std::abs(s) * std::abs(double(n) + 1.0 + y)) return s;
    }
    throw ConvergenceError("lerch_sum: no convergence");
}

cplx hyp_f(cplx y, cplx z) {
    require_finite_input(y, "hyp_f");
    require_finite_input(z, "hyp_f");
    if (bad_y(y)) throw PoleError("hyp_f: 1 + y is a non-positive integer");
    if (z == cplx(0)) return 1;
    double az = std::abs(z);
    if (az > 1) throw DomainError("hyp_f: |z| > 1");

    // real z close to 1: go through the Euler-Maclaurin sum
    if (z.imag() == 0 && z.real() > 0 && z.real() < 1 && -std::log(z.real()) < 0.05) {
        double t = -std::log(z.real());
        return (1.0 + y) / z * lerch_sum(y, t);
    }
    // sum_k (1+y)/(k+1+y) z^k
    cplx s = 0, zk = 1;
    for (long k = 0; k < 1000000; ++k) {
        cplx add = (1.0 + y) / (double(k) + 1.0 + y) * zk;
        s += add;
        if (az < 1) {
            double tail = std::abs(add) * az / (1 - az);
            if (tail <= eps * 0.25 * std::abs(s)) return s;
        }
        zk *= z;
    }
    throw ConvergenceError("hyp_f: series did not converge within 1e6 terms");
}

cplx branch_wrap(cplx w, double dt) {
    return std::log(w) + std::log(cplx(dt)) - std::log(w * dt);
}

}  // namespace udw
