#pragma once

#include <complex>

namespace udw {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};
inline constexpr double euler_gamma = 0.57721566490153286061;

// Upper incomplete gamma Gamma(0, z), principal branch (cut on the negative real axis).
cplx gamma0(cplx z);

// e^z Gamma(0, z). Same branch; stays finite where gamma0 alone over/underflows.
cplx gamma0_scaled(cplx z);

// Gamma(0, z) by the power series only. Exposed for the overlap tests.
cplx gamma0_series(cplx z);
// e^z Gamma(0, z) by the continued fraction only.
cplx gamma0_scaled_cf(cplx z);

cplx digamma(cplx z);

// 2F1(1+y, 1; 2+y; z)
cplx hyp_f(cplx y, cplx z);

// sum_{n>=1} e^{-n t} / (n + y), t > 0.  Equals e^{-t}/(1+y) * hyp_f(y, e^{-t}).
cplx lerch_sum(cplx y, double t);

cplx coth(cplx z);

// principal log, exposed so that callers spell out branch combinations literally
inline cplx plog(cplx z) { return std::log(z); }

// log(w) + log(dt) - log(w dt): a multiple of 2 pi i, not zero in general
cplx branch_wrap(cplx w, double dt);

}  // namespace udw
