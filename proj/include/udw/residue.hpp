#pragma once

// Closed evaluation of the kappa integrals by partial fractions and residues.
// Every integrand here is a sum of  r e^{i kappa x} / (kappa - z); the helpers below
// integrate one such term with the branch of the logarithm fixed by the path.

#include "udw/mode.hpp"
#include "udw/special.hpp"

namespace udw {

// int_0^inf e^{i k x} / (k - z) dk, x != 0, z off [0, inf)
cplx half_line_exp(cplx z, double x);
// int_{-inf}^0 e^{i k x} / (k - z) dk
cplx neg_half_line_exp(cplx z, double x);

// 1 / (1 - e^{-2 pi z / a}) without overflow
cplx thermal_weight(cplx z, double a);

// principal value of int_R W(k) e^{i k x} / (k - z) dk with W the thermal weight, x != 0
cplx thermal_line_exp(cplx z, double x, double a);

enum class HalfLine { Positive, Negative };

// Equal-time half-line integral of k |K|^2 minus C k/(k^2+Omega^2), where C is the
// coefficient of the 1/k tail.  Positive: int_0^inf.  Negative: -int_{-inf}^0.
// dot selects the differentiated kernel.  The coupling prefactor is not included.
double half_line_subtracted(const DetectorParams& p, double eta, bool dot, HalfLine side);

// coefficient of the 1/|k| tail of k|K|^2
double log_tail_coefficient(const DetectorParams& p, double eta, bool dot);

}  // namespace udw
