#pragma once

#include "udw/model.hpp"
#include "udw/special.hpp"

namespace udw {

// MainText: 2 hbar gamma / (pi m0 Omega^2).  AppendixD: half of that.
enum class Prefactor { MainText, AppendixD };

// Published: the closed expressions exactly as printed.
// PartialFraction: the same kappa integrals evaluated by partial fractions with the
// logarithm branches fixed by the integration path.  Only the v2 and inertial pieces
// differ; v1 has a single form.
enum class V2Form { Published, PartialFraction };

// Additive renormalisation constants. Ignored unless include_renorm_offsets is set.
struct RenormOffsets {
    double lambda0 = 0;           // qq v1 and pp v1, e^{-2 gamma eta} block
    double lambda1 = 0;           // pp v1, Omega^2 block
    double lambda0_v2 = 0;        // qq v2
    double lambda0_tilde = 0;     // qq inertial
    double lambda0_tilde_v2 = 0;  // pp v2
    double lambda0_tilde_v = 0;   // pp inertial
};

struct CorrelatorOptions {
    bool include_renorm_offsets = false;
    Prefactor prefactor = Prefactor::MainText;
    V2Form v2_form = V2Form::Published;
    RenormOffsets offsets;
};

struct CorrelatorValue {
    double v1 = 0;
    double neg_v2 = 0;  // value of the -<..>_v2 expression
    double total = 0;   // v1 + neg_v2
    double eta = 0;
};

// -gamma_E - ln(Omega |dt|): the finite part left by a point split of size dt
double renorm_lambda0(double Omega, double dt);

// 2 gamma hbar / (pi m0) or half of it
double coupling_prefactor(const DetectorParams& p, Prefactor c);

double qq_uad_v1(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o = {});
double qq_uad_v2(const DetectorParams& p, double eta, const CorrelatorOptions& o = {});
CorrelatorValue qq_uad(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o = {});

double pp_uad_v1(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o = {});
double pp_uad_v2(const DetectorParams& p, double eta, const CorrelatorOptions& o = {});
CorrelatorValue pp_uad(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o = {});

double qq_inertial(const DetectorParams& p, double eta, const CorrelatorOptions& o = {});
double pp_inertial(const DetectorParams& p, double eta, const CorrelatorOptions& o = {});

// Complex assembly inside Re{} of the v1 expressions, prefactor included.
cplx qq_uad_v1_complex(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o = {});
cplx pp_uad_v1_complex(const DetectorParams& p, double a, double eta, const CorrelatorOptions& o = {});

struct AppendixTerms {
    cplx P1, P2, P3, P4;
    cplx sum() const { return P1 + P2 + P3 + P4; }
};

// Unequal-time blocks of <{Q(tau),Q(tau2)}>: the e1..e4 pieces of the kappa integrand
// (thermal weight on the whole line for v1, bare kernel on kappa <= 0 for v2).
// Re of the v1 sum approaches qq_uad_v1 + prefactor * S^2 * renorm_lambda0 as the
// split closes; minus Re of the v2 sum approaches the partial-fraction v2 the same way.
AppendixTerms appendix_terms_uad_v1(const DetectorParams& p, double a, double tau, double tau2,
                                    double tau0, double tau02, Prefactor c = Prefactor::MainText);
AppendixTerms appendix_terms_uad_v2(const DetectorParams& p, double tau, double tau2, double tau0,
                                    double tau02, Prefactor c = Prefactor::MainText);

}  // namespace udw
