#pragma once

#include <utility>

#include <su11/adjoint.hpp>
#include <su11/report.hpp>

namespace su11 {

// Barut-Girardello coherent state |Z, k>, K_- eigenstate with eigenvalue
// Z = zmag * e^{+i phi}; zmag >= 0, k > 0.
struct BgcsParams {
    double zmag = 0.0;
    double phi = 0.0;
    double k = 0.5;
};

void validate(const BgcsParams& p);

// Intensity ratio rho = I_{2k}(2|Z|) / I_{2k-1}(2|Z|) in [0, 1).
double bgcs_rho(const BgcsParams& p);

// Exact t=0 moments: mean = (Re Z, -Im Z, k + |Z| rho),
// var_x = var_y = <Kz>/2 (minimum uncertainty),
// var_z = |Z|^2 (1 - rho^2) + (1 - 2k)|Z| rho,
// cov_xy = 0, cov_xz = Re Z / 2, cov_yz = -Im Z / 2.
MomentState bgcs_initial_moments(const BgcsParams& p);

// Published general-t variance formulas evaluated literally (closed-form
// path).  The mean_kz line coincides with exact transport; var_x does so
// only at sin phi = 0 and var_y deviates for t > 0 (docs/reconciliation.md).
SqueezingReport bgcs_variances(const BgcsParams& p, const PropagatorCoefficients& c);

// Published weak-intensity (|Z| << 1) variances: agree with bgcs_variances
// to O(|Z|^4).
SqueezingReport bgcs_weak_intensity_variances(const BgcsParams& p,
                                              const PropagatorCoefficients& c);

// Published strong-intensity (|Z| >> 1) variances.  Exact in the
// |Z| -> infinity limit only for k = 1/4 (the printed residual bracket);
// for other k the closed form deviates O(1) and can go negative
// (docs/reconciliation.md).
SqueezingReport bgcs_strong_intensity_variances(const BgcsParams& p,
                                                const PropagatorCoefficients& c);

// Zero-intensity (|Z| -> 0) squeezing factors, uniform across regimes:
//   f_x = (r1^2 + j^2 - r3) / r3,  f_y = (j^2 + r2^2 - r3) / r3.
// Continuous across the regime seam; resonance values
// f_x = 2 tau^2 (2 tau^2 - 1) / (1 + 2 tau^2), f_y = 2 tau^2 / (1 + 2 tau^2).
std::pair<double, double> bgcs_zero_intensity_factors(const CouplingParams& c, double t);

// Hyperbolic zero-intensity x-squeeze window: f_x < 0 exactly for
// gamma*t in (0, tau_max), tau_max = asinh(gamma / (sqrt(2) * omega)).
// Requires the hyperbolic regime.
double bgcs_squeeze_window_tau_max(const CouplingParams& c);

// Squeezing factors at time t on the chosen path.
SqueezingReport bgcs_factors(const BgcsParams& p, const CouplingParams& c, double t,
                             EvalPath path);

}  // namespace su11
