#pragma once

#include <utility>
#include <vector>

#include <su11/adjoint.hpp>
#include <su11/report.hpp>

namespace su11 {

// Perelomov coherent state |xi, k> with xi = -tanh(r/2) e^{-i phi}.
// k > 0 is the Bargmann index; r may take either sign (r=0 is the extremal
// state); phi is taken modulo 2*pi.
struct PcsParams {
    double r = 0.0;
    double phi = 0.0;
    double k = 0.5;
};

void validate(const PcsParams& p);

// Exact t=0 moments:
//   mean = k (-sinh r cos phi, -sinh r sin phi, cosh r),
//   var_x = k/2 (1 + sinh^2 r cos^2 phi), var_y = k/2 (1 + sinh^2 r sin^2 phi),
//   var_z = k/2 sinh^2 r, cov_xy = k/4 sinh^2 r sin 2phi,
//   cov_xz = -k/4 sinh 2r cos phi, cov_yz = -k/4 sinh 2r sin phi.
MomentState pcs_initial_moments(const PcsParams& p);

// Published general-t variance formulas evaluated literally (closed-form
// path).  The var_y and mean_kz lines coincide with exact transport; the
// var_x line does so only at sin phi = 0 (see docs/reconciliation.md).
SqueezingReport pcs_variances(const PcsParams& p, const PropagatorCoefficients& c);

// Published t=0 squeezing factors:
//   f_x = tanh^2(r/2)/(1 - tanh^4(r/2)) * ((1 + cosh r) cos^2 phi - 1),
// f_y with sin^2.  Sign and zero set agree with the oracle factors; the
// magnitudes do not (see docs/reconciliation.md).
std::pair<double, double> pcs_initial_factors(const PcsParams& p);

// Published x-quadrature squeeze boundary at t=0: the half-open angular
// window (phi_lo, pi - phi_lo) with phi_lo = acos(1/sqrt(cosh 2r + 1)).
// Collapses to (pi/4, 3pi/4) as r -> 0.  Requires finite r.
std::pair<double, double> pcs_squeeze_boundary(double r);

// Published resonance (omega = lambda) variances at tau = omega*t; with
// chi = cosh r - sinh r cos phi these coincide with exact transport.
SqueezingReport pcs_resonance_variances(const PcsParams& p, double tau);

// Large-tau limit of the resonance f_y: 2*chi - 1.  Squeezing survives
// asymptotically iff this is <= 0; at phi = 0 the root is r = ln 2.
double pcs_fy_asymptote(const PcsParams& p);

// Squeezing factors at time t on the chosen path.
SqueezingReport pcs_factors(const PcsParams& p, const CouplingParams& c, double t,
                            EvalPath path);

// Weak-coupling drift check (requires lambda/omega <= 0.2): max over the
// (r, phi) grid and both quadratures of
//   |f_j(r, phi, t) - f_j^{t=0}(r, phi + 2*omega*t)|
// with both sides on the oracle path.
double pcs_weak_coupling_check(const CouplingParams& c, double t, double k,
                               const std::vector<double>& rs,
                               const std::vector<double>& phis);

// Least-squares growth exponents of ln var_j and ln mean_kz against gamma*t
// over [t_lo, t_hi] (hyperbolic regime, gamma*t_lo >= 3 required;
// gamma*t_hi > 350 rejected as overflow).  Expected slopes: 4 for the
// variances, 2 for mean_kz.
struct StrongCouplingFit {
    double slope_var;  // mean of the x and y slopes
    double slope_kz;
};

StrongCouplingFit pcs_strong_coupling_exponents(const PcsParams& p, const CouplingParams& c,
                                                double t_lo, double t_hi, int n_samples);

}  // namespace su11
