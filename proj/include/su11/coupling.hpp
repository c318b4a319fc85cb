#pragma once

#include <su11/errors.hpp>

namespace su11 {

// Degenerate parametric amplifier in su(1,1) form: H = 2*omega*Kz + lambda*(K+ + K-).
// omega > 0 is the mode frequency, lambda >= 0 the pump coupling.
struct CouplingParams {
    double omega = 1.0;
    double lambda = 0.0;
    // Relative half-width of the resonance classification band.
    double regime_epsilon = 1e-12;
};

enum class Regime { oscillatory, resonant, hyperbolic };

const char* to_string(Regime r);

// Throws DomainError unless omega > 0, lambda >= 0, regime_epsilon >= 0.
void validate(const CouplingParams& p);

// |omega - lambda| <= regime_epsilon * max(omega, lambda) classifies as resonant.
Regime classify_regime(const CouplingParams& p);

// Effective rate: g = sqrt(omega^2 - lambda^2) (oscillatory) or
// gamma = sqrt(lambda^2 - omega^2) (hyperbolic); 0 at resonance.
double effective_rate(const CouplingParams& p);

// Heisenberg-picture transport coefficients for the (Kx, Ky, Kz) expectation
// vector.  Diagonal terms r1, r2, r3; couplings j (x<->y rotation),
// s (x<->z), v (y<->z).  Identities holding in every regime:
//   r3 >= 1,  r3^2 - s^2 - v^2 = 1.
struct PropagatorCoefficients {
    double r1, r2, r3;
    double j, s, v;
    double t;
    Regime regime;
};

// Single expression across regimes: with u = (omega-lambda)(omega+lambda),
//   c2 = cos(2gt) | cosh(2*gamma*t),  sl = sin(2gt)/g | sinh(2*gamma*t)/gamma,
//   sq = sin^2(gt)/g^2 | sinh^2(gamma*t)/gamma^2,
// and a 3-term series in x = u t^2 for |x| < 1e-8 so the branches meet the
// resonance polynomials (1-2tau^2, 1, 1+2tau^2, 2tau, 2tau^2, 2tau; tau=omega*t)
// continuously.  Throws OverflowError when gamma*t > 350 and DomainError for
// t < 0 or invalid params.
PropagatorCoefficients coefficients(const CouplingParams& p, double t);

}  // namespace su11
