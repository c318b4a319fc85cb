#include <su11/coupling.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace su11 {

const char* to_string(Regime r) {
    switch (r) {
        case Regime::oscillatory: return "oscillatory";
        case Regime::resonant: return "resonant";
        case Regime::hyperbolic: return "hyperbolic";
    }
    return "?";
}

void validate(const CouplingParams& p) {
    if (!(p.omega > 0.0) || !std::isfinite(p.omega))
        throw DomainError("omega must be positive and finite");
    if (!(p.lambda >= 0.0) || !std::isfinite(p.lambda))
        throw DomainError("lambda must be non-negative and finite");
    if (!(p.regime_epsilon >= 0.0)) throw DomainError("regime_epsilon must be non-negative");
}

Regime classify_regime(const CouplingParams& p) {
    validate(p);
    const double scale = std::max(p.omega, p.lambda);
    if (std::abs(p.omega - p.lambda) <= p.regime_epsilon * scale) return Regime::resonant;
    return p.lambda < p.omega ? Regime::oscillatory : Regime::hyperbolic;
}

double effective_rate(const CouplingParams& p) {
    if (classify_regime(p) == Regime::resonant) return 0.0;
    return std::sqrt(std::abs((p.omega - p.lambda) * (p.omega + p.lambda)));
}

PropagatorCoefficients coefficients(const CouplingParams& p, double t) {
    const Regime regime = classify_regime(p);
    if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be non-negative and finite");

    const double u = (p.omega - p.lambda) * (p.omega + p.lambda);
    const double x = u * t * t;

    // c2 ~ cos(2gt), sl ~ sin(2gt)/g, sq ~ sin^2(gt)/g^2, continued with
    // cosh/sinh for u < 0; series for |x| < 1e-8 keeps the seam smooth and
    // reproduces the resonance polynomials at x = 0.
    double c2, sl, sq;
    if (std::abs(x) < 1e-8) {
        c2 = 1.0 - 2.0 * x + (2.0 / 3.0) * x * x;
        sl = 2.0 * t * (1.0 - (2.0 / 3.0) * x + (2.0 / 15.0) * x * x);
        sq = t * t * (1.0 - x / 3.0 + (2.0 / 45.0) * x * x);
    } else if (u > 0.0) {
        const double g = std::sqrt(u);
        c2 = std::cos(2.0 * g * t);
        sl = std::sin(2.0 * g * t) / g;
        const double sn = std::sin(g * t);
        sq = sn * sn / u;
    } else {
        const double gm = std::sqrt(-u);
        if (gm * t > 350.0)
            throw OverflowError("hyperbolic growth exceeds double range (gamma*t = " +
                                    std::to_string(gm * t) + " > 350)",
                                2.0 * gm * t);
        c2 = std::cosh(2.0 * gm * t);
        sl = std::sinh(2.0 * gm * t) / gm;
        const double sh = std::sinh(gm * t);
        sq = sh * sh / (-u);
    }

    PropagatorCoefficients c;
    c.r1 = c2 - 2.0 * p.lambda * p.lambda * sq;
    c.r2 = c2;
    c.r3 = c2 + 2.0 * p.omega * p.omega * sq;
    c.j = p.omega * sl;
    c.s = 2.0 * p.omega * p.lambda * sq;
    c.v = p.lambda * sl;
    c.t = t;
    c.regime = regime;
    return c;
}

}  // namespace su11
