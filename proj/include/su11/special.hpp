#pragma once

#include <su11/errors.hpp>

namespace su11 {

// log Gamma(x) for x > 0.  Lanczos approximation (g = 7, 9 coefficients)
// with reflection below 0.5; relative error < 1e-13 on [0.1, 1e6].
double log_gamma(double x);

// Modified Bessel function I_nu(x), nu >= 0, x >= 0.  Ascending series for
// x <= 30; for larger x, asymptotic evaluation at the fractional order in
// [0, 1) lifted by a stable downward continued-fraction ratio chain.
// Throws OverflowError for x > 700 (result would exceed double range for
// small nu) and DomainError outside the stated domain.
double bessel_i(double nu, double x);

struct BesselRatioResult {
    double ratio;
    double est_error;  // relative error estimate from the last CF step
};

// ratio = I_nu(x) / I_{nu-1}(x) for nu >= 0.5, x >= 0, without evaluating
// either function (Gauss continued fraction, modified Lentz).  The ratio lies
// in [0, 1) and is strictly increasing in x; at nu = 0.5 it equals tanh(x).
BesselRatioResult bessel_i_ratio(double nu, double x);

}  // namespace su11
