#include <su11/special.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace su11 {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Lanczos, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double log_gamma_lanczos(double x) {
    // Valid for x >= 0.5.
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
    const double base = x + 6.5;  // x - 1 + g + 0.5
    return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(base) - base + std::log(a);
}

// Ascending series, safe for x <= 30.
double bessel_i_series(double nu, double x) {
    if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
    const double q = 0.25 * x * x;
    double term = std::exp(nu * std::log(0.5 * x) - log_gamma(nu + 1.0));
    double sum = term;
    for (int m = 1; m < 500; ++m) {
        term *= q / (static_cast<double>(m) * (nu + m));
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return sum;
}

// Large-argument expansion I_nu(x) ~ e^x/sqrt(2 pi x) * sum_k (-1)^k a_k(nu)/x^k,
// a_k = prod_{j=1..k} (4nu^2 - (2j-1)^2) / (k! 8^k).  Used only for nu < 2,
// x > 30, where optimal truncation is far below 1e-13.
double bessel_i_asymptotic(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 40; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= -(mu - odd * odd) / (8.0 * k * x);
        if (std::abs(term) < 1e-18) break;
        sum += term;
    }
    return std::exp(x) / std::sqrt(2.0 * kPi * x) * sum;
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma requires x > 0");
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
        return std::log(kPi / std::sin(kPi * x)) - log_gamma_lanczos(1.0 - x);
    }
    return log_gamma_lanczos(x);
}

double bessel_i(double nu, double x) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError("bessel_i requires nu >= 0");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("bessel_i requires x >= 0");
    if (x > 700.0)
        throw OverflowError("bessel_i overflow for x = " + std::to_string(x) + " > 700", x);
    if (x <= 30.0) return bessel_i_series(nu, x);

    // Asymptotic seed at the fractional order nu0 in [0,1), then climb to nu
    // through the ratio chain r_mu = I_mu/I_{mu-1}, evaluated downward from a
    // single continued-fraction seed at the top order (stable direction).
    const double nu0 = nu - std::floor(nu);
    const int n = static_cast<int>(std::floor(nu) + 0.5);
    const double base = bessel_i_asymptotic(nu0, x);
    if (n == 0) return base;

    double product = 1.0;
    double r = bessel_i_ratio(nu0 + n, x).ratio;  // r_{nu0+n}
    for (int m = n; m >= 1; --m) {
        product *= r;
        if (m > 1) r = 1.0 / (2.0 * (nu0 + m - 1) / x + r);  // r_{mu-1} from r_mu
    }
    return base * product;
}

BesselRatioResult bessel_i_ratio(double nu, double x) {
    if (!(nu >= 0.5) || !std::isfinite(nu)) throw DomainError("bessel_i_ratio requires nu >= 0.5");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("bessel_i_ratio requires x >= 0");
    if (x == 0.0) return {0.0, 0.0};

    // Gauss continued fraction I_nu/I_{nu-1} = 1/(2nu/x + 1/(2(nu+1)/x + ...)),
    // modified Lentz.
    constexpr double tiny = 1e-300;
    constexpr double tol = 1e-15;
    double f = tiny, c = tiny, d = 0.0, delta = 0.0;
    for (int i = 1; i <= 100000; ++i) {
        const double b = 2.0 * (nu + i - 1) / x;
        d = b + d;
        if (d == 0.0) d = tiny;
        c = b + 1.0 / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < tol)
            return {f, std::abs(delta - 1.0) + 10.0 * std::numeric_limits<double>::epsilon()};
    }
    throw ConvergenceError("bessel_i_ratio continued fraction failed to converge", 100000,
                           std::abs(delta - 1.0));
}

}  // namespace su11
