#include <su11/bgcs.hpp>

#include <cmath>
#include <complex>

#include <su11/special.hpp>

namespace su11 {

namespace {

using cd = std::complex<double>;

struct HalfSums {
    cd f, g, h;
};

HalfSums half_sums(const PropagatorCoefficients& c) {
    return {0.5 * cd(c.r1, -c.j), 0.5 * cd(c.j, -c.r2), 0.5 * cd(c.s, -c.v)};
}

double re_pair(const cd& z, const cd& w) {  // z* w + z w*
    return 2.0 * (z.real() * w.real() + z.imag() * w.imag());
}

cd z_of(const BgcsParams& p) { return p.zmag * std::exp(cd(0.0, p.phi)); }

}  // namespace

void validate(const BgcsParams& p) {
    if (!(p.k > 0.0) || !std::isfinite(p.k)) throw DomainError("bgcs: k must be positive");
    if (!(p.zmag >= 0.0) || !std::isfinite(p.zmag))
        throw DomainError("bgcs: zmag must be non-negative");
    if (!std::isfinite(p.phi)) throw DomainError("bgcs: phi must be finite");
}

double bgcs_rho(const BgcsParams& p) {
    validate(p);
    return bessel_i_ratio(2.0 * p.k, 2.0 * p.zmag).ratio;
}

MomentState bgcs_initial_moments(const BgcsParams& p) {
    const double rho = bgcs_rho(p);
    const cd z = z_of(p);
    const double kz = p.k + p.zmag * rho;
    const double var_z =
        p.zmag * p.zmag * (1.0 - rho * rho) + (1.0 - 2.0 * p.k) * p.zmag * rho;
    MomentState m;
    m.mean << z.real(), -z.imag(), kz;
    m.cov << 0.5 * kz, 0.0, 0.5 * z.real(),
             0.0, 0.5 * kz, -0.5 * z.imag(),
             0.5 * z.real(), -0.5 * z.imag(), var_z;
    return m;
}

SqueezingReport bgcs_variances(const BgcsParams& p, const PropagatorCoefficients& c) {
    const double rho = bgcs_rho(p);
    const auto [f, g, h] = half_sums(c);
    const cd z = z_of(p);
    const double kzm = p.k + p.zmag * rho;
    // Residual bracket |Z|(1-rho^2) + (1-2k) rho multiplying |Z| S^2 / |Z| V^2.
    const double br = p.zmag * (1.0 - rho * rho) + (1.0 - 2.0 * p.k) * rho;
    const double zf = re_pair(z, f);
    const double zg = re_pair(z, g);
    const double zh = re_pair(z, h);
    const double var_x = 2.0 * std::norm(f) * kzm - c.s * zf + p.zmag * c.s * c.s * br;
    const double var_y = 2.0 * std::norm(g) * kzm - c.v * zg + p.zmag * c.v * c.v * br;
    const double kz = c.r3 * kzm + zh;
    return make_report(var_x, var_y, kz, EvalPath::closed_form);
}

SqueezingReport bgcs_weak_intensity_variances(const BgcsParams& p,
                                              const PropagatorCoefficients& c) {
    validate(p);
    const auto [f, g, h] = half_sums(c);
    const cd z = z_of(p);
    const double zf = re_pair(z, f);
    const double zg = re_pair(z, g);
    const double zh = re_pair(z, h);
    const double w2 = p.zmag * p.zmag / (2.0 * p.k);
    const double var_x =
        (2.0 * std::norm(f) + c.s * c.s) * w2 + 2.0 * p.k * std::norm(f) - c.s * zf;
    const double var_y =
        (2.0 * std::norm(g) + c.v * c.v) * w2 + 2.0 * p.k * std::norm(g) - c.v * zg;
    const double kz = c.r3 * (p.k + w2) + zh;
    return make_report(var_x, var_y, kz, EvalPath::closed_form);
}

SqueezingReport bgcs_strong_intensity_variances(const BgcsParams& p,
                                                const PropagatorCoefficients& c) {
    validate(p);
    const auto [f, g, h] = half_sums(c);
    const cd z = z_of(p);
    const double zf = re_pair(z, f);
    const double zg = re_pair(z, g);
    const double zh = re_pair(z, h);
    const double var_x = 2.0 * std::norm(f) * (p.k + p.zmag) - c.s * zf +
                         p.zmag * (1.0 - 2.0 * p.k) * c.s * c.s;
    const double var_y = 2.0 * std::norm(g) * (p.k + p.zmag) - c.v * zg +
                         p.zmag * (1.0 - 2.0 * p.k) * c.v * c.v;
    const double kz = c.r3 * (p.k + p.zmag) + zh;
    return make_report(var_x, var_y, kz, EvalPath::closed_form);
}

std::pair<double, double> bgcs_zero_intensity_factors(const CouplingParams& c, double t) {
    const PropagatorCoefficients co = coefficients(c, t);
    const double fx = (co.r1 * co.r1 + co.j * co.j - co.r3) / co.r3;
    const double fy = (co.j * co.j + co.r2 * co.r2 - co.r3) / co.r3;
    return {fx, fy};
}

double bgcs_squeeze_window_tau_max(const CouplingParams& c) {
    if (classify_regime(c) != Regime::hyperbolic)
        throw DomainError("bgcs_squeeze_window_tau_max requires the hyperbolic regime");
    const double gamma = effective_rate(c);
    return std::asinh(gamma / (std::sqrt(2.0) * c.omega));
}

SqueezingReport bgcs_factors(const BgcsParams& p, const CouplingParams& c, double t,
                             EvalPath path) {
    if (path == EvalPath::closed_form) {
        return bgcs_variances(p, coefficients(c, t));
    }
    const MomentState m = propagate_moments(bgcs_initial_moments(p), adjoint_matrix(c, t));
    return make_report(m.cov(0, 0), m.cov(1, 1), m.mean(2), EvalPath::oracle);
}

}  // namespace su11
