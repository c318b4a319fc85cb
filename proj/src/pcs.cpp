#include <su11/pcs.hpp>

#include <cmath>
#include <complex>

namespace su11 {

namespace {

using cd = std::complex<double>;

// Half-sum combinations of the transport coefficients entering the published
// variance lines: f = (r1 - i j)/2, G = (j - i r2)/2, h = (s - i v)/2.
struct HalfSums {
    cd f, g, h;
};

HalfSums half_sums(const PropagatorCoefficients& c) {
    return {0.5 * cd(c.r1, -c.j), 0.5 * cd(c.j, -c.r2), 0.5 * cd(c.s, -c.v)};
}

double re_pair(const cd& z, const cd& w) {  // z* w + z w*
    return 2.0 * (z.real() * w.real() + z.imag() * w.imag());
}

}  // namespace

void validate(const PcsParams& p) {
    if (!(p.k > 0.0) || !std::isfinite(p.k)) throw DomainError("pcs: k must be positive");
    if (!std::isfinite(p.r)) throw DomainError("pcs: r must be finite");
    if (!std::isfinite(p.phi)) throw DomainError("pcs: phi must be finite");
}

MomentState pcs_initial_moments(const PcsParams& p) {
    validate(p);
    const double sh = std::sinh(p.r), ch = std::cosh(p.r);
    const double s2 = std::sinh(2.0 * p.r);
    const double cp = std::cos(p.phi), sp = std::sin(p.phi);
    MomentState m;
    m.mean << -p.k * sh * cp, -p.k * sh * sp, p.k * ch;
    const double vxx = 0.5 * p.k * (1.0 + sh * sh * cp * cp);
    const double vyy = 0.5 * p.k * (1.0 + sh * sh * sp * sp);
    const double vzz = 0.5 * p.k * sh * sh;
    const double cxy = 0.25 * p.k * sh * sh * std::sin(2.0 * p.phi);
    const double cxz = -0.25 * p.k * s2 * cp;
    const double cyz = -0.25 * p.k * s2 * sp;
    m.cov << vxx, cxy, cxz,
             cxy, vyy, cyz,
             cxz, cyz, vzz;
    return m;
}

SqueezingReport pcs_variances(const PcsParams& p, const PropagatorCoefficients& c) {
    validate(p);
    const auto [f, g, h] = half_sums(c);
    const cd xi = -std::tanh(0.5 * p.r) * std::exp(cd(0.0, -p.phi));
    const double ax = std::norm(xi);
    const double d1 = 1.0 - ax, d2 = d1 * d1;
    const double xf = re_pair(xi, f);
    const double xg = re_pair(xi, g);
    const double xh = re_pair(xi, h);
    const double var_x =
        2.0 * p.k * (std::norm(f) + (c.s - xf) * (c.s - xf) / d2 + c.s * (xf - c.s) / d1);
    const double var_y =
        2.0 * p.k * (std::norm(g) + (c.v + xg) * (c.v + xg) / d2 - c.v * (xg + c.v) / d1);
    const double kz = p.k / d1 * ((1.0 + ax) * c.r3 + 2.0 * xh);
    return make_report(var_x, var_y, kz, EvalPath::closed_form);
}

std::pair<double, double> pcs_initial_factors(const PcsParams& p) {
    validate(p);
    const double t2 = std::tanh(0.5 * p.r) * std::tanh(0.5 * p.r);
    const double pref = t2 / (1.0 - t2 * t2);
    const double cp = std::cos(p.phi), sp = std::sin(p.phi);
    const double lift = 1.0 + std::cosh(p.r);
    return {pref * (lift * cp * cp - 1.0), pref * (lift * sp * sp - 1.0)};
}

std::pair<double, double> pcs_squeeze_boundary(double r) {
    if (!std::isfinite(r)) throw DomainError("pcs_squeeze_boundary: r must be finite");
    const double lo = std::acos(1.0 / std::sqrt(std::cosh(2.0 * r) + 1.0));
    constexpr double kPi = 3.14159265358979323846264338327950288;
    return {lo, kPi - lo};
}

SqueezingReport pcs_resonance_variances(const PcsParams& p, double tau) {
    validate(p);
    if (!std::isfinite(tau) || tau < 0.0)
        throw DomainError("pcs_resonance_variances: tau must be non-negative");
    const double sh = std::sinh(p.r), ch = std::cosh(p.r);
    const double cp = std::cos(p.phi), sp = std::sin(p.phi);
    const double chi = ch - sh * cp;
    const double eps_x = 0.25 * (1.0 + sh * sh * cp * cp);
    const double eps_y = 0.25 * (1.0 + sh * sh * sp * sp);
    const double t2 = tau * tau, t3 = t2 * tau, t4 = t2 * t2;
    const double var_x =
        2.0 * p.k * (t4 * chi * chi + t2 * (chi * sh * cp + sh * sh * sp * sp) -
                     2.0 * t3 * chi * sh * sp - 0.5 * tau * sh * sh * std::sin(2.0 * p.phi) +
                     eps_x);
    const double var_y = 2.0 * p.k * (t2 * chi * chi - tau * chi * sh * sp + eps_y);
    const double kz = 2.0 * p.k * (t2 * chi - tau * sh * sp + 0.5 * ch);
    return make_report(var_x, var_y, kz, EvalPath::closed_form);
}

double pcs_fy_asymptote(const PcsParams& p) {
    validate(p);
    return 2.0 * (std::cosh(p.r) - std::sinh(p.r) * std::cos(p.phi)) - 1.0;
}

SqueezingReport pcs_factors(const PcsParams& p, const CouplingParams& c, double t,
                            EvalPath path) {
    if (path == EvalPath::closed_form) {
        return pcs_variances(p, coefficients(c, t));
    }
    const MomentState m = propagate_moments(pcs_initial_moments(p), adjoint_matrix(c, t));
    return make_report(m.cov(0, 0), m.cov(1, 1), m.mean(2), EvalPath::oracle);
}

double pcs_weak_coupling_check(const CouplingParams& c, double t, double k,
                               const std::vector<double>& rs,
                               const std::vector<double>& phis) {
    validate(c);
    if (c.lambda > 0.2 * c.omega)
        throw DomainError("pcs_weak_coupling_check requires lambda/omega <= 0.2");
    if (rs.empty() || phis.empty())
        throw DomainError("pcs_weak_coupling_check: empty grid");
    const AdjointMatrix m = adjoint_matrix(c, t);
    const double shift = 2.0 * c.omega * t;
    double worst = 0.0;
    for (double r : rs) {
        for (double phi : phis) {
            const MomentState evolved =
                propagate_moments(pcs_initial_moments({r, phi, k}), m);
            const SqueezingReport now =
                make_report(evolved.cov(0, 0), evolved.cov(1, 1), evolved.mean(2),
                            EvalPath::oracle);
            const MomentState drifted = pcs_initial_moments({r, phi + shift, k});
            const SqueezingReport ref =
                make_report(drifted.cov(0, 0), drifted.cov(1, 1), drifted.mean(2),
                            EvalPath::oracle);
            worst = std::max(worst, std::abs(now.f_x - ref.f_x));
            worst = std::max(worst, std::abs(now.f_y - ref.f_y));
        }
    }
    return worst;
}

StrongCouplingFit pcs_strong_coupling_exponents(const PcsParams& p, const CouplingParams& c,
                                                double t_lo, double t_hi, int n_samples) {
    validate(p);
    if (classify_regime(c) != Regime::hyperbolic)
        throw DomainError("pcs_strong_coupling_exponents requires the hyperbolic regime");
    const double gamma = effective_rate(c);
    if (!(t_lo < t_hi) || n_samples < 4)
        throw DomainError("pcs_strong_coupling_exponents: need t_lo < t_hi, n_samples >= 4");
    if (gamma * t_lo < 3.0)
        throw DomainError("pcs_strong_coupling_exponents requires gamma*t_lo >= 3");
    if (gamma * t_hi > 350.0)
        throw OverflowError("pcs_strong_coupling_exponents: window overflows (gamma*t > 350)",
                            2.0 * gamma * t_hi);

    // Least squares of ln var_x, ln var_y, ln kz against gamma*t.
    double sw = 0, swx = 0, sxx = 0;
    double sy[3] = {0, 0, 0}, sxy[3] = {0, 0, 0};
    const MomentState m0 = pcs_initial_moments(p);
    for (int i = 0; i < n_samples; ++i) {
        const double t = t_lo + (t_hi - t_lo) * i / (n_samples - 1);
        const double xv = gamma * t;
        const MomentState m = propagate_moments(m0, adjoint_matrix(c, t));
        const double y[3] = {std::log(m.cov(0, 0)), std::log(m.cov(1, 1)),
                             std::log(std::abs(m.mean(2)))};
        sw += 1.0;
        swx += xv;
        sxx += xv * xv;
        for (int q = 0; q < 3; ++q) {
            sy[q] += y[q];
            sxy[q] += xv * y[q];
        }
    }
    const double denom = sw * sxx - swx * swx;
    double slope[3];
    for (int q = 0; q < 3; ++q) slope[q] = (sw * sxy[q] - swx * sy[q]) / denom;
    return {0.5 * (slope[0] + slope[1]), slope[2]};
}

}  // namespace su11
