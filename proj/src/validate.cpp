#include <su11/validate.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include <su11/bgcs.hpp>
#include <su11/pcs.hpp>
#include <su11/scan.hpp>

// Committed reconciliation ledger: every closed-form line is measured against
// the oracle (first-principles moments + exact transport) over pinned sample
// sets.  Rows marked flagged are known, documented discrepancies of the
// closed forms; their measured deviation must reproduce the committed
// bracket.  See docs/reconciliation.md for the narrative.

namespace su11 {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

struct CoeffSet {
    const char* name;
    CouplingParams c;
    double t;
};

const std::vector<CoeffSet>& coefficient_sets() {
    static const std::vector<CoeffSet> sets = {
        {"A", {3.0, 1.0}, kPi / 2.0},
        {"B", {1.0, 0.3}, 0.9},
        {"C", {1.0, 2.0}, kPi / 4.0},
        {"D", {1.0, 1.0}, 1.2},
    };
    return sets;
}

const std::vector<double>& pcs_rs() {
    static const std::vector<double> v = {0.5, 1.0, 2.0, 3.0};
    return v;
}

const std::vector<double>& pcs_phis() {
    static const std::vector<double> v = {0.0, kPi / 4.0, 1.0, kPi / 2.0, 2.0, kPi, 4.5};
    return v;
}

const std::vector<double>& bgcs_zmags() {
    static const std::vector<double> v = {0.5, 2.0, 5.0};
    return v;
}

const std::vector<double>& bgcs_phis() {
    static const std::vector<double> v = {0.0, 1.0, kPi / 2.0, kPi, 5.0};
    return v;
}

const std::vector<double>& bgcs_ks() {
    static const std::vector<double> v = {0.25, 0.5, 2.0};
    return v;
}

SqueezingReport oracle_report(const MomentState& m) {
    return make_report(m.cov(0, 0), m.cov(1, 1), m.mean(2), EvalPath::oracle);
}

ValidationRow agree_row(std::string id, std::string detail, double measured, double tol) {
    ValidationRow r;
    r.id = std::move(id);
    r.detail = std::move(detail);
    r.measured = measured;
    r.flagged = false;
    r.tol = tol;
    r.pass = measured <= tol;
    return r;
}

ValidationRow flag_row(std::string id, std::string detail, double measured, double lo,
                       double hi) {
    ValidationRow r;
    r.id = std::move(id);
    r.detail = std::move(detail);
    r.measured = measured;
    r.flagged = true;
    r.lo = lo;
    r.hi = hi;
    r.pass = measured >= lo && measured <= hi;
    return r;
}

double bisect(double lo, double hi, const std::function<double(double)>& fn) {
    double flo = fn(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = fn(mid);
        if ((flo <= 0.0) == (fm <= 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

ValidationReport run_validation() {
    ValidationReport rep;
    auto& rows = rep.rows;

    // --- PCS general-t closed form vs transport -------------------------
    {
        double d_t0 = 0.0, d_vx = 0.0, d_vx_axis = 0.0, d_vy = 0.0, d_kz = 0.0;
        const PropagatorCoefficients c0 = coefficients({1.0, 0.5}, 0.0);
        for (const auto& set : coefficient_sets()) {
            const PropagatorCoefficients co = coefficients(set.c, set.t);
            const AdjointMatrix m = adjoint_matrix(co);
            for (double r : pcs_rs()) {
                for (double phi : pcs_phis()) {
                    const PcsParams p{r, phi, 0.5};
                    const SqueezingReport lit = pcs_variances(p, co);
                    const MomentState tr = propagate_moments(pcs_initial_moments(p), m);
                    const double dvx = std::abs(lit.var_x - tr.cov(0, 0));
                    d_vx = std::max(d_vx, dvx);
                    if (std::abs(std::sin(phi)) < 1e-15) d_vx_axis = std::max(d_vx_axis, dvx);
                    d_vy = std::max(d_vy, std::abs(lit.var_y - tr.cov(1, 1)));
                    d_kz = std::max(d_kz, std::abs(lit.mean_kz - tr.mean(2)));
                }
            }
        }
        for (double r : pcs_rs()) {
            for (double phi : pcs_phis()) {
                const PcsParams p{r, phi, 0.5};
                const SqueezingReport lit = pcs_variances(p, c0);
                const MomentState m0 = pcs_initial_moments(p);
                d_t0 = std::max({d_t0, std::abs(lit.var_x - m0.cov(0, 0)),
                                 std::abs(lit.var_y - m0.cov(1, 1)),
                                 std::abs(lit.mean_kz - m0.mean(2))});
            }
        }
        rows.push_back(agree_row("pcs_general_t0", "closed-form variances reduce to the initial moments at t=0 (28 samples)", d_t0, 1e-10));
        rows.push_back(agree_row("pcs_general_var_y", "closed-form var_y vs transport, 4 coefficient sets x 28 samples", d_vy, 1e-9));
        rows.push_back(agree_row("pcs_general_kz", "closed-form mean_kz vs transport, same set", d_kz, 1e-9));
        rows.push_back(agree_row("pcs_general_var_x_axis", "closed-form var_x vs transport restricted to sin(phi)=0", d_vx_axis, 1e-9));
        rows.push_back(flag_row("pcs_general_var_x", "closed-form var_x vs transport at generic phi (phase-rotation sign defect)", d_vx, 10.0, 5e3));
    }

    // --- PCS t=0 factor formulas ----------------------------------------
    {
        double dev = 0.0;
        for (double r : pcs_rs()) {
            for (double phi : pcs_phis()) {
                const auto [fx, fy] = pcs_initial_factors({r, phi, 0.5});
                const MomentState m0 = pcs_initial_moments({r, phi, 0.5});
                const SqueezingReport tr = oracle_report(m0);
                dev = std::max({dev, std::abs(fx - tr.f_x), std::abs(fy - tr.f_y)});
            }
        }
        rows.push_back(flag_row("pcs_initial_factors", "printed t=0 factor magnitudes vs oracle factors (zero sets and signs agree)", dev, 8.0, 32.0));

        const double lo_small = pcs_squeeze_boundary(1e-8).first;
        rows.push_back(agree_row("pcs_boundary_r0_limit", "squeeze boundary angle at r->0 vs pi/4", std::abs(lo_small - kPi / 4.0), 1e-6));

        const double lo3 = pcs_squeeze_boundary(3.0).first;
        const double true3 = std::acos(1.0 / std::sqrt(std::cosh(3.0) + 1.0));
        rows.push_back(flag_row("pcs_boundary_r3", "printed boundary (doubled r scale) vs oracle zero set at r=3", std::abs(lo3 - true3), 0.1, 0.5));
    }

    // --- PCS resonance closed form ---------------------------------------
    {
        const std::vector<double> taus = {0.0, 0.5, 1.2, 2.0, 3.0 * kPi};
        const std::vector<std::pair<double, double>> rphis = {
            {0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {-1.0, kPi / 2.0}, {0.6, 2.0}};
        double d_res = 0.0, d_yz = 0.0, d_x = 0.0;
        for (double k : {0.5, 1.0}) {
            for (double tau : taus) {
                const CouplingParams c{1.0, 1.0};
                const PropagatorCoefficients co = coefficients(c, tau);
                const AdjointMatrix m = adjoint_matrix(co);
                for (const auto& [r, phi] : rphis) {
                    const PcsParams p{r, phi, k};
                    const SqueezingReport res = pcs_resonance_variances(p, tau);
                    const MomentState tr = propagate_moments(pcs_initial_moments(p), m);
                    d_res = std::max({d_res, std::abs(res.var_x - tr.cov(0, 0)),
                                      std::abs(res.var_y - tr.cov(1, 1)),
                                      std::abs(res.mean_kz - tr.mean(2))});
                    const SqueezingReport gen = pcs_variances(p, co);
                    d_yz = std::max({d_yz, std::abs(gen.var_y - res.var_y),
                                     std::abs(gen.mean_kz - res.mean_kz)});
                    d_x = std::max(d_x, std::abs(gen.var_x - res.var_x));
                }
            }
        }
        rows.push_back(agree_row("pcs_resonance", "resonance variances vs transport, 2 k x 5 tau x 5 (r,phi)", d_res, 1e-8));
        rows.push_back(agree_row("pcs_resonance_vs_general_yz", "general closed form at resonance matches the resonance form on var_y and mean_kz", d_yz, 1e-9));
        rows.push_back(flag_row("pcs_resonance_vs_general_x", "general closed-form var_x disagrees with its own resonance limit", d_x, 1e3, 5e4));
    }

    // --- PCS resonance f_y asymptote --------------------------------------
    {
        const std::vector<std::pair<double, double>> rphis = {
            {1.0, 1.0}, {2.0, 0.0}, {std::log(2.0), 0.0}};
        double dev = 0.0;
        const CouplingParams c{1.0, 1.0};
        const double tau = 1000.0;
        const AdjointMatrix m = adjoint_matrix(c, tau);
        for (const auto& [r, phi] : rphis) {
            const PcsParams p{r, phi, 0.5};
            const SqueezingReport tr = oracle_report(propagate_moments(pcs_initial_moments(p), m));
            dev = std::max(dev, std::abs(tr.f_y - pcs_fy_asymptote(p)));
        }
        rows.push_back(agree_row("pcs_fy_asymptote", "large-tau resonance f_y vs 2*chi-1 at tau=1000", dev, 1e-5));

        const double root = bisect(0.5, 1.0, [](double r) {
            return pcs_fy_asymptote({r, 0.0, 0.5});
        });
        rows.push_back(agree_row("pcs_fy_asymptote_root", "asymptote root in r at phi=0 vs ln 2", std::abs(root - std::log(2.0)), 1e-9));
    }

    // --- BGCS general-t closed form vs transport --------------------------
    {
        double d_t0 = 0.0, d_vx = 0.0, d_vx_axis = 0.0, d_vy = 0.0, d_kz = 0.0;
        const PropagatorCoefficients c0 = coefficients({1.0, 0.5}, 0.0);
        for (const auto& set : coefficient_sets()) {
            const PropagatorCoefficients co = coefficients(set.c, set.t);
            const AdjointMatrix m = adjoint_matrix(co);
            for (double z : bgcs_zmags()) {
                for (double phi : bgcs_phis()) {
                    for (double k : bgcs_ks()) {
                        const BgcsParams p{z, phi, k};
                        const SqueezingReport lit = bgcs_variances(p, co);
                        const MomentState tr = propagate_moments(bgcs_initial_moments(p), m);
                        const double dvx = std::abs(lit.var_x - tr.cov(0, 0));
                        d_vx = std::max(d_vx, dvx);
                        if (std::abs(std::sin(phi)) < 1e-15)
                            d_vx_axis = std::max(d_vx_axis, dvx);
                        d_vy = std::max(d_vy, std::abs(lit.var_y - tr.cov(1, 1)));
                        d_kz = std::max(d_kz, std::abs(lit.mean_kz - tr.mean(2)));
                    }
                }
            }
        }
        for (double z : bgcs_zmags()) {
            for (double phi : bgcs_phis()) {
                for (double k : bgcs_ks()) {
                    const BgcsParams p{z, phi, k};
                    const SqueezingReport lit = bgcs_variances(p, c0);
                    const MomentState m0 = bgcs_initial_moments(p);
                    d_t0 = std::max({d_t0, std::abs(lit.var_x - m0.cov(0, 0)),
                                     std::abs(lit.var_y - m0.cov(1, 1)),
                                     std::abs(lit.mean_kz - m0.mean(2))});
                }
            }
        }
        rows.push_back(agree_row("bgcs_general_t0", "closed-form variances reduce to the initial moments at t=0 (45 samples)", d_t0, 1e-10));
        rows.push_back(agree_row("bgcs_general_kz", "closed-form mean_kz vs transport, 4 coefficient sets x 45 samples", d_kz, 1e-9));
        rows.push_back(agree_row("bgcs_general_var_x_axis", "closed-form var_x vs transport restricted to sin(phi)=0", d_vx_axis, 1e-9));
        rows.push_back(flag_row("bgcs_general_var_x", "closed-form var_x vs transport at generic phi", d_vx, 1.0, 500.0));
        rows.push_back(flag_row("bgcs_general_var_y", "closed-form var_y vs transport for t>0", d_vy, 1.0, 2000.0));
    }

    // --- BGCS pinned single point -----------------------------------------
    {
        const BgcsParams p{2.0, 1.0, 0.5};
        const CouplingParams c{3.0, 1.0};
        const SqueezingReport lit = bgcs_variances(p, coefficients(c, 1.0));
        const MomentState tr = propagate_moments(bgcs_initial_moments(p), adjoint_matrix(c, 1.0));
        rows.push_back(agree_row("bgcs_point_kz", "pinned point (zmag=2, phi=1, k=1/2, omega=3, lambda=1, t=1): mean_kz", std::abs(lit.mean_kz - tr.mean(2)), 1e-10));
        rows.push_back(flag_row("bgcs_point_var_x", "pinned point: closed-form var_x deviation", std::abs(lit.var_x - tr.cov(0, 0)), 0.1, 0.2));
        rows.push_back(flag_row("bgcs_point_var_y", "pinned point: closed-form var_y deviation", std::abs(lit.var_y - tr.cov(1, 1)), 0.5, 1.0));
    }

    // --- BGCS weak-intensity form ------------------------------------------
    {
        const PropagatorCoefficients co = coefficients({3.0, 1.0}, 1.0);
        const AdjointMatrix m = adjoint_matrix(co);
        double d_lit = 0.0, d_orc = 0.0;
        for (double phi : bgcs_phis()) {
            for (double k : bgcs_ks()) {
                const BgcsParams p{1e-3, phi, k};
                const SqueezingReport weak = bgcs_weak_intensity_variances(p, co);
                const SqueezingReport gen = bgcs_variances(p, co);
                d_lit = std::max({d_lit, std::abs(weak.var_x - gen.var_x),
                                  std::abs(weak.var_y - gen.var_y),
                                  std::abs(weak.mean_kz - gen.mean_kz)});
                const MomentState tr = propagate_moments(bgcs_initial_moments(p), m);
                d_orc = std::max({d_orc, std::abs(weak.var_x - tr.cov(0, 0)),
                                  std::abs(weak.var_y - tr.cov(1, 1)),
                                  std::abs(weak.mean_kz - tr.mean(2))});
            }
        }
        rows.push_back(agree_row("bgcs_weak_vs_general", "weak-intensity form vs general closed form at zmag=1e-3 (O(zmag^4) remainder)", d_lit, 1e-9));
        rows.push_back(flag_row("bgcs_weak_vs_oracle", "weak-intensity form vs transport at zmag=1e-3 (inherits the general var defects)", d_orc, 1e-5, 1e-2));
    }

    // --- BGCS strong-intensity form -----------------------------------------
    {
        const PropagatorCoefficients co = coefficients({3.0, 1.0}, kPi / 2.0);
        const auto strong_f = [&](double k, double z, double phi) {
            return bgcs_strong_intensity_variances({z, phi, k}, co);
        };
        const auto general_f = [&](double k, double z, double phi) {
            return bgcs_variances({z, phi, k}, co);
        };
        double d_quarter = 0.0, d_half = 0.0;
        for (double z : {100.0, 200.0, 400.0}) {
            for (int i = 0; i < 16; ++i) {
                const double phi = i * (2.0 * kPi / 16.0);
                for (double k : {0.25, 0.5}) {
                    const SqueezingReport s = strong_f(k, z, phi);
                    const SqueezingReport g = general_f(k, z, phi);
                    const double dev = std::max(std::abs(s.f_x - g.f_x), std::abs(s.f_y - g.f_y));
                    (k == 0.25 ? d_quarter : d_half) = std::max(k == 0.25 ? d_quarter : d_half, dev);
                }
            }
        }
        rows.push_back(agree_row("bgcs_strong_quarter", "strong-intensity factors vs general at k=1/4, zmag in {100,200,400}", d_quarter, 1e-9));
        rows.push_back(flag_row("bgcs_strong_half", "strong-intensity factors vs general at k=1/2 (printed residual bracket matches k=1/4 only)", d_half, 0.4, 2.0));

        const auto zinv = [&](const std::vector<double>& zs) {
            double worst = 0.0;
            for (double k : {0.25, 0.5}) {
                for (int i = 0; i < 16; ++i) {
                    const double phi = i * (2.0 * kPi / 16.0);
                    for (size_t a = 0; a + 1 < zs.size(); ++a) {
                        const SqueezingReport s1 = strong_f(k, zs[a], phi);
                        const SqueezingReport s2 = strong_f(k, zs[a + 1], phi);
                        worst = std::max({worst, std::abs(s1.f_x - s2.f_x),
                                          std::abs(s1.f_y - s2.f_y)});
                    }
                }
            }
            return worst;
        };
        rows.push_back(agree_row("bgcs_strong_zinv_limit", "strong-path factor zmag-independence across {1e4, 2e4, 4e4}", zinv({1e4, 2e4, 4e4}), 1e-3));
        rows.push_back(flag_row("bgcs_strong_zinv_moderate", "same across {100, 200, 400}: O(1/zmag) drift still visible", zinv({100.0, 200.0, 400.0}), 5e-3, 5e-2));
    }

    // --- BGCS zero-intensity factors -----------------------------------------
    {
        double d_lit = 0.0, d_orc = 0.0;
        for (const auto& set : coefficient_sets()) {
            const auto [zx, zy] = bgcs_zero_intensity_factors(set.c, set.t);
            const PropagatorCoefficients co = coefficients(set.c, set.t);
            for (double phi : {0.0, 1.0}) {
                const SqueezingReport lit = bgcs_variances({1e-8, phi, 0.5}, co);
                d_lit = std::max({d_lit, std::abs(zx - lit.f_x), std::abs(zy - lit.f_y)});
            }
            const SqueezingReport orc = bgcs_factors({0.0, 0.0, 0.5}, set.c, set.t, EvalPath::oracle);
            d_orc = std::max({d_orc, std::abs(zx - orc.f_x), std::abs(zy - orc.f_y)});
        }
        rows.push_back(agree_row("bgcs_zero_vs_general", "zero-intensity factors vs general closed form at zmag=1e-8", d_lit, 1e-6));
        rows.push_back(agree_row("bgcs_zero_vs_oracle", "zero-intensity factors vs transported vacuum factors", d_orc, 1e-12));

        // Halved resonance f_y variant (the printed resonance specialization).
        const double tau = 1.2;
        const auto [fx, fy] = bgcs_zero_intensity_factors({1.0, 1.0}, tau);
        (void)fx;
        const double fy_halved = tau * tau / (1.0 + 2.0 * tau * tau);
        rows.push_back(flag_row("bgcs_zero_res_fy_variant", "implemented resonance f_y vs the halved printed variant at tau=1.2", std::abs(fy - fy_halved), 0.3, 0.5));

        const double root = bisect(0.5, 1.0, [](double tau_) {
            return bgcs_zero_intensity_factors({1.0, 1.0}, tau_).first;
        });
        rows.push_back(agree_row("bgcs_zero_res_fx_root", "resonance f_x root in tau vs 1/sqrt(2)", std::abs(root - 1.0 / std::sqrt(2.0)), 1e-9));
    }

    // --- BGCS hyperbolic squeeze window -----------------------------------
    {
        const CouplingParams c{1.0, 10.0};
        const double gamma = effective_rate(c);
        const double tau_max = bgcs_squeeze_window_tau_max(c);
        const double fx_at = bgcs_zero_intensity_factors(c, tau_max / gamma).first;
        rows.push_back(agree_row("bgcs_window_boundary", "zero-intensity f_x vanishes at tau_max = asinh(gamma/(sqrt2 omega)) for omega=1, lambda=10", std::abs(fx_at), 1e-10));
    }

    // --- Figure-7 frozen profile minimum -----------------------------------
    {
        const ProfileData prof =
            bgcs_phase_profile({3.0, 1.0}, 200.0, 0.5, kPi / 2.0, 720, EvalPath::oracle, 0);
        double mn = 0.0;
        for (size_t i = 0; i < prof.phi.size(); ++i)
            mn = std::min({mn, prof.f_x[i], prof.f_y[i]});
        rows.push_back(agree_row("bgcs_profile_min", "oracle 720-point strong-intensity phase profile: frozen minimum factor", std::abs(mn - (-0.487494335)), 1e-6));
    }

    rep.ok = std::all_of(rows.begin(), rows.end(), [](const ValidationRow& r) { return r.pass; });
    return rep;
}

}  // namespace su11
