#include <doctest.h>

#include <cmath>
#include <utility>
#include <vector>

#include <su11/pcs.hpp>

#include "frozen.hpp"

using namespace su11;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

const std::vector<std::pair<double, double>> kStates = {
    {0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {-1.0, kPi / 2.0}, {0.6, 2.0}};
}  // namespace

TEST_CASE("pcs validation") {
    CHECK_THROWS_AS(validate(PcsParams{1.0, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(validate(PcsParams{1.0, 0.0, -0.5}), DomainError);
    CHECK_NOTHROW(validate(PcsParams{-2.0, 7.0, 0.25}));
}

TEST_CASE("pcs initial moments") {
    const PcsParams p{1.0, 0.0, 0.5};
    const MomentState m = pcs_initial_moments(p);
    const double sh = std::sinh(1.0), ch = std::cosh(1.0);
    CHECK(m.mean(0) == doctest::Approx(-0.5 * sh).epsilon(1e-14));
    CHECK(m.mean(1) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(m.mean(2) == doctest::Approx(frozen::kKCoshOne).epsilon(1e-13));
    CHECK(m.cov(0, 0) == doctest::Approx(0.25 * (1.0 + sh * sh)).epsilon(1e-14));
    CHECK(m.cov(1, 1) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(m.cov(2, 2) == doctest::Approx(0.25 * sh * sh).epsilon(1e-14));
    CHECK(m.cov(0, 2) == doctest::Approx(-0.125 * std::sinh(2.0)).epsilon(1e-14));
    CHECK(m.cov(0, 1) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(m.cov(1, 2) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK((m.cov - m.cov.transpose()).cwiseAbs().maxCoeff() == 0.0);

    // Linear k scaling of every moment.
    const MomentState m2 = pcs_initial_moments({1.0, 0.0, 2.0});
    CHECK((m2.mean - 4.0 * m.mean).cwiseAbs().maxCoeff() <= 1e-13);
    CHECK((m2.cov - 4.0 * m.cov).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("pcs closed-form and oracle spot values") {
    const PcsParams p{1.0, 1.0, 0.5};
    const CouplingParams c{3.0, 1.0};
    const double t = kPi / 2.0;

    const SqueezingReport lit = pcs_factors(p, c, t, EvalPath::closed_form);
    CHECK(lit.var_x == doctest::Approx(frozen::kPcsLitVarX).epsilon(1e-12));
    CHECK(lit.var_y == doctest::Approx(frozen::kPcsLitVarY).epsilon(1e-12));
    CHECK(lit.mean_kz == doctest::Approx(frozen::kPcsLitKz).epsilon(1e-12));
    CHECK(lit.path == EvalPath::closed_form);

    const SqueezingReport orc = pcs_factors(p, c, t, EvalPath::oracle);
    CHECK(orc.var_x == doctest::Approx(frozen::kPcsOrcVarX).epsilon(1e-12));
    CHECK(orc.var_y == doctest::Approx(frozen::kPcsLitVarY).epsilon(1e-12));
    CHECK(orc.mean_kz == doctest::Approx(frozen::kPcsLitKz).epsilon(1e-12));
    CHECK(orc.path == EvalPath::oracle);

    // var_y and mean_kz coincide across paths; var_x does not at sin phi != 0.
    CHECK(std::abs(lit.var_x - orc.var_x) > 0.05);
}

TEST_CASE("pcs state symmetries at t = 0") {
    for (double r : {0.3, 1.0, 2.0}) {
        for (double phi : {0.2, 0.9, 2.5}) {
            // (-r, phi) and (r, phi + pi) label the same state.
            const MomentState a = pcs_initial_moments({-r, phi, 0.5});
            const MomentState b = pcs_initial_moments({r, phi + kPi, 0.5});
            CHECK((a.mean - b.mean).cwiseAbs().maxCoeff() <= 1e-12);
            CHECK((a.cov - b.cov).cwiseAbs().maxCoeff() <= 1e-12);

            for (EvalPath path : {EvalPath::closed_form, EvalPath::oracle}) {
                // phi -> -phi mirrors the y quadrature: factors unchanged.
                const SqueezingReport f0 = pcs_factors({r, phi, 0.5}, {1.0, 0.0}, 0.0, path);
                const SqueezingReport fm = pcs_factors({r, -phi, 0.5}, {1.0, 0.0}, 0.0, path);
                CHECK(f0.f_x == doctest::Approx(fm.f_x).epsilon(1e-12));
                CHECK(f0.f_y == doctest::Approx(fm.f_y).epsilon(1e-12));

                // phi -> pi/2 - phi exchanges the quadratures.
                const SqueezingReport fx =
                    pcs_factors({r, kPi / 2.0 - phi, 0.5}, {1.0, 0.0}, 0.0, path);
                CHECK(f0.f_x == doctest::Approx(fx.f_y).epsilon(1e-12));
                CHECK(f0.f_y == doctest::Approx(fx.f_x).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("pcs squeezing factors are independent of k on both paths") {
    const CouplingParams c{3.0, 1.0};
    const double t = kPi / 2.0;
    for (EvalPath path : {EvalPath::closed_form, EvalPath::oracle}) {
        const SqueezingReport a = pcs_factors({1.0, 1.0, 0.25}, c, t, path);
        const SqueezingReport b = pcs_factors({1.0, 1.0, 2.0}, c, t, path);
        CHECK(a.f_x == doctest::Approx(b.f_x).epsilon(1e-12));
        CHECK(a.f_y == doctest::Approx(b.f_y).epsilon(1e-12));
        // Variances themselves scale linearly in k.
        CHECK(8.0 * a.var_x == doctest::Approx(b.var_x).epsilon(1e-12));
    }
}

TEST_CASE("pcs resonance variances equal exact transport") {
    const CouplingParams c{1.0, 1.0};
    for (const auto& [r, phi] : kStates) {
        for (double k : {0.5, 1.0}) {
            for (double tau : {0.0, 0.5, 1.2, 2.0, 3.0 * kPi}) {
                const SqueezingReport res = pcs_resonance_variances({r, phi, k}, tau);
                const SqueezingReport orc = pcs_factors({r, phi, k}, c, tau, EvalPath::oracle);
                CHECK(res.var_x == doctest::Approx(orc.var_x).epsilon(1e-10));
                CHECK(res.var_y == doctest::Approx(orc.var_y).epsilon(1e-10));
                CHECK(res.mean_kz == doctest::Approx(orc.mean_kz).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("pcs general closed form vs resonance form") {
    // var_y and mean_kz lines coincide at resonance for every phi; the
    // var_x line coincides only on the sin phi = 0 axis.
    const CouplingParams c{1.0, 1.0};
    for (double tau : {0.4, 1.2, 2.7}) {
        const PropagatorCoefficients pc = coefficients(c, tau);
        for (const auto& [r, phi] : kStates) {
            const SqueezingReport gen = pcs_variances({r, phi, 0.5}, pc);
            const SqueezingReport res = pcs_resonance_variances({r, phi, 0.5}, tau);
            CHECK(gen.var_y == doctest::Approx(res.var_y).epsilon(1e-10));
            CHECK(gen.mean_kz == doctest::Approx(res.mean_kz).epsilon(1e-10));
        }
        const SqueezingReport gen0 = pcs_variances({1.3, 0.0, 0.5}, pc);
        const SqueezingReport res0 = pcs_resonance_variances({1.3, 0.0, 0.5}, tau);
        CHECK(gen0.var_x == doctest::Approx(res0.var_x).epsilon(1e-10));
        const SqueezingReport genPi = pcs_variances({1.3, kPi, 0.5}, pc);
        const SqueezingReport resPi = pcs_resonance_variances({1.3, kPi, 0.5}, tau);
        CHECK(genPi.var_x == doctest::Approx(resPi.var_x).epsilon(1e-10));
    }
}

TEST_CASE("pcs initial factors share the oracle's sign and zero set, not its scale") {
    for (double r : {0.5, 1.0, 2.0}) {
        const double phiz = std::acos(1.0 / std::sqrt(1.0 + std::cosh(r)));
        CHECK(std::abs(pcs_initial_factors({r, phiz, 0.5}).first) <= 1e-12);
        const SqueezingReport orc = pcs_factors({r, phiz, 0.5}, {1.0, 0.0}, 0.0, EvalPath::oracle);
        CHECK(std::abs(orc.f_x) <= 1e-12);

        for (int i = 0; i < 16; ++i) {
            const double phi = i * (2.0 * kPi / 16.0);
            const auto [lx, ly] = pcs_initial_factors({r, phi, 0.5});
            const SqueezingReport o = pcs_factors({r, phi, 0.5}, {1.0, 0.0}, 0.0, EvalPath::oracle);
            if (std::abs(o.f_x) > 1e-9) CHECK(lx * o.f_x > 0.0);
            if (std::abs(o.f_y) > 1e-9) CHECK(ly * o.f_y > 0.0);
        }
    }
    // The printed factor magnitude differs from the oracle away from the zero set.
    const auto [lx, ly] = pcs_initial_factors({1.0, 0.0, 0.5});
    const SqueezingReport o = pcs_factors({1.0, 0.0, 0.5}, {1.0, 0.0}, 0.0, EvalPath::oracle);
    CHECK(std::abs(lx - o.f_x) > 0.05);
    (void)ly;
}

TEST_CASE("pcs squeeze boundary window") {
    const auto [lo0, hi0] = pcs_squeeze_boundary(0.0);
    CHECK(lo0 == doctest::Approx(kPi / 4.0).epsilon(1e-14));
    CHECK(hi0 == doctest::Approx(3.0 * kPi / 4.0).epsilon(1e-14));
    for (double r : {0.5, 1.5, 3.0}) {
        const auto [lo, hi] = pcs_squeeze_boundary(r);
        CHECK(lo == doctest::Approx(std::acos(1.0 / std::sqrt(std::cosh(2.0 * r) + 1.0)))
                        .epsilon(1e-13));
        CHECK(lo + hi == doctest::Approx(kPi).epsilon(1e-13));
        CHECK(lo > kPi / 4.0);
        CHECK(lo < kPi / 2.0);
    }
}

TEST_CASE("pcs resonance f_y approaches its large-tau asymptote") {
    CHECK(std::abs(pcs_fy_asymptote({frozen::kLn2, 0.0, 0.5})) <= 1e-12);
    for (const auto& [r, phi] : kStates) {
        const PcsParams p{r, phi, 0.5};
        const double asym = 2.0 * (std::cosh(r) - std::sinh(r) * std::cos(phi)) - 1.0;
        CHECK(pcs_fy_asymptote(p) == doctest::Approx(asym).epsilon(1e-14));
        CHECK(std::abs(pcs_resonance_variances(p, 1000.0).f_y - asym) <= 1e-5);
    }
}

TEST_CASE("pcs resonance f_y root at phi = 0, tau = 3 pi") {
    const double root = frozen::kFig5FyRoot;
    CHECK(std::abs(pcs_factors({root, 0.0, 0.5}, {1.0, 1.0}, 3.0 * kPi, EvalPath::oracle).f_y) <=
          1e-9);
    CHECK(pcs_factors({1.0, 0.0, 0.5}, {1.0, 1.0}, 3.0 * kPi, EvalPath::oracle).f_y ==
          doctest::Approx(-0.266264).epsilon(1e-4));
    CHECK(root < frozen::kLn2);
}

TEST_CASE("pcs weak-coupling drift bound on the moderate-amplitude grid") {
    std::vector<double> rs, phis;
    for (int i = -10; i <= 10; ++i) rs.push_back(i * (6.0 / 62.0));
    for (int i = 0; i < 64; ++i) phis.push_back(i * (2.0 * kPi / 64.0));
    const double dev = pcs_weak_coupling_check({10.0, 1.0}, kPi / 2.0, 0.5, rs, phis);
    CHECK(dev < 0.35);
    CHECK(dev > 0.01);

    CHECK_THROWS_AS(pcs_weak_coupling_check({1.0, 0.5}, 1.0, 0.5, rs, phis), DomainError);
    CHECK_THROWS_AS(pcs_weak_coupling_check({10.0, 1.0}, 1.0, 0.5, {}, phis), DomainError);
}

TEST_CASE("pcs strong-coupling growth exponents") {
    const CouplingParams c{1.0, 2.0};
    const double gamma = effective_rate(c);
    const StrongCouplingFit fit =
        pcs_strong_coupling_exponents({0.8, 0.9, 0.5}, c, 4.0 / gamma, 6.0 / gamma, 25);
    CHECK(fit.slope_var == doctest::Approx(4.0).epsilon(0.025));
    CHECK(fit.slope_kz == doctest::Approx(2.0).epsilon(0.05));

    CHECK_THROWS_AS(
        pcs_strong_coupling_exponents({0.8, 0.9, 0.5}, c, 1.0 / gamma, 6.0 / gamma, 25),
        DomainError);
    CHECK_THROWS_AS(
        pcs_strong_coupling_exponents({0.8, 0.9, 0.5}, {1.0, 0.5}, 4.0, 6.0, 25),
        DomainError);
    CHECK_THROWS_AS(
        pcs_strong_coupling_exponents({0.8, 0.9, 0.5}, c, 4.0 / gamma, 400.0 / gamma, 25),
        OverflowError);
}

TEST_CASE("pcs oracle factors never squeeze both quadratures") {
    const CouplingParams couplings[] = {{1.0, 0.5}, {3.0, 1.0}, {1.0, 1.0}, {1.0, 2.0}};
    for (const auto& c : couplings) {
        for (const auto& [r, phi] : kStates) {
            for (double t0 : {0.0, 0.6, 1.5}) {
                const double t = classify_regime(c) == Regime::hyperbolic
                                     ? std::min(t0, 2.0 / effective_rate(c))
                                     : t0;
                const SqueezingReport f = pcs_factors({r, phi, 0.5}, c, t, EvalPath::oracle);
                CHECK(f.f_x >= -1.0 - 1e-9);
                CHECK(f.f_y >= -1.0 - 1e-9);
                CHECK((1.0 + f.f_x) * (1.0 + f.f_y) >= 1.0 - 1e-9);
            }
        }
    }
}
