#include <su11/scan.hpp>

#include <cmath>
#include <limits>
#include <string>

#include <su11/bgcs.hpp>
#include <su11/parallel.hpp>
#include <su11/pcs.hpp>

namespace su11 {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

SqueezingReport eval_point(const GridSpec& g, double a1, double a2, const CouplingParams& c,
                           double t, double k, EvalPath path) {
    if (g.family == StateFamily::pcs) return pcs_factors({a1, a2, k}, c, t, path);
    return bgcs_factors({a1, a2, k}, c, t, path);
}

}  // namespace

int8_t sign_mask(double f) {
    if (f < -kMaskTolerance) return -1;
    if (f > kMaskTolerance) return 1;
    return 0;
}

RegionMap scan_plane(const GridSpec& g, EvalPath path, int threads) {
    validate(g);
    const CouplingParams c = coupling_of(g);
    const double t = resolve_time(c, g.time_value, g.time_unit);
    const double k = fixed_param(g, "k");
    const int n1 = g.axis1.steps, n2 = g.axis2.steps;
    const int n = n1 * n2;

    RegionMap map;
    map.grid = g;
    map.path = path;
    map.f_x.assign(n, 0.0);
    map.f_y.assign(n, 0.0);
    map.mask_x.assign(n, 0);
    map.mask_y.assign(n, 0);
    map.error_code.assign(n, 0);

    parallel_for(n, threads, [&](int idx) {
        const int i1 = idx / n2, i2 = idx % n2;
        const double a1 = axis_value(g.axis1, i1);
        const double a2 = axis_value(g.axis2, i2);
        try {
            const SqueezingReport r = eval_point(g, a1, a2, c, t, k, path);
            map.f_x[idx] = r.f_x;
            map.f_y[idx] = r.f_y;
        } catch (const Error& e) {
            map.f_x[idx] = std::numeric_limits<double>::quiet_NaN();
            map.f_y[idx] = std::numeric_limits<double>::quiet_NaN();
            map.error_code[idx] = static_cast<int>(e.code());
        }
    });
    for (int idx = 0; idx < n; ++idx) {
        if (map.error_code[idx] == 0) {
            map.mask_x[idx] = sign_mask(map.f_x[idx]);
            map.mask_y[idx] = sign_mask(map.f_y[idx]);
        }
    }

    std::vector<double> xs(n1), ys(n2);
    for (int i = 0; i < n1; ++i) xs[i] = axis_value(g.axis1, i);
    for (int j = 0; j < n2; ++j) ys[j] = axis_value(g.axis2, j);
    map.contours_x = zero_contours(map.f_x, xs, ys);
    map.contours_y = zero_contours(map.f_y, xs, ys);
    return map;
}

ProfileData bgcs_phase_profile(const CouplingParams& c, double zmag, double k, double t,
                               int n_points, EvalPath path, int threads) {
    validate(c);
    if (n_points < 2) throw DomainError("profile needs at least 2 points");
    ProfileData p;
    p.coupling = c;
    p.zmag = zmag;
    p.k = k;
    p.t = t;
    p.path = path;
    p.phi.resize(n_points);
    p.f_x.assign(n_points, 0.0);
    p.f_y.assign(n_points, 0.0);
    p.error_code.assign(n_points, 0);
    for (int i = 0; i < n_points; ++i) p.phi[i] = i * (kTwoPi / n_points);
    parallel_for(n_points, threads, [&](int i) {
        try {
            const SqueezingReport r = bgcs_factors({zmag, p.phi[i], k}, c, t, path);
            p.f_x[i] = r.f_x;
            p.f_y[i] = r.f_y;
        } catch (const Error& e) {
            p.f_x[i] = std::numeric_limits<double>::quiet_NaN();
            p.f_y[i] = std::numeric_limits<double>::quiet_NaN();
            p.error_code[i] = static_cast<int>(e.code());
        }
    });
    return p;
}

namespace {

GridSpec pcs_grid(double omega, double lambda, double time_value, TimeUnit unit) {
    GridSpec g;
    g.family = StateFamily::pcs;
    g.axis1 = {"r", -3.0, 3.0, 63};
    g.axis2 = {"phi", 0.0, kTwoPi, 64};
    g.fixed = {{"omega", omega}, {"lambda", lambda}, {"k", 0.5}};
    g.time_value = time_value;
    g.time_unit = unit;
    return g;
}

GridSpec bgcs_grid(double omega, double lambda, double time_value, TimeUnit unit) {
    GridSpec g;
    g.family = StateFamily::bgcs;
    g.axis1 = {"zmag", 0.0, 2.0, 63};
    g.axis2 = {"phi", 0.0, kTwoPi, 64};
    g.fixed = {{"omega", omega}, {"lambda", lambda}, {"k", 0.5}};
    g.time_value = time_value;
    g.time_unit = unit;
    return g;
}

}  // namespace

GridSpec figure_grid(int number) {
    switch (number) {
        case 1: return pcs_grid(1.0, 0.5, 0.0, TimeUnit::t);
        case 2: return pcs_grid(3.0, 1.0, kPi / 2.0, TimeUnit::t);
        case 3: return pcs_grid(10.0, 1.0, kPi / 2.0, TimeUnit::t);
        case 4: return pcs_grid(1.0, 2.0, kPi / 4.0, TimeUnit::t);
        case 5: return pcs_grid(1.0, 1.0, 3.0 * kPi, TimeUnit::tw);
        case 6: return bgcs_grid(3.0, 1.0, 1.0, TimeUnit::t);
        case 8: return bgcs_grid(1.0, 10.0, kPi / 20.0, TimeUnit::tw);
        case 9: return bgcs_grid(1.0, 1.0, kPi / 6.0, TimeUnit::t);
        default:
            throw DomainError("figure_grid: figure " + std::to_string(number) +
                              " has no plane grid (valid: 1-6, 8, 9)");
    }
}

FigureResult figure(int number, std::optional<EvalPath> path, int threads) {
    const EvalPath p = path.value_or(EvalPath::oracle);
    FigureResult res;
    res.number = number;
    if (number == 7) {
        // Phase profile at fixed strong intensity.
        res.profile = bgcs_phase_profile({3.0, 1.0}, 200.0, 0.5, kPi / 2.0, 720, p, threads);
        return res;
    }
    res.map = scan_plane(figure_grid(number), p, threads);
    return res;
}

}  // namespace su11
