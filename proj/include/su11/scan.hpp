#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <su11/contour.hpp>
#include <su11/grid.hpp>
#include <su11/report.hpp>

namespace su11 {

// Sign mask per grid point: -1 squeezed (f < -1e-9), 0 boundary
// (|f| <= 1e-9), +1 unsqueezed (f > 1e-9).
inline constexpr double kMaskTolerance = 1e-9;

int8_t sign_mask(double f);

// Row-major with axis1 index major: index = i1 * axis2.steps + i2.
struct RegionMap {
    GridSpec grid;
    std::vector<double> f_x, f_y;
    std::vector<int8_t> mask_x, mask_y;
    std::vector<int> error_code;  // ErrorCode as int; f set to NaN on error
    std::vector<Polyline> contours_x, contours_y;
    EvalPath path = EvalPath::oracle;
};

// Evaluates the squeezing factors over the grid with per-point error
// isolation, builds masks and zero contours.  Deterministic for any thread
// count.
RegionMap scan_plane(const GridSpec& g, EvalPath path, int threads = 0);

// Fixed-amplitude phase profile (figure 7): phi sampled half-open on
// [0, 2pi).
struct ProfileData {
    CouplingParams coupling;
    double zmag = 0.0, k = 0.5, t = 0.0;
    std::vector<double> phi, f_x, f_y;
    std::vector<int> error_code;
    EvalPath path = EvalPath::oracle;
};

ProfileData bgcs_phase_profile(const CouplingParams& c, double zmag, double k, double t,
                               int n_points, EvalPath path, int threads = 0);

struct FigureResult {
    int number = 0;
    std::optional<RegionMap> map;       // figures 1-6, 8, 9
    std::optional<ProfileData> profile;  // figure 7
};

// Preset figure scans (1-9).  Defaults to the oracle path; path can be
// overridden.  Throws DomainError for unknown figure numbers.
FigureResult figure(int number, std::optional<EvalPath> path = std::nullopt,
                    int threads = 0);

// Preset grid (or profile parameters) for a figure, for inspection/tests.
GridSpec figure_grid(int number);

}  // namespace su11
