#pragma once

#include <array>
#include <vector>

namespace su11 {

using ContourPoint = std::array<double, 2>;  // (axis1 value, axis2 value)

struct Polyline {
    std::vector<ContourPoint> pts;
};

// Zero-level contours of a scalar field sampled on a rectangular grid
// (marching squares, linear interpolation along sign-changing edges).
// field is row-major with axis1 index major: field[i*n2 + j] at
// (xs[i], ys[j]).  Exact zeros count as the non-negative side; saddle cells
// are resolved by the sign of the cell-center average; cells touching a NaN
// sample are skipped.  Segments sharing endpoints are stitched into
// polylines deterministically.
std::vector<Polyline> zero_contours(const std::vector<double>& field,
                                    const std::vector<double>& xs,
                                    const std::vector<double>& ys);

}  // namespace su11
