#include <su11/contour.hpp>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <unordered_map>

namespace su11 {

namespace {

struct PointKey {
    double x, y;
    bool operator==(const PointKey& o) const { return x == o.x && y == o.y; }
};

struct PointKeyHash {
    size_t operator()(const PointKey& p) const {
        uint64_t a, b;
        std::memcpy(&a, &p.x, 8);
        std::memcpy(&b, &p.y, 8);
        return std::hash<uint64_t>()(a * 0x9e3779b97f4a7c15ULL ^ b);
    }
};

struct Segment {
    ContourPoint a, b;
};

// Crossing on the edge between (p0, v0) and (p1, v1); signs must differ.
// Shared edges of adjacent cells reproduce the same point bit-for-bit.
ContourPoint edge_point(const ContourPoint& p0, double v0, const ContourPoint& p1, double v1) {
    const double t = v0 / (v0 - v1);
    return {p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1])};
}

}  // namespace

std::vector<Polyline> zero_contours(const std::vector<double>& field,
                                    const std::vector<double>& xs,
                                    const std::vector<double>& ys) {
    const int n1 = static_cast<int>(xs.size());
    const int n2 = static_cast<int>(ys.size());
    const auto at = [&](int i, int j) { return field[static_cast<size_t>(i) * n2 + j]; };
    const auto pos = [](double v) { return v >= 0.0; };  // exact zeros: non-negative side

    std::vector<Segment> segments;
    for (int i = 0; i + 1 < n1; ++i) {
        for (int j = 0; j + 1 < n2; ++j) {
            const double v00 = at(i, j), v10 = at(i + 1, j);
            const double v01 = at(i, j + 1), v11 = at(i + 1, j + 1);
            if (std::isnan(v00) || std::isnan(v10) || std::isnan(v01) || std::isnan(v11))
                continue;
            const ContourPoint p00{xs[i], ys[j]}, p10{xs[i + 1], ys[j]};
            const ContourPoint p01{xs[i], ys[j + 1]}, p11{xs[i + 1], ys[j + 1]};

            // Edge order: 0 = (00,10), 1 = (10,11), 2 = (01,11), 3 = (00,01).
            ContourPoint cross[4];
            bool has[4] = {false, false, false, false};
            if (pos(v00) != pos(v10)) { cross[0] = edge_point(p00, v00, p10, v10); has[0] = true; }
            if (pos(v10) != pos(v11)) { cross[1] = edge_point(p10, v10, p11, v11); has[1] = true; }
            if (pos(v01) != pos(v11)) { cross[2] = edge_point(p01, v01, p11, v11); has[2] = true; }
            if (pos(v00) != pos(v01)) { cross[3] = edge_point(p00, v00, p01, v01); has[3] = true; }

            const int count = has[0] + has[1] + has[2] + has[3];
            const auto emit = [&](int ea, int eb) {
                if (cross[ea] == cross[eb]) return;  // degenerate corner touch
                segments.push_back({cross[ea], cross[eb]});
            };
            if (count == 2) {
                int e[2], idx = 0;
                for (int e4 = 0; e4 < 4; ++e4)
                    if (has[e4]) e[idx++] = e4;
                emit(e[0], e[1]);
            } else if (count == 4) {
                // Saddle: pair edges around the corners whose sign differs
                // from the cell-center average.
                const double center = 0.25 * (v00 + v10 + v01 + v11);
                const bool diag00 = pos(v00);  // cases are 00/11 vs 10/01 alternating
                if (pos(center) == diag00) {
                    emit(0, 1);  // around corner 10
                    emit(2, 3);  // around corner 01
                } else {
                    emit(0, 3);  // around corner 00
                    emit(1, 2);  // around corner 11
                }
            }
        }
    }

    // Stitch segments sharing endpoints into polylines; traversal follows
    // segment creation order, so the result is deterministic.
    std::unordered_map<PointKey, std::vector<int>, PointKeyHash> adjacency;
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
        adjacency[{segments[s].a[0], segments[s].a[1]}].push_back(s);
        adjacency[{segments[s].b[0], segments[s].b[1]}].push_back(s);
    }
    std::vector<bool> used(segments.size(), false);
    std::vector<Polyline> out;

    const auto walk = [&](int seg, bool from_a) {
        Polyline line;
        ContourPoint cur = from_a ? segments[seg].a : segments[seg].b;
        line.pts.push_back(cur);
        int s = seg;
        while (true) {
            used[s] = true;
            const Segment& sg = segments[s];
            cur = (cur == sg.a) ? sg.b : sg.a;
            line.pts.push_back(cur);
            int next = -1;
            for (int cand : adjacency[{cur[0], cur[1]}]) {
                if (!used[cand]) { next = cand; break; }
            }
            if (next < 0) break;
            s = next;
        }
        out.push_back(std::move(line));
    };

    // Open chains first (start from degree-1 endpoints), then closed loops.
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
        if (used[s]) continue;
        const bool a_open = adjacency[{segments[s].a[0], segments[s].a[1]}].size() == 1;
        const bool b_open = adjacency[{segments[s].b[0], segments[s].b[1]}].size() == 1;
        if (a_open)
            walk(s, true);
        else if (b_open)
            walk(s, false);
    }
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
        if (!used[s]) walk(s, true);
    }
    return out;
}

}  // namespace su11
