#include <su11/io.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace su11 {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Shortest round-trip decimal form.
std::string num(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = 0.0;
    std::sscanf(buf, "%lf", &back);
    if (back == v) {
        for (int prec = 1; prec <= 16; ++prec) {
            char probe[40];
            std::snprintf(probe, sizeof(probe), "%.*g", prec, v);
            std::sscanf(probe, "%lf", &back);
            if (back == v) return probe;
        }
    }
    return buf;
}

nlohmann::ordered_json axis_to_json(const Axis& a) {
    return {{"name", a.name}, {"min", a.min}, {"max", a.max}, {"steps", a.steps}};
}

nlohmann::ordered_json contours_to_json(const std::vector<Polyline>& lines) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& line : lines) {
        nlohmann::ordered_json pts = nlohmann::ordered_json::array();
        for (const auto& p : line.pts) pts.push_back({p[0], p[1]});
        arr.push_back(std::move(pts));
    }
    return arr;
}

}  // namespace

std::string coefficients_to_csv(const PropagatorCoefficients& c) {
    std::ostringstream os;
    os << "t,regime,r1,r2,r3,j,s,v\n";
    os << num(c.t) << ',' << to_string(c.regime) << ',' << num(c.r1) << ',' << num(c.r2)
       << ',' << num(c.r3) << ',' << num(c.j) << ',' << num(c.s) << ',' << num(c.v) << '\n';
    return os.str();
}

std::string report_to_csv(const SqueezingReport& r) {
    std::ostringstream os;
    os << "path,f_x,f_y,var_x,var_y,mean_kz\n";
    os << to_string(r.path) << ',' << num(r.f_x) << ',' << num(r.f_y) << ',' << num(r.var_x)
       << ',' << num(r.var_y) << ',' << num(r.mean_kz) << '\n';
    return os.str();
}

std::string region_map_to_csv(const RegionMap& m) {
    std::ostringstream os;
    os << "axis1,axis2,f_x,f_y,mask_x,mask_y,error_code\n";
    const int n2 = m.grid.axis2.steps;
    for (int idx = 0; idx < static_cast<int>(m.f_x.size()); ++idx) {
        const int i1 = idx / n2, i2 = idx % n2;
        os << num(axis_value(m.grid.axis1, i1)) << ',' << num(axis_value(m.grid.axis2, i2))
           << ',' << num(m.f_x[idx]) << ',' << num(m.f_y[idx]) << ','
           << static_cast<int>(m.mask_x[idx]) << ',' << static_cast<int>(m.mask_y[idx])
           << ',' << m.error_code[idx] << '\n';
    }
    return os.str();
}

std::string profile_to_csv(const ProfileData& p) {
    std::ostringstream os;
    os << "phi,f_x,f_y,error_code\n";
    for (size_t i = 0; i < p.phi.size(); ++i)
        os << num(p.phi[i]) << ',' << num(p.f_x[i]) << ',' << num(p.f_y[i]) << ','
           << p.error_code[i] << '\n';
    return os.str();
}

nlohmann::ordered_json grid_to_json(const GridSpec& g) {
    nlohmann::ordered_json j;
    j["family"] = to_string(g.family);
    j["axis1"] = axis_to_json(g.axis1);
    j["axis2"] = axis_to_json(g.axis2);
    j["fixed"] = nlohmann::ordered_json::object();
    for (const auto& [key, val] : g.fixed) j["fixed"][key] = val;
    j["time"] = {{"value", g.time_value}, {"unit", to_string(g.time_unit)}};
    return j;
}

nlohmann::ordered_json coefficients_to_json(const PropagatorCoefficients& c) {
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["t"] = c.t;
    j["regime"] = to_string(c.regime);
    j["r1"] = c.r1;
    j["r2"] = c.r2;
    j["r3"] = c.r3;
    j["j"] = c.j;
    j["s"] = c.s;
    j["v"] = c.v;
    return j;
}

nlohmann::ordered_json report_to_json(const SqueezingReport& r) {
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["path"] = to_string(r.path);
    j["f_x"] = r.f_x;
    j["f_y"] = r.f_y;
    j["var_x"] = r.var_x;
    j["var_y"] = r.var_y;
    j["mean_kz"] = r.mean_kz;
    return j;
}

nlohmann::ordered_json region_map_to_json(const RegionMap& m) {
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["path"] = to_string(m.path);
    j["grid"] = grid_to_json(m.grid);
    nlohmann::ordered_json a1 = nlohmann::ordered_json::array();
    for (int i = 0; i < m.grid.axis1.steps; ++i) a1.push_back(axis_value(m.grid.axis1, i));
    nlohmann::ordered_json a2 = nlohmann::ordered_json::array();
    for (int i = 0; i < m.grid.axis2.steps; ++i) a2.push_back(axis_value(m.grid.axis2, i));
    j["axis1_values"] = std::move(a1);
    j["axis2_values"] = std::move(a2);
    if (axis_is_periodic(m.grid.axis2)) {
        nlohmann::ordered_json a2pi = nlohmann::ordered_json::array();
        for (int i = 0; i < m.grid.axis2.steps; ++i)
            a2pi.push_back(axis_value(m.grid.axis2, i) / kPi);
        j["axis2_values_over_pi"] = std::move(a2pi);
    }
    j["f_x"] = m.f_x;
    j["f_y"] = m.f_y;
    j["mask_x"] = m.mask_x;
    j["mask_y"] = m.mask_y;
    j["error_code"] = m.error_code;
    j["contours_x"] = contours_to_json(m.contours_x);
    j["contours_y"] = contours_to_json(m.contours_y);
    return j;
}

nlohmann::ordered_json profile_to_json(const ProfileData& p) {
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["path"] = to_string(p.path);
    j["omega"] = p.coupling.omega;
    j["lambda"] = p.coupling.lambda;
    j["zmag"] = p.zmag;
    j["k"] = p.k;
    j["t"] = p.t;
    j["phi"] = p.phi;
    nlohmann::ordered_json phipi = nlohmann::ordered_json::array();
    for (double v : p.phi) phipi.push_back(v / kPi);
    j["phi_over_pi"] = std::move(phipi);
    j["f_x"] = p.f_x;
    j["f_y"] = p.f_y;
    j["error_code"] = p.error_code;
    return j;
}

nlohmann::ordered_json validation_to_json(const ValidationReport& r) {
    nlohmann::ordered_json j;
    j["tool_version"] = kToolVersion;
    j["ok"] = r.ok;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        nlohmann::ordered_json rj;
        rj["id"] = row.id;
        rj["detail"] = row.detail;
        rj["measured"] = row.measured;
        rj["expected"] = row.flagged
                             ? nlohmann::ordered_json{{"kind", "known_discrepancy"},
                                                      {"lo", row.lo},
                                                      {"hi", row.hi}}
                             : nlohmann::ordered_json{{"kind", "agreement"}, {"tol", row.tol}};
        rj["pass"] = row.pass;
        rows.push_back(std::move(rj));
    }
    j["rows"] = std::move(rows);
    return j;
}

std::string validation_to_text(const ValidationReport& r) {
    std::ostringstream os;
    for (const auto& row : r.rows) {
        char line[256];
        if (row.flagged)
            std::snprintf(line, sizeof(line),
                          "%-34s %-4s measured=%.6e expected in [%.1e, %.1e]\n",
                          row.id.c_str(), row.pass ? "ok" : "FAIL", row.measured, row.lo,
                          row.hi);
        else
            std::snprintf(line, sizeof(line), "%-34s %-4s measured=%.6e tol=%.1e\n",
                          row.id.c_str(), row.pass ? "ok" : "FAIL", row.measured, row.tol);
        os << line;
    }
    os << (r.ok ? "validation: OK" : "validation: INCONSISTENT") << '\n';
    return os.str();
}

}  // namespace su11
