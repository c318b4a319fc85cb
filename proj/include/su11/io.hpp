#pragma once

#include <string>

#include <json.hpp>

#include <su11/scan.hpp>
#include <su11/validate.hpp>

namespace su11 {

inline constexpr const char* kToolVersion = "1.0.0";

// CSV: numbers at full round-trip precision, LF line endings, no timestamps.
std::string coefficients_to_csv(const PropagatorCoefficients& c);
std::string report_to_csv(const SqueezingReport& r);
std::string region_map_to_csv(const RegionMap& m);   // axis1,axis2,f_x,f_y,mask_x,mask_y,error_code
std::string profile_to_csv(const ProfileData& p);    // phi,f_x,f_y,error_code

// JSON: key order fixed (ordered_json), no timestamps; phi axes get a
// convenience companion array in units of pi.
nlohmann::ordered_json grid_to_json(const GridSpec& g);
nlohmann::ordered_json coefficients_to_json(const PropagatorCoefficients& c);
nlohmann::ordered_json report_to_json(const SqueezingReport& r);
nlohmann::ordered_json region_map_to_json(const RegionMap& m);
nlohmann::ordered_json profile_to_json(const ProfileData& p);
nlohmann::ordered_json validation_to_json(const ValidationReport& r);

std::string validation_to_text(const ValidationReport& r);

}  // namespace su11
