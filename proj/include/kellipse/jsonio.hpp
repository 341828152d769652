#pragma once

#include <json.hpp>

#include "kellipse/dual.hpp"
#include "kellipse/invariant.hpp"

namespace kellipse {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json config_json(const EllipseConfig& cfg);
Json poly_json(const CurvePoly& cp);
Json pencil_json(const MatrixPencil& p);
Json census_json(const CurveReport& report);
Json report_json(const CurveReport& report);
Json dual_json(const EllipseConfig& cfg, const std::vector<PolarSample>& samples,
               std::pair<double, double> recenter_shift);

/// theta, h, x*, y*, w1, w2 per row, %.9g formatting.
std::string dual_csv(const std::vector<PolarSample>& samples);

/// ex, ey, ez, numerator, denominator rows of the projective polynomial.
std::string coefficients_csv(const CurvePoly& cp);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace kellipse
