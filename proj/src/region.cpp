/*
   Copyright 2026 The isaccap Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "isaccap/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "isaccap/units.hpp"

namespace isaccap {

SensingRegion make_region(double max_range_km, double radius_ratio, double max_elevation_rad) {
    if (!(max_range_km > 0.0) || !std::isfinite(max_range_km)) {
        throw std::invalid_argument("max_range must be positive and finite, got " +
                                    std::to_string(max_range_km));
    }
    if (!(radius_ratio > 1.0) || !std::isfinite(radius_ratio)) {
        throw std::invalid_argument("radius_ratio must exceed 1, got " + std::to_string(radius_ratio));
    }
    if (!(max_elevation_rad > 0.0 && max_elevation_rad <= kPi / 2.0)) {
        throw std::invalid_argument("max_elevation must lie in (0, pi/2], got " +
                                    std::to_string(max_elevation_rad));
    }
    return SensingRegion{max_range_km, radius_ratio, max_elevation_rad};
}

double position_pdf(const SensingRegion& region, const Position& pos, PdfMode mode) {
    const double r = region.max_range_km;
    const double eps = region.radius_ratio;
    if (pos.range_km < region.min_range_km() || pos.range_km > r || pos.elevation_rad < 0.0 ||
        pos.elevation_rad > region.max_elevation_rad || pos.azimuth_rad < 0.0 ||
        pos.azimuth_rad > kPi) {
        return 0.0;
    }
    const double eps3 = eps * eps * eps;
    const double density = 3.0 * eps3 * pos.range_km * pos.range_km * std::cos(pos.elevation_rad) /
                           (kPi * r * r * r * (eps3 - 1.0));
    if (mode == PdfMode::normalized) {
        return density / std::sin(region.max_elevation_rad);
    }
    return density;
}

Position position_from_uniforms(const SensingRegion& region, double u_range, double u_elevation,
                                double u_azimuth) {
    const double eps3 = region.radius_ratio * region.radius_ratio * region.radius_ratio;
    // range^3 is uniform on [R^3/eps^3, R^3]
    double range = region.max_range_km * std::cbrt((1.0 + u_range * (eps3 - 1.0)) / eps3);
    range = std::clamp(range, region.min_range_km(), region.max_range_km);
    // sin(elevation) is uniform on [0, sin(max_elevation)]
    double elevation = std::asin(std::min(1.0, u_elevation * std::sin(region.max_elevation_rad)));
    elevation = std::min(elevation, region.max_elevation_rad);
    return Position{range, elevation, u_azimuth * kPi};
}

double expected_inverse_quartic_range(const SensingRegion& region) {
    const double eps = region.radius_ratio;
    const double r2 = region.max_range_km * region.max_range_km;
    return 3.0 * eps * eps * eps / (r2 * r2 * (eps * eps + eps + 1.0));
}

}  // namespace isaccap
