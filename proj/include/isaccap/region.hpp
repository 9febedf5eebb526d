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

#ifndef ISACCAP_REGION_HPP_
#define ISACCAP_REGION_HPP_

#include <random>

namespace isaccap {

// Hollow quarter sphere in which UAVs are placed: ranges [R/eps, R],
// elevation [0, max_elevation], azimuth [0, pi].
struct SensingRegion {
    double max_range_km;
    double radius_ratio;       // inner radius is max_range_km / radius_ratio
    double max_elevation_rad;

    double min_range_km() const { return max_range_km / radius_ratio; }
};

struct Position {
    double range_km;
    double elevation_rad;
    double azimuth_rad;
};

// paper_literal keeps the density as written, which integrates to
// sin(max_elevation) rather than 1; normalized divides that factor out.
enum class PdfMode { paper_literal, normalized };

// Throws std::invalid_argument on radius_ratio <= 1, max_range <= 0, or
// max_elevation outside (0, pi/2].
SensingRegion make_region(double max_range_km, double radius_ratio, double max_elevation_rad);

// Joint density over (range, elevation, azimuth), km^-1 rad^-2. Zero outside
// the support.
double position_pdf(const SensingRegion& region, const Position& pos, PdfMode mode);

// Inverse-CDF map from three uniforms in [0, 1] to a position.
Position position_from_uniforms(const SensingRegion& region, double u_range, double u_elevation,
                                double u_azimuth);

template <class Rng>
Position sample_position(const SensingRegion& region, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u_range = unit(rng);
    const double u_elevation = unit(rng);
    const double u_azimuth = unit(rng);
    return position_from_uniforms(region, u_range, u_elevation, u_azimuth);
}

// E[d^-4] under the normalized density: 3 eps^3 / (R^4 (eps^2 + eps + 1)).
double expected_inverse_quartic_range(const SensingRegion& region);

}  // namespace isaccap

#endif  // ISACCAP_REGION_HPP_
