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

#include "isaccap/link_budget.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "isaccap/units.hpp"

namespace isaccap {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be positive and finite, got " +
                                    std::to_string(value));
    }
}

double mode_factor(const SensingRegion& region, PdfMode mode) {
    return mode == PdfMode::paper_literal ? std::sin(region.max_elevation_rad) : 1.0;
}

}  // namespace

void validate(const RadarLinkParams& params) {
    require_positive(params.rcs_m2, "rcs_m2");
    require_positive(params.carrier_freq_mhz, "carrier_freq_mhz");
    if (!std::isfinite(params.tx_power_dbm)) throw std::invalid_argument("tx_power_dbm must be finite");
    if (!std::isfinite(params.combined_gain_db)) throw std::invalid_argument("combined_gain_db must be finite");
    if (!std::isfinite(params.noise_power_dbm)) throw std::invalid_argument("noise_power_dbm must be finite");
    if (params.uavs_per_symbol < 1) throw std::invalid_argument("uavs_per_symbol must be >= 1");
    if (params.cpi_symbols < 1) throw std::invalid_argument("cpi_symbols must be >= 1");
}

double path_loss_db(double carrier_freq_mhz, double distance_km, double rcs_m2) {
    require_positive(carrier_freq_mhz, "carrier_freq_mhz");
    require_positive(distance_km, "distance_km");
    require_positive(rcs_m2, "rcs_m2");
    return 103.4 + 20.0 * std::log10(carrier_freq_mhz) + 40.0 * std::log10(distance_km) -
           10.0 * std::log10(rcs_m2);
}

PathlossConstant pathloss_constant(double carrier_freq_mhz, double rcs_m2) {
    require_positive(carrier_freq_mhz, "carrier_freq_mhz");
    require_positive(rcs_m2, "rcs_m2");
    return PathlossConstant{std::pow(10.0, 10.34) * carrier_freq_mhz * carrier_freq_mhz / rcs_m2};
}

double path_amplitude(const RadarLinkParams& params, double distance_km) {
    require_positive(distance_km, "distance_km");
    const double eps = pathloss_constant(params.carrier_freq_mhz, params.rcs_m2).value;
    return 1.0 / (std::sqrt(eps) * distance_km * distance_km);
}

double snr_scale(const RadarLinkParams& params) {
    const double kappa = db_to_linear(params.combined_gain_db);
    const double eps = pathloss_constant(params.carrier_freq_mhz, params.rcs_m2).value;
    return kappa * kappa * dbm_to_watts(params.tx_power_dbm) /
           (params.uavs_per_symbol * eps * dbm_to_watts(params.noise_power_dbm));
}

double per_uav_snr(const RadarLinkParams& params, double distance_km, double integrated_symbols) {
    require_positive(distance_km, "distance_km");
    const double d2 = distance_km * distance_km;
    return snr_scale(params) * integrated_symbols / (d2 * d2);
}

double per_uav_snr(const RadarLinkParams& params, double distance_km) {
    return per_uav_snr(params, distance_km, static_cast<double>(params.cpi_symbols));
}

double mean_single_uav_snr(const RadarLinkParams& params, const SensingRegion& region, PdfMode mode) {
    return snr_scale(params) * params.cpi_symbols * expected_inverse_quartic_range(region) *
           mode_factor(region, mode);
}

double mean_multi_uav_snr(const RadarLinkParams& params, const SensingRegion& region,
                          long long total_symbols, long long num_uavs, PdfMode mode) {
    if (total_symbols < 1) throw std::invalid_argument("total_symbols must be >= 1");
    if (num_uavs < 1) throw std::invalid_argument("num_uavs must be >= 1");
    const double symbols_per_uav = static_cast<double>(total_symbols) * params.uavs_per_symbol /
                                   static_cast<double>(num_uavs);
    return snr_scale(params) * symbols_per_uav * expected_inverse_quartic_range(region) *
           mode_factor(region, mode);
}

}  // namespace isaccap
