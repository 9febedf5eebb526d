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

#ifndef ISACCAP_LINK_BUDGET_HPP_
#define ISACCAP_LINK_BUDGET_HPP_

#include "isaccap/region.hpp"

namespace isaccap {

// Radar link configuration. Powers are carried in dBm and gains in dB as
// configured; every computation converts to linear watts internally.
struct RadarLinkParams {
    double tx_power_dbm = 58.0;
    // Product of array and beamforming gain. Converted as 10^(dB/10) and then
    // squared in the SNR expression.
    double combined_gain_db = 22.5;
    double noise_power_dbm = -94.0;
    double carrier_freq_mhz = 4900.0;
    double rcs_m2 = 0.01;
    int uavs_per_symbol = 1;
    int cpi_symbols = 3;
};

// Throws std::invalid_argument when a field violates its invariant.
void validate(const RadarLinkParams& params);

// Linear two-way path-loss constant: beta^2 = 1 / (value * d_km^4).
struct PathlossConstant {
    double value;
};

// 103.4 + 20 log10 f + 40 log10 d - 10 log10 rcs, with f in MHz and d in km.
double path_loss_db(double carrier_freq_mhz, double distance_km, double rcs_m2);

// 10^10.34 f^2 / rcs.
PathlossConstant pathloss_constant(double carrier_freq_mhz, double rcs_m2);

// Linear amplitude coefficient beta at a given distance.
double path_amplitude(const RadarLinkParams& params, double distance_km);

// kappa^2 P_T / (K sigma^2 eps): everything in the per-UAV SNR except N and d^-4.
double snr_scale(const RadarLinkParams& params);

// Post-integration SNR of one UAV at the given distance.
double per_uav_snr(const RadarLinkParams& params, double distance_km);

// Same, with a fractional number of integrated symbols.
double per_uav_snr(const RadarLinkParams& params, double distance_km, double integrated_symbols);

double mean_single_uav_snr(const RadarLinkParams& params, const SensingRegion& region, PdfMode mode);

// Average SNR when total_symbols are shared among num_uavs UAVs, i.e. each
// UAV is integrated over N = T K / L symbols. K cancels.
double mean_multi_uav_snr(const RadarLinkParams& params, const SensingRegion& region,
                          long long total_symbols, long long num_uavs, PdfMode mode);

}  // namespace isaccap

#endif  // ISACCAP_LINK_BUDGET_HPP_
