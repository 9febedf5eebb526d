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

#ifndef ISACCAP_UNITS_HPP_
#define ISACCAP_UNITS_HPP_

#include <cmath>
#include <numbers>

namespace isaccap {

// Canonical internal units: MHz, km, linear watts. dB/dBm only appear at
// the configuration boundary.

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

// Thermal noise power from a spectral density and a bandwidth.
inline double noise_power_dbm(double density_dbm_per_hz, double bandwidth_hz) {
    return density_dbm_per_hz + 10.0 * std::log10(bandwidth_hz);
}

// Sensing symbols per 10-slot frame: slots 0 and 5 each carry symbols 0..6.
inline constexpr int kSensingSymbolsPerFrame = 14;

inline constexpr double kPi = std::numbers::pi;

}  // namespace isaccap

#endif  // ISACCAP_UNITS_HPP_
