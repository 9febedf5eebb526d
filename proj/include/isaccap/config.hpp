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

#ifndef ISACCAP_CONFIG_HPP_
#define ISACCAP_CONFIG_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "isaccap/capacity.hpp"
#include "isaccap/detector.hpp"
#include "isaccap/link_budget.hpp"
#include "isaccap/monte_carlo.hpp"
#include "isaccap/region.hpp"

namespace isaccap {

// Every message names the offending key.
class ConfigError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class SweepKind { uav_count, radius, frames, tx_power };

struct SweepRange {
    double start;
    double stop;
    double step;
};

// Fully resolved scenario. Defaults reproduce the reference setup: 58 dBm,
// 22.5 dB gain, 4.9 GHz, 0.01 m^2, -174 dBm/Hz over 100 MHz, R = 1 km,
// Theta = pi/5, eps = 10, K = 1, N = 3, one frame.
struct ScenarioConfig {
    RadarLinkParams link;
    double noise_density_dbm_hz = -174.0;
    double bandwidth_mhz = 100.0;
    SensingRegion region{1.0, 10.0, kDefaultMaxElevation};
    DetectionSpec spec;
    long long frames = 1;
    int symbols_per_frame = 14;
    SweepKind sweep = SweepKind::uav_count;
    SweepRange range{1.0, 60.0, 1.0};
    // Extra curve parameter: frames for uav_count sweeps, tx power (dBm) for
    // radius sweeps, unused otherwise.
    std::vector<double> series;
    PdfMode snr_mode = PdfMode::normalized;
    SurrogateMode surrogate_mode = SurrogateMode::exact;
    TrialPlan plan;
    bool monte_carlo = false;
    std::string output;

    static constexpr double kDefaultMaxElevation = 0.6283185307179586;  // pi/5

    long long total_symbols() const { return total_symbols_for_frames(frames, symbols_per_frame); }
    CapacityQuery query() const;
};

using KeyValues = std::map<std::string, std::string>;

// `key = value` lines; `#` starts a comment. Throws ConfigError on malformed
// lines and duplicate keys.
KeyValues parse_key_values(std::string_view text);

// Validates keys and values and applies defaults. Sweep range and series
// defaults depend on the sweep kind.
ScenarioConfig config_from_key_values(const KeyValues& values);

ScenarioConfig parse_config(std::string_view text);

// Canonical key=value listing of everything that influences results
// (excludes workers and output). Round-trips through config_from_key_values.
std::vector<std::pair<std::string, std::string>> resolved_key_values(const ScenarioConfig& config);

std::vector<double> sweep_points(const ScenarioConfig& config);

const char* to_string(SweepKind kind);
const char* to_string(PdfMode mode);
const char* to_string(SurrogateMode mode);
const char* to_string(SpatialSampling sampling);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

}  // namespace isaccap

#endif  // ISACCAP_CONFIG_HPP_
