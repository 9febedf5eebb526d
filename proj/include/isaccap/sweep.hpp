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

#ifndef ISACCAP_SWEEP_HPP_
#define ISACCAP_SWEEP_HPP_

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isaccap/capacity.hpp"
#include "isaccap/config.hpp"
#include "isaccap/monte_carlo.hpp"

namespace isaccap {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SweepRow {
    double series = kNaN;   // frames (uav_count) or tx power dBm (radius)
    double value = 0.0;
    std::string error;      // non-empty marks a failed row

    // uav_count sweeps; SNRs are linear
    double snr = kNaN;
    double snr_normalized = kNaN;
    double snr_paper_literal = kNaN;
    std::optional<EmpiricalEstimate> mc_snr;
    double joint_pd = kNaN;
    double surrogate_pd_rederived = kNaN;   // NaN outside the surrogate regime
    double surrogate_pd_paper_literal = kNaN;

    // radius / frames / tx_power sweeps
    CapacityResult cap_snr;
    CapacityResult cap_pd_exact;
    CapacityResult cap_pd_rederived;
    CapacityResult cap_pd_paper_literal;
    CapacityResult capacity;   // min of cap_snr and the PD capacity under config.surrogate_mode

    bool ok() const { return error.empty(); }
};

// One row per (series, sweep point), ordered by series then sweep value.
// A row whose computation throws is kept and marked failed.
std::vector<SweepRow> run_sweep(const ScenarioConfig& config);

enum class SweepView { snr, pd, capacity };

// CSV with '#' header lines carrying the resolved configuration, one column
// header row, LF line endings.
std::string render_sweep_csv(const ScenarioConfig& config, const std::vector<SweepRow>& rows, SweepView view,
                             std::string_view command);

// printf("%.6g")
std::string format_sig6(double value);

// '#' lines shared by every CSV this toolkit writes.
std::string csv_preamble(const ScenarioConfig& config, std::string_view command);

}  // namespace isaccap

#endif  // ISACCAP_SWEEP_HPP_
