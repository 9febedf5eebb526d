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

#ifndef ISACCAP_CAPACITY_HPP_
#define ISACCAP_CAPACITY_HPP_

#include <cstdint>
#include <stdexcept>

#include "isaccap/detector.hpp"
#include "isaccap/link_budget.hpp"
#include "isaccap/region.hpp"

namespace isaccap {

struct CapacityQuery {
    RadarLinkParams link;
    SensingRegion region;
    long long total_symbols;   // T = frames x sensing symbols per frame
    DetectionSpec spec;
    PdfMode snr_mode = PdfMode::normalized;
    SurrogateMode surrogate_mode = SurrogateMode::exact;
};

enum class Constraint { snr, pd };

struct CapacityResult {
    long long max_uavs = 0;
    Constraint binding_constraint = Constraint::snr;
    // Evaluated at max(max_uavs, 1).
    double achieved_snr = 0.0;
    double achieved_joint_pd = 0.0;
    int bisection_steps = 0;
    bool saturated = false;   // search cap reached before the constraint failed
};

struct Bracket {
    long long low;
    long long high;
};

// The supplied bracket does not satisfy objective(low) >= ln(pd) > objective(high).
class InvalidBracket : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr long long kBisectionCap = 1'000'000'000;
inline constexpr long long kDefaultScanCap = 1'000'000;

long long total_symbols_for_frames(long long frames, int symbols_per_frame = 14);

// Region-averaged SNR with the whole budget T spent on one UAV; SNR_L = this / L.
double snr_budget(const CapacityQuery& query);

// rho in L ln Q(xi - sqrt(rho / L)); equal to 2 * snr_budget.
double detection_budget(const CapacityQuery& query);

// Largest L with SNR_L >= threshold, or 0.
CapacityResult capacity_under_snr(const CapacityQuery& query);

// Objective compared against ln(pd_threshold), per query.surrogate_mode.
// Surrogate modes fall back to the exact expression outside [-4, 0].
double pd_objective(const CapacityQuery& query, long long num_uavs);

// Bisection on a caller-supplied bracket. Throws InvalidBracket when the
// bracket does not straddle the threshold.
CapacityResult capacity_under_pd_bisect(const CapacityQuery& query, Bracket bracket);

// Bisection with the bracket found by doubling from [1, 2], capped at 1e9.
CapacityResult capacity_under_pd(const CapacityQuery& query);

// Linear scan with the exact joint PD.
CapacityResult capacity_under_pd_scan(const CapacityQuery& query, long long cap = kDefaultScanCap);

// min of the SNR and PD capacities, labelled with the binding constraint.
CapacityResult sensing_capacity(const CapacityQuery& query);

const char* to_string(Constraint c);

}  // namespace isaccap

#endif  // ISACCAP_CAPACITY_HPP_
