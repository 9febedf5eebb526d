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

#include "isaccap/capacity.hpp"

#include <cmath>
#include <string>

#include "isaccap/units.hpp"

namespace isaccap {

namespace {

void require_pd_threshold(const DetectionSpec& spec) {
    if (!(spec.pd_threshold > 0.0 && spec.pd_threshold < 1.0)) {
        throw std::invalid_argument("pd_threshold must lie in (0, 1)");
    }
    if (!(spec.pfa > 0.0 && spec.pfa < 1.0)) throw std::invalid_argument("pfa must lie in (0, 1)");
}

double snr_at(const CapacityQuery& query, long long num_uavs) {
    return snr_budget(query) / static_cast<double>(num_uavs);
}

void fill_achieved(const CapacityQuery& query, CapacityResult& result) {
    const long long l = std::max(result.max_uavs, 1LL);
    result.achieved_snr = snr_at(query, l);
    result.achieved_joint_pd = joint_pd(result.achieved_snr, l, query.spec.pfa);
}

void check_pd_boundary(const CapacityQuery& query, const CapacityResult& result) {
    if (result.saturated) return;
    const double target = std::log(query.spec.pd_threshold);
    if (result.max_uavs >= 1 && !(pd_objective(query, result.max_uavs) >= target)) {
        throw std::logic_error("PD capacity: constraint violated at max_uavs");
    }
    if (!(pd_objective(query, result.max_uavs + 1) < target)) {
        throw std::logic_error("PD capacity: constraint still holds at max_uavs + 1");
    }
}

}  // namespace

long long total_symbols_for_frames(long long frames, int symbols_per_frame) {
    if (frames < 1) throw std::invalid_argument("frames must be >= 1");
    if (symbols_per_frame < 1) throw std::invalid_argument("symbols_per_frame must be >= 1");
    return frames * symbols_per_frame;
}

double snr_budget(const CapacityQuery& query) {
    return mean_multi_uav_snr(query.link, query.region, query.total_symbols, 1, query.snr_mode);
}

double detection_budget(const CapacityQuery& query) { return 2.0 * snr_budget(query); }

CapacityResult capacity_under_snr(const CapacityQuery& query) {
    const double threshold = db_to_linear(query.spec.snr_threshold_db);
    if (!(threshold > 0.0) || !std::isfinite(threshold)) {
        throw std::invalid_argument("SNR threshold must be positive and finite");
    }
    const double budget = snr_budget(query);
    long long l = static_cast<long long>(std::floor(budget / threshold));
    // floor() of the ratio can disagree with the per-L comparison by one ulp
    while (l > 0 && snr_at(query, l) < threshold) --l;
    while (snr_at(query, l + 1) >= threshold) ++l;

    CapacityResult result;
    result.max_uavs = l;
    result.binding_constraint = Constraint::snr;
    fill_achieved(query, result);
    return result;
}

double pd_objective(const CapacityQuery& query, long long num_uavs) {
    const double rho = detection_budget(query);
    const double xi = q_inv(query.spec.pfa);
    if (query.surrogate_mode == SurrogateMode::exact) {
        return log_joint_pd_exact(rho, xi, num_uavs);
    }
    const double x = xi - std::sqrt(rho / static_cast<double>(num_uavs));
    if (x >= -4.0 && x <= 0.0) {
        return log_joint_pd_surrogate(rho, xi, num_uavs, query.surrogate_mode);
    }
    return log_joint_pd_exact(rho, xi, num_uavs);
}

CapacityResult capacity_under_pd_bisect(const CapacityQuery& query, Bracket bracket) {
    require_pd_threshold(query.spec);
    const double target = std::log(query.spec.pd_threshold);
    if (bracket.low < 1 || bracket.high <= bracket.low) {
        throw InvalidBracket("bracket must satisfy 1 <= low < high");
    }
    if (!(pd_objective(query, bracket.low) >= target) || !(pd_objective(query, bracket.high) < target)) {
        throw InvalidBracket("objective does not straddle ln(pd_threshold) on [" +
                             std::to_string(bracket.low) + ", " + std::to_string(bracket.high) + "]");
    }
    CapacityResult result;
    result.binding_constraint = Constraint::pd;
    long long lo = bracket.low;
    long long hi = bracket.high;
    while (hi - lo > 1) {
        const long long mid = lo + (hi - lo) / 2;
        ++result.bisection_steps;
        if (pd_objective(query, mid) >= target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    result.max_uavs = lo;
    fill_achieved(query, result);
    check_pd_boundary(query, result);
    return result;
}

CapacityResult capacity_under_pd(const CapacityQuery& query) {
    require_pd_threshold(query.spec);
    const double target = std::log(query.spec.pd_threshold);
    if (!(pd_objective(query, 1) >= target)) {
        CapacityResult result;
        result.binding_constraint = Constraint::pd;
        fill_achieved(query, result);
        return result;
    }
    long long lo = 1;
    long long hi = 2;
    while (pd_objective(query, hi) >= target) {
        lo = hi;
        if (hi >= kBisectionCap) {
            CapacityResult result;
            result.binding_constraint = Constraint::pd;
            result.max_uavs = kBisectionCap;
            result.saturated = true;
            fill_achieved(query, result);
            return result;
        }
        hi = std::min(2 * hi, kBisectionCap);
    }
    return capacity_under_pd_bisect(query, Bracket{lo, hi});
}

CapacityResult capacity_under_pd_scan(const CapacityQuery& query, long long cap) {
    require_pd_threshold(query.spec);
    const double budget = snr_budget(query);
    CapacityResult result;
    result.binding_constraint = Constraint::pd;
    long long l = 0;
    while (true) {
        if (l >= cap) {
            result.saturated = true;
            break;
        }
        const long long next = l + 1;
        if (!(joint_pd(budget / static_cast<double>(next), next, query.spec.pfa) >= query.spec.pd_threshold)) {
            break;
        }
        l = next;
    }
    result.max_uavs = l;
    fill_achieved(query, result);
    return result;
}

CapacityResult sensing_capacity(const CapacityQuery& query) {
    const CapacityResult by_snr = capacity_under_snr(query);
    const CapacityResult by_pd = capacity_under_pd(query);
    return by_pd.max_uavs < by_snr.max_uavs ? by_pd : by_snr;
}

const char* to_string(Constraint c) { return c == Constraint::snr ? "snr" : "pd"; }

}  // namespace isaccap
