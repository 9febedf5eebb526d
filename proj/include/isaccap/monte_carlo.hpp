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

#ifndef ISACCAP_MONTE_CARLO_HPP_
#define ISACCAP_MONTE_CARLO_HPP_

#include <cstdint>
#include <span>

#include "isaccap/link_budget.hpp"
#include "isaccap/region.hpp"

namespace isaccap {

// How the spatial estimators draw UAV ranges. `stratified` places trial j of
// each batch in the j-th equal-probability slice of the range CDF and builds
// its interval from the spread of independent batch means.
enum class SpatialSampling { iid, stratified };

struct TrialPlan {
    long long trials = 100'000;
    std::uint64_t master_seed = 0x15AC'CA9A'C17E'5EEDull;
    double confidence = 0.99;
    int workers = 1;
    SpatialSampling sampling = SpatialSampling::stratified;
    int batches = 20;
};

// Throws std::invalid_argument on trials < 1, confidence outside (0, 1),
// workers < 1 or batches < 2.
void validate(const TrialPlan& plan);

struct EmpiricalEstimate {
    double mean = 0.0;
    double half_width = 0.0;   // at plan.confidence
    double std_error = 0.0;
    long long trials = 0;
};

struct DetectionRates {
    EmpiricalEstimate pd;
    EmpiricalEstimate pfa;
};

// Seed of block `index` in stream `stream`; a pure function of its inputs so
// results never depend on how blocks are spread over workers.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t index);

// Mean per-UAV SNR over positions drawn from the region.
EmpiricalEstimate mc_mean_snr(const RadarLinkParams& link, const SensingRegion& region,
                              const TrialPlan& plan);

// Each trial places num_uavs UAVs, integrates each over T K / L symbols and
// averages their SNRs.
EmpiricalEstimate mc_mean_multi_uav_snr(const RadarLinkParams& link, const SensingRegion& region,
                                        long long total_symbols, long long num_uavs,
                                        const TrialPlan& plan);

// Coherently integrates cpi_symbols observations per trial under H0 and H1
// and thresholds the log-likelihood ratio at lrt_threshold(snr, pfa). `snr`
// is the post-integration SNR.
DetectionRates mc_detection_rates(double snr, double pfa, int cpi_symbols, const TrialPlan& plan);

// Same with an explicit LRT threshold (may be -inf or +inf).
DetectionRates mc_detection_rates_at_threshold(double snr, double threshold, int cpi_symbols,
                                               const TrialPlan& plan);

// E|sum_n y_n|^2 with y_n = kappa sqrt(P_T/K) beta + z_n, z_n ~ CN(0, sigma^2),
// n = 1..link.cpi_symbols. Watts.
EmpiricalEstimate mc_integration_energy(const RadarLinkParams& link, double path_amplitude,
                                        const TrialPlan& plan);

// kappa^2 (P_T/K) N^2 beta^2 + N sigma^2
double expected_integration_energy(const RadarLinkParams& link, double path_amplitude);

// (E|Y|^2 - E|Z|^2) / E|Z|^2 from two energy runs sharing the noise stream.
EmpiricalEstimate mc_integration_snr(const RadarLinkParams& link, double path_amplitude,
                                     const TrialPlan& plan);

// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace isaccap

#endif  // ISACCAP_MONTE_CARLO_HPP_
