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

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "isaccap/detector.hpp"
#include "isaccap/link_budget.hpp"
#include "isaccap/monte_carlo.hpp"
#include "isaccap/units.hpp"

using namespace isaccap;

namespace {

const SensingRegion kRegion = make_region(1.0, 10.0, kPi / 5.0);

TrialPlan plan_with(long long trials, int workers = 1, std::uint64_t seed = 7) {
    TrialPlan p;
    p.trials = trials;
    p.workers = workers;
    p.master_seed = seed;
    return p;
}

bool same_bits(const EmpiricalEstimate& a, const EmpiricalEstimate& b) {
    return a.mean == b.mean && a.half_width == b.half_width && a.std_error == b.std_error && a.trials == b.trials;
}

}  // namespace

TEST_CASE("derive_seed is a pure function that separates streams") {
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(2, 2, 3));
}

TEST_CASE("estimates are reproducible and independent of worker count") {
    const RadarLinkParams link;
    for (SpatialSampling s : {SpatialSampling::iid, SpatialSampling::stratified}) {
        TrialPlan one = plan_with(50'000, 1);
        TrialPlan four = plan_with(50'000, 4);
        one.sampling = four.sampling = s;
        CHECK(same_bits(mc_mean_snr(link, kRegion, one), mc_mean_snr(link, kRegion, one)));
        CHECK(same_bits(mc_mean_snr(link, kRegion, one), mc_mean_snr(link, kRegion, four)));
    }
    const DetectionRates a = mc_detection_rates(10.0, 0.05, 3, plan_with(30'000, 1));
    const DetectionRates b = mc_detection_rates(10.0, 0.05, 3, plan_with(30'000, 3));
    CHECK(same_bits(a.pd, b.pd));
    CHECK(same_bits(a.pfa, b.pfa));
    const double beta = path_amplitude(link, 1.0);
    CHECK(same_bits(mc_integration_energy(link, beta, plan_with(30'000, 1)),
                    mc_integration_energy(link, beta, plan_with(30'000, 5))));
    CHECK_FALSE(same_bits(mc_mean_snr(link, kRegion, plan_with(50'000, 1, 1)),
                          mc_mean_snr(link, kRegion, plan_with(50'000, 1, 2))));
}

TEST_CASE("thin shell collapses to the deterministic SNR") {
    const RadarLinkParams link;
    const SensingRegion shell = make_region(1.0, 1.000001, kPi / 5.0);
    const EmpiricalEstimate e = mc_mean_snr(link, shell, plan_with(10'000));
    CHECK(e.mean == doctest::Approx(per_uav_snr(link, 1.0)).epsilon(1e-5));
}

TEST_CASE("spatial averages match the closed form") {
    const RadarLinkParams link;
    const double closed = mean_single_uav_snr(link, kRegion, PdfMode::normalized);
    const EmpiricalEstimate strat = mc_mean_snr(link, kRegion, TrialPlan{});
    CHECK(std::abs(linear_to_db(strat.mean / closed)) < 0.1);
    CHECK(std::abs(strat.mean - closed) <= strat.half_width);

    TrialPlan iid = plan_with(200'000);
    iid.sampling = SpatialSampling::iid;
    const EmpiricalEstimate e = mc_mean_snr(link, kRegion, iid);
    CHECK(std::abs(e.mean - closed) < 3.0 * e.std_error);

    const EmpiricalEstimate multi = mc_mean_multi_uav_snr(link, kRegion, 14, 5, plan_with(40'000));
    const double multi_closed = mean_multi_uav_snr(link, kRegion, 14, 5, PdfMode::normalized);
    CHECK(std::abs(linear_to_db(multi.mean / multi_closed)) < 0.1);
}

TEST_CASE("iid standard error shrinks as 1/sqrt(n)") {
    const RadarLinkParams link;
    TrialPlan small = plan_with(100'000);
    TrialPlan large = plan_with(400'000);
    small.sampling = large.sampling = SpatialSampling::iid;
    const double ratio = mc_mean_snr(link, kRegion, small).std_error / mc_mean_snr(link, kRegion, large).std_error;
    CHECK(ratio == doctest::Approx(2.0).epsilon(0.2));
}

TEST_CASE("detection rates match the analytic probabilities") {
    const DetectionRates all = mc_detection_rates_at_threshold(10.0, -INFINITY, 3, plan_with(5'000));
    CHECK(all.pd.mean == 1.0);
    CHECK(all.pfa.mean == 1.0);
    const DetectionRates none = mc_detection_rates_at_threshold(10.0, INFINITY, 3, plan_with(5'000));
    CHECK(none.pd.mean == 0.0);
    CHECK(none.pfa.mean == 0.0);

    for (double snr : {1.0, 4.0, 10.0}) {
        const DetectionRates r = mc_detection_rates(snr, 0.05, 3, plan_with(200'000));
        const double pd = pd_single(snr, 0.05);
        const double n = 200'000.0;
        CHECK(std::abs(r.pfa.mean - 0.05) <= 3.0 * std::sqrt(0.05 * 0.95 / n));
        CHECK(std::abs(r.pd.mean - pd) <= 3.0 * std::sqrt(pd * (1.0 - pd) / n) + 1e-12);
    }
    CHECK_THROWS_AS(mc_detection_rates(0.0, 0.05, 3, plan_with(10)), std::invalid_argument);
    CHECK_THROWS_AS(mc_detection_rates(1.0, 0.05, 0, plan_with(10)), std::invalid_argument);
}

TEST_CASE("integration energy") {
    RadarLinkParams link;
    const double sigma2 = dbm_to_watts(link.noise_power_dbm);
    const EmpiricalEstimate noise = mc_integration_energy(link, 0.0, plan_with(100'000));
    CHECK(std::abs(noise.mean - 3.0 * sigma2) <= 3.0 * noise.std_error);
    CHECK(expected_integration_energy(link, 0.0) == doctest::Approx(3.0 * sigma2).epsilon(1e-14));

    const double beta = path_amplitude(link, 0.6);
    for (int n : {1, 3, 8}) {
        link.cpi_symbols = n;
        const EmpiricalEstimate e = mc_integration_energy(link, beta, plan_with(100'000));
        const double kappa2 = db_to_linear(link.combined_gain_db) * db_to_linear(link.combined_gain_db);
        const double hand = kappa2 * dbm_to_watts(link.tx_power_dbm) * n * n * beta * beta + n * sigma2;
        CHECK(expected_integration_energy(link, beta) == doctest::Approx(hand).epsilon(1e-12));
        CHECK(std::abs(e.mean - hand) <= 3.0 * e.std_error);
    }
    CHECK_THROWS_AS(mc_integration_energy(link, -1.0, plan_with(10)), std::invalid_argument);
}

TEST_CASE("integration gain grows linearly in the number of symbols") {
    RadarLinkParams link;
    const double beta = path_amplitude(link, 0.8);
    std::vector<double> ns, snrs;
    for (int n : {1, 2, 4, 8}) {
        link.cpi_symbols = n;
        ns.push_back(n);
        snrs.push_back(mc_integration_snr(link, beta, plan_with(100'000)).mean);
    }
    CHECK(loglog_slope(ns, snrs) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("energy confidence intervals cover the truth at the stated rate") {
    RadarLinkParams link;
    const double beta = path_amplitude(link, 0.7);
    const double truth = expected_integration_energy(link, beta);
    int covered = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        const EmpiricalEstimate e = mc_integration_energy(link, beta, plan_with(2'000, 1, seed));
        if (std::abs(e.mean - truth) <= e.half_width) ++covered;
    }
    CHECK(covered >= 95);
}

TEST_CASE("loglog_slope") {
    const std::vector<double> x{1.0, 2.0, 4.0, 8.0};
    const std::vector<double> y{3.0, 12.0, 48.0, 192.0};
    CHECK(loglog_slope(x, y) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(loglog_slope(std::vector<double>{1.0}, std::vector<double>{1.0}), std::invalid_argument);
}

TEST_CASE("TrialPlan validation") {
    TrialPlan p;
    CHECK_NOTHROW(validate(p));
    p.trials = 0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = {};
    p.confidence = 1.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = {};
    p.workers = 0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = {};
    p.batches = 1;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
}
