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

#include "isaccap/validation.hpp"

#include <algorithm>
#include <bit>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

#include "isaccap/array_response.hpp"
#include "isaccap/capacity.hpp"
#include "isaccap/detector.hpp"
#include "isaccap/link_budget.hpp"
#include "isaccap/monte_carlo.hpp"
#include "isaccap/sweep.hpp"
#include "isaccap/units.hpp"

namespace isaccap {

namespace {

// Minority outcomes needed before a binomial normal approximation is trusted.
constexpr double kMinMinorityCount = 10.0;
// Energy and SNR estimates must resolve a 5% discrepancy to be conclusive.
constexpr double kMaxRelativeHalfWidth = 0.05;

enum Stream : std::uint64_t {
    kSnrCheck = 11,
    kDetectionCheck = 12,
    kEnergyCheck = 13,
    kSlopeCheck = 14,
    kSolverCheck = 15,
    kDeterminismCheck = 16,
};

TrialPlan plan_for(const ScenarioConfig& config, std::uint64_t stream, std::uint64_t index = 0) {
    TrialPlan plan = config.plan;
    plan.master_seed = derive_seed(config.plan.master_seed, stream, index);
    return plan;
}

CheckResult within(std::string name, double measured, double expected, double tolerance, std::string detail = {}) {
    const bool ok = std::abs(measured - expected) <= tolerance;
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, measured, expected, tolerance, std::move(detail)};
}

CheckResult inconclusive(std::string name, double measured, double expected, double tolerance) {
    return {std::move(name), CheckStatus::inconclusive, measured, expected, tolerance, "inconclusive: CI too wide"};
}

double db_half_width(const EmpiricalEstimate& e) {
    if (!std::isfinite(e.half_width) || e.half_width >= e.mean) return std::numeric_limits<double>::infinity();
    return linear_to_db((e.mean + e.half_width) / e.mean);
}

void check_pdf(const ScenarioConfig& config, std::vector<CheckResult>& out) {
    out.push_back(within("pdf_integral_paper_literal", integrate_position_pdf(config.region, PdfMode::paper_literal),
                         std::sin(config.region.max_elevation_rad), 1e-6));
    out.push_back(within("pdf_integral_normalized", integrate_position_pdf(config.region, PdfMode::normalized), 1.0, 1e-6));
}

void check_mean_snr(const ScenarioConfig& config, const ValidationOptions& options, std::vector<CheckResult>& out) {
    RadarLinkParams mc_link = config.link;
    mc_link.rcs_m2 /= options.mc_pathloss_scale;
    const EmpiricalEstimate mc = mc_mean_snr(mc_link, config.region, plan_for(config, kSnrCheck));
    const double closed = mean_single_uav_snr(config.link, config.region, PdfMode::normalized);
    const double literal = mean_single_uav_snr(config.link, config.region, PdfMode::paper_literal);
    const double tol_db = 0.1;
    const double gap_db = linear_to_db(mc.mean / closed);
    const double literal_gap_db = linear_to_db(literal / mc.mean);
    const double expected_literal_gap = linear_to_db(std::sin(config.region.max_elevation_rad));
    if (!(db_half_width(mc) < tol_db)) {
        out.push_back(inconclusive("mc_snr_vs_closed_form_db", gap_db, 0.0, tol_db));
        out.push_back(inconclusive("paper_literal_snr_gap_db", literal_gap_db, expected_literal_gap, tol_db));
        return;
    }
    out.push_back(within("mc_snr_vs_closed_form_db", gap_db, 0.0, tol_db,
                         "mc=" + format_sig6(mc.mean) + " +/- " + format_sig6(mc.half_width)));
    out.push_back(within("paper_literal_snr_gap_db", literal_gap_db, expected_literal_gap, tol_db));
}

void check_detection(const ScenarioConfig& config, std::vector<CheckResult>& out) {
    const double snr = 10.0;
    const double pfa = config.spec.pfa;
    const DetectionRates rates = mc_detection_rates(snr, pfa, config.link.cpi_symbols, plan_for(config, kDetectionCheck));
    const double n = static_cast<double>(config.plan.trials);
    const auto binomial = [&](const char* name, const EmpiricalEstimate& e, double p) {
        const double se = std::sqrt(p * (1.0 - p) / n);
        if (n * std::min(p, 1.0 - p) < kMinMinorityCount) return inconclusive(name, e.mean, p, 3.0 * se);
        return within(name, e.mean, p, 3.0 * se, "3 binomial SE");
    };
    out.push_back(binomial("detection_pfa", rates.pfa, pfa));
    out.push_back(binomial("detection_pd", rates.pd, pd_single(snr, pfa)));
}

void check_integration(const ScenarioConfig& config, std::vector<CheckResult>& out) {
    const double beta = path_amplitude(config.link, 1.0);
    for (int symbols : {1, 3, 8}) {
        RadarLinkParams link = config.link;
        link.cpi_symbols = symbols;
        const EmpiricalEstimate e = mc_integration_energy(link, beta, plan_for(config, kEnergyCheck, symbols));
        const double expected = expected_integration_energy(link, beta);
        const std::string name = "integration_energy_n" + std::to_string(symbols);
        if (!(e.half_width < kMaxRelativeHalfWidth * expected)) {
            out.push_back(inconclusive(name, e.mean, expected, 3.0 * e.std_error));
        } else {
            out.push_back(within(name, e.mean, expected, 3.0 * e.std_error, "3 SE"));
        }
    }
    std::vector<double> ns, gains;
    bool conclusive = true;
    for (int symbols : {1, 2, 4, 8}) {
        RadarLinkParams link = config.link;
        link.cpi_symbols = symbols;
        const EmpiricalEstimate e = mc_integration_snr(link, beta, plan_for(config, kSlopeCheck, symbols));
        conclusive = conclusive && e.half_width < kMaxRelativeHalfWidth * e.mean;
        ns.push_back(symbols);
        gains.push_back(e.mean);
    }
    const double slope = loglog_slope(ns, gains);
    out.push_back(conclusive ? within("integration_gain_slope", slope, 1.0, 0.05)
                             : inconclusive("integration_gain_slope", slope, 1.0, 0.05));
}

void check_q_surrogate(std::vector<CheckResult>& out) {
    constexpr int kPoints = 10'000;
    double worst = 0.0;
    for (int i = 0; i < kPoints; ++i) {
        const double x = 4.0 * i / (kPoints - 1);
        worst = std::max(worst, std::abs(q_exp_approx(x) - q(x)));
    }
    out.push_back({"q_surrogate_max_abs_error", worst <= 5e-3 ? CheckStatus::pass : CheckStatus::fail, worst, 0.0,
                   5e-3, "10^4-point grid on [0, 4]"});
}

void check_solvers(const ScenarioConfig& config, std::vector<CheckResult>& out) {
    std::mt19937_64 rng(derive_seed(config.plan.master_seed, kSolverCheck, 0));
    std::uniform_real_distribution<double> radius(0.5, 2.0), power(50.0, 58.0), pd(0.9, 0.99);
    std::uniform_int_distribution<int> frames(1, 10);
    constexpr int kCases = 200;
    int mismatches = 0;
    for (int i = 0; i < kCases; ++i) {
        CapacityQuery query = config.query();
        query.region = make_region(radius(rng), config.region.radius_ratio, config.region.max_elevation_rad);
        query.link.tx_power_dbm = power(rng);
        query.total_symbols = total_symbols_for_frames(frames(rng), config.symbols_per_frame);
        query.spec.pd_threshold = pd(rng);
        query.snr_mode = i % 2 ? PdfMode::paper_literal : PdfMode::normalized;
        query.surrogate_mode = SurrogateMode::exact;
        if (capacity_under_pd(query).max_uavs != capacity_under_pd_scan(query).max_uavs) ++mismatches;
    }
    out.push_back({"bisect_vs_scan_mismatches", mismatches == 0 ? CheckStatus::pass : CheckStatus::fail,
                   static_cast<double>(mismatches), 0.0, 0.0, std::to_string(kCases) + " randomized queries"});

    // Neighbourhood of the configured scenario: +/-10% radius, 2 dB below the
    // configured power, PD thresholds 0.90..0.99, both SNR modes.
    long long worst_rederived = 0, worst_literal = 0;
    int cases = 0;
    for (int ir = 0; ir <= 8; ++ir) {
        for (int ip = 0; ip <= 4; ++ip) {
            for (int iw = 0; iw <= 9; ++iw) {
                for (PdfMode mode : {PdfMode::normalized, PdfMode::paper_literal}) {
                    CapacityQuery query = config.query();
                    query.region = make_region(config.region.max_range_km * (0.9 + 0.025 * ir), config.region.radius_ratio,
                                               config.region.max_elevation_rad);
                    query.link.tx_power_dbm = config.link.tx_power_dbm - 0.5 * ip;
                    query.spec.pd_threshold = 0.9 + 0.01 * iw;
                    query.snr_mode = mode;
                    query.surrogate_mode = SurrogateMode::exact;
                    const long long exact = capacity_under_pd(query).max_uavs;
                    query.surrogate_mode = SurrogateMode::rederived;
                    worst_rederived = std::max(worst_rederived, std::llabs(capacity_under_pd(query).max_uavs - exact));
                    query.surrogate_mode = SurrogateMode::paper_literal;
                    worst_literal = std::max(worst_literal, std::llabs(capacity_under_pd(query).max_uavs - exact));
                    ++cases;
                }
            }
        }
    }
    out.push_back({"surrogate_capacity_gap_rederived", worst_rederived <= 1 ? CheckStatus::pass : CheckStatus::fail,
                   static_cast<double>(worst_rederived), 0.0, 1.0, std::to_string(cases) + " neighbourhood queries"});
    out.push_back({"surrogate_capacity_gap_paper_literal", CheckStatus::info, static_cast<double>(worst_literal), 0.0, 0.0,
                   "measured only"});
}

void check_trends(const ScenarioConfig& config, std::vector<CheckResult>& out) {
    int violations = 0;
    for (double power : {50.0, 54.0, 58.0}) {
        long long prev_snr = -1, prev_pd = -1;
        for (int i = 0; i <= 30; ++i) {
            CapacityQuery query = config.query();
            query.link.tx_power_dbm = power;
            query.region = make_region(0.5 + 0.05 * i, config.region.radius_ratio, config.region.max_elevation_rad);
            const long long by_snr = capacity_under_snr(query).max_uavs;
            const long long by_pd = capacity_under_pd(query).max_uavs;
            if (prev_snr >= 0 && (by_snr > prev_snr || by_pd > prev_pd)) ++violations;
            prev_snr = by_snr;
            prev_pd = by_pd;
        }
    }
    out.push_back({"capacity_nonincreasing_in_radius", violations == 0 ? CheckStatus::pass : CheckStatus::fail,
                   static_cast<double>(violations), 0.0, 0.0, "R in [0.5, 2] km at 50/54/58 dBm"});

    std::vector<double> frames, combined, pd_only;
    for (int f = 1; f <= 10; ++f) {
        CapacityQuery query = config.query();
        query.total_symbols = total_symbols_for_frames(f, config.symbols_per_frame);
        frames.push_back(f);
        combined.push_back(static_cast<double>(sensing_capacity(query).max_uavs));
        query.surrogate_mode = SurrogateMode::exact;
        pd_only.push_back(static_cast<double>(capacity_under_pd(query).max_uavs));
    }
    const auto deviation = [&](const std::vector<double>& c) {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            num += c[i] * frames[i];
            den += frames[i] * frames[i];
        }
        const double slope = num / den;
        double worst = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) worst = std::max(worst, std::abs(c[i] - slope * frames[i]));
        return worst;
    };
    const double dev = deviation(combined);
    out.push_back({"capacity_proportional_to_frames", dev <= 1.0 ? CheckStatus::pass : CheckStatus::fail, dev, 0.0, 1.0,
                   "binding capacity; frames 1..10; max deviation from best line through origin"});
    out.push_back({"pd_capacity_proportionality_deviation", CheckStatus::info, deviation(pd_only), 0.0, 0.0,
                   "PD-only capacity grows sublinearly; measured only"});

    // Joint PD versus L: concave stretch before the threshold crossing.
    const CapacityQuery query = config.query();
    const double budget = snr_budget(query);
    std::vector<double> pd(1, 1.0);
    long long crossing = 0;
    for (long long l = 1; l < 100'000 && crossing == 0; ++l) {
        pd.push_back(joint_pd(budget / static_cast<double>(l), l, config.spec.pfa));
        if (pd.back() < config.spec.pd_threshold) crossing = l;
    }
    bool concave = false;
    for (long long l = 2; l + 1 < crossing; ++l) {
        if (pd[l + 1] - 2.0 * pd[l] + pd[l - 1] < 0.0) concave = true;
    }
    const bool slow_start = crossing > 2 && std::abs(pd[2] - pd[1]) < std::abs(pd[crossing] - pd[crossing - 1]);
    out.push_back({"pd_slow_then_sharp_decline", concave && slow_start ? CheckStatus::pass : CheckStatus::fail,
                   static_cast<double>(crossing), 0.0, 0.0, "threshold crossing at L shown in measured"});
}

void check_beamforming(std::vector<CheckResult>& out) {
    const UpaGeometry upa = make_upa(24, 16);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> az(0.0, kPi), el(0.0, kPi / 2.0), amp(0.1, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const int k = 1 << (i % 4);
        const double beta = amp(rng);
        const cplx gain = effective_channel_gain(upa, az(rng), el(rng), beta, k);
        const double expected = beta / std::sqrt(static_cast<double>(k));
        worst = std::max(worst, std::abs(gain - expected) / expected);
    }
    out.push_back({"beamforming_bridge_relative_error", worst <= 1e-12 ? CheckStatus::pass : CheckStatus::fail, worst, 0.0,
                   1e-12, "24x16 UPA; matched angles"});
    const double leak = std::abs(cross_channel_gain(upa, kPi / 2.0, 0.0, kPi / 6.0, kPi / 5.0, 1.0, 1));
    out.push_back({"beam_leakage_separated_target", CheckStatus::info, leak, 0.0, 0.0,
                   "|gain| relative to matched gain 1; beam (pi/2; 0) vs target (pi/6; pi/5)"});
}

void check_determinism(const ScenarioConfig& config, std::vector<CheckResult>& out) {
    TrialPlan plan = plan_for(config, kDeterminismCheck);
    plan.trials = std::min<long long>(plan.trials, 20'000);
    plan.workers = 1;
    const EmpiricalEstimate serial = mc_mean_snr(config.link, config.region, plan);
    plan.workers = 4;
    const EmpiricalEstimate parallel = mc_mean_snr(config.link, config.region, plan);
    const bool same = std::bit_cast<std::uint64_t>(serial.mean) == std::bit_cast<std::uint64_t>(parallel.mean) &&
                      std::bit_cast<std::uint64_t>(serial.half_width) == std::bit_cast<std::uint64_t>(parallel.half_width);
    out.push_back({"mc_worker_count_invariance", same ? CheckStatus::pass : CheckStatus::fail, parallel.mean - serial.mean,
                   0.0, 0.0, "1 vs 4 workers; bitwise"});
}

}  // namespace

int ValidationReport::exit_code() const {
    bool any_inconclusive = false;
    for (const CheckResult& c : checks) {
        if (c.status == CheckStatus::fail) return 1;
        any_inconclusive = any_inconclusive || c.status == CheckStatus::inconclusive;
    }
    return any_inconclusive ? 2 : 0;
}

double integrate_position_pdf(const SensingRegion& region, PdfMode mode) {
    using boost::math::quadrature::gauss_kronrod;
    constexpr unsigned kDepth = 8;
    constexpr double kTol = 1e-13;
    const auto over_range = [&](double elevation, double azimuth) {
        return gauss_kronrod<double, 31>::integrate(
            [&](double range) { return position_pdf(region, Position{range, elevation, azimuth}, mode); },
            region.min_range_km(), region.max_range_km, kDepth, kTol);
    };
    const auto over_elevation = [&](double azimuth) {
        return gauss_kronrod<double, 31>::integrate([&](double elevation) { return over_range(elevation, azimuth); },
                                                    0.0, region.max_elevation_rad, kDepth, kTol);
    };
    return gauss_kronrod<double, 31>::integrate(over_elevation, 0.0, kPi, kDepth, kTol);
}

ValidationReport run_validation(const ScenarioConfig& config, const ValidationOptions& options) {
    ValidationReport report;
    auto& out = report.checks;
    check_pdf(config, out);
    check_mean_snr(config, options, out);
    check_detection(config, out);
    check_integration(config, out);
    check_q_surrogate(out);
    check_solvers(config, out);
    check_trends(config, out);
    check_beamforming(out);
    check_determinism(config, out);
    return report;
}

std::string render_validation_csv(const ScenarioConfig& config, const ValidationReport& report) {
    std::string out = csv_preamble(config, "validate");
    out += "check,status,measured,expected,tolerance,detail\n";
    for (const CheckResult& c : report.checks) {
        std::string detail = c.detail;
        std::replace(detail.begin(), detail.end(), ',', ';');
        out += c.name + "," + to_string(c.status) + "," + format_sig6(c.measured) + "," + format_sig6(c.expected) + "," +
               format_sig6(c.tolerance) + "," + detail + "\n";
    }
    return out;
}

const char* to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
        case CheckStatus::info: return "info";
    }
    return "?";
}

}  // namespace isaccap
