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

#include "isaccap/monte_carlo.hpp"

#include <atomic>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "isaccap/detector.hpp"
#include "isaccap/units.hpp"

namespace isaccap {

namespace {

constexpr long long kBlockSize = 4096;

enum Stream : std::uint64_t {
    kSpatial = 1,
    kNullHypothesis = 2,
    kAltHypothesis = 3,
    kIntegration = 4,
};

// Running mean / sum of squared deviations (Welford), mergeable (Chan).
struct Moments {
    long long n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    void merge(const Moments& other) {
        if (other.n == 0) return;
        if (n == 0) {
            *this = other;
            return;
        }
        const double total = static_cast<double>(n + other.n);
        const double delta = other.mean - mean;
        mean += delta * static_cast<double>(other.n) / total;
        m2 += other.m2 + delta * delta * static_cast<double>(n) * static_cast<double>(other.n) / total;
        n += other.n;
    }

    double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
};

template <class F>
void for_each_block(std::size_t blocks, int workers, F&& work) {
    const auto threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), blocks);
    if (threads <= 1) {
        for (std::size_t b = 0; b < blocks; ++b) work(b);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t b = next.fetch_add(1); b < blocks; b = next.fetch_add(1)) work(b);
        });
    }
}

std::size_t block_count(long long trials) {
    return static_cast<std::size_t>((trials + kBlockSize - 1) / kBlockSize);
}

long long block_length(long long trials, std::size_t block) {
    const long long start = static_cast<long long>(block) * kBlockSize;
    return std::min(kBlockSize, trials - start);
}

// Independent per-block moments, merged in block order.
template <class Sample>
Moments run_blocks(long long trials, int workers, Sample&& sample_block) {
    const std::size_t blocks = block_count(trials);
    std::vector<Moments> partial(blocks);
    for_each_block(blocks, workers, [&](std::size_t b) { partial[b] = sample_block(b, block_length(trials, b)); });
    Moments total;
    for (const Moments& m : partial) total.merge(m);
    return total;
}

double normal_quantile(double confidence) { return q_inv((1.0 - confidence) / 2.0); }

EmpiricalEstimate iid_estimate(const Moments& m, double confidence) {
    EmpiricalEstimate e;
    e.mean = m.mean;
    e.trials = m.n;
    if (m.n < 2) {
        e.std_error = e.half_width = std::numeric_limits<double>::infinity();
        return e;
    }
    e.std_error = std::sqrt(m.variance() / static_cast<double>(m.n));
    e.half_width = normal_quantile(confidence) * e.std_error;
    return e;
}

EmpiricalEstimate proportion_estimate(long long hits, long long trials, double confidence) {
    EmpiricalEstimate e;
    e.trials = trials;
    e.mean = static_cast<double>(hits) / static_cast<double>(trials);
    e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(trials));
    e.half_width = normal_quantile(confidence) * e.std_error;
    return e;
}

// Averages `uavs` per-UAV SNRs; `range_uniform(k)` supplies the range CDF
// coordinate of UAV k.
template <class Rng, class RangeUniform>
double trial_mean_snr(const RadarLinkParams& link, const SensingRegion& region, double symbols,
                      long long uavs, Rng& rng, RangeUniform&& range_uniform) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double acc = 0.0;
    for (long long k = 0; k < uavs; ++k) {
        const double u_range = range_uniform(k);
        const double u_elevation = unit(rng);
        const double u_azimuth = unit(rng);
        const Position pos = position_from_uniforms(region, u_range, u_elevation, u_azimuth);
        acc += per_uav_snr(link, pos.range_km, symbols);
    }
    return acc / static_cast<double>(uavs);
}

EmpiricalEstimate spatial_snr(const RadarLinkParams& link, const SensingRegion& region, double symbols,
                              long long uavs, const TrialPlan& plan) {
    validate(plan);
    validate(link);
    if (plan.sampling == SpatialSampling::iid) {
        const Moments m = run_blocks(plan.trials, plan.workers, [&](std::size_t b, long long len) {
            std::mt19937_64 rng(derive_seed(plan.master_seed, kSpatial, b));
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            Moments local;
            for (long long i = 0; i < len; ++i) {
                local.add(trial_mean_snr(link, region, symbols, uavs, rng, [&](long long) { return unit(rng); }));
            }
            return local;
        });
        return iid_estimate(m, plan.confidence);
    }

    const long long batches = std::min<long long>(plan.batches, plan.trials);
    std::vector<double> batch_mean(static_cast<std::size_t>(batches));
    std::vector<long long> batch_size(static_cast<std::size_t>(batches));
    for (long long b = 0; b < batches; ++b) {
        batch_size[static_cast<std::size_t>(b)] = plan.trials / batches + (b < plan.trials % batches ? 1 : 0);
    }
    for_each_block(static_cast<std::size_t>(batches), plan.workers, [&](std::size_t b) {
        std::mt19937_64 rng(derive_seed(plan.master_seed, kSpatial, b));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const long long size = batch_size[b];
        Moments local;
        for (long long j = 0; j < size; ++j) {
            local.add(trial_mean_snr(link, region, symbols, uavs, rng, [&](long long) {
                return (static_cast<double>(j) + unit(rng)) / static_cast<double>(size);
            }));
        }
        batch_mean[b] = local.mean;
    });

    EmpiricalEstimate e;
    e.trials = plan.trials;
    Moments spread;
    double weighted = 0.0;
    for (std::size_t b = 0; b < batch_mean.size(); ++b) {
        weighted += batch_mean[b] * static_cast<double>(batch_size[b]);
        spread.add(batch_mean[b]);
    }
    e.mean = weighted / static_cast<double>(plan.trials);
    if (batches < 2) {
        e.std_error = e.half_width = std::numeric_limits<double>::infinity();
        return e;
    }
    e.std_error = std::sqrt(spread.variance() / static_cast<double>(batches));
    const boost::math::students_t t(static_cast<double>(batches - 1));
    e.half_width = boost::math::quantile(boost::math::complement(t, (1.0 - plan.confidence) / 2.0)) * e.std_error;
    return e;
}

// Sum of `symbols` draws of CN(mean, variance).
template <class Rng>
std::complex<double> integrate(double mean, double variance, int symbols, Rng& rng) {
    std::normal_distribution<double> component(0.0, std::sqrt(variance / 2.0));
    std::complex<double> acc{0.0, 0.0};
    for (int n = 0; n < symbols; ++n) acc += std::complex<double>(mean + component(rng), component(rng));
    return acc;
}

}  // namespace

void validate(const TrialPlan& plan) {
    if (plan.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!(plan.confidence > 0.0 && plan.confidence < 1.0)) {
        throw std::invalid_argument("confidence must lie in (0, 1)");
    }
    if (plan.workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (plan.batches < 2) throw std::invalid_argument("batches must be >= 2");
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t stream, std::uint64_t index) {
    // splitmix64 finalizer over a mixed counter
    std::uint64_t z = master_seed ^ (stream * 0x9E3779B97F4A7C15ull) ^ (index * 0xD1B54A32D192ED03ull);
    for (int round = 0; round < 2; ++round) {
        z += 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
    }
    return z;
}

EmpiricalEstimate mc_mean_snr(const RadarLinkParams& link, const SensingRegion& region,
                              const TrialPlan& plan) {
    return spatial_snr(link, region, static_cast<double>(link.cpi_symbols), 1, plan);
}

EmpiricalEstimate mc_mean_multi_uav_snr(const RadarLinkParams& link, const SensingRegion& region,
                                        long long total_symbols, long long num_uavs,
                                        const TrialPlan& plan) {
    if (total_symbols < 1) throw std::invalid_argument("total_symbols must be >= 1");
    if (num_uavs < 1) throw std::invalid_argument("num_uavs must be >= 1");
    const double symbols = static_cast<double>(total_symbols) * link.uavs_per_symbol /
                           static_cast<double>(num_uavs);
    return spatial_snr(link, region, symbols, num_uavs, plan);
}

DetectionRates mc_detection_rates(double snr, double pfa, int cpi_symbols, const TrialPlan& plan) {
    if (!(snr > 0.0)) throw std::invalid_argument("mc_detection_rates: snr must be positive");
    return mc_detection_rates_at_threshold(snr, lrt_threshold(snr, pfa), cpi_symbols, plan);
}

DetectionRates mc_detection_rates_at_threshold(double snr, double threshold, int cpi_symbols,
                                               const TrialPlan& plan) {
    if (!(snr > 0.0)) throw std::invalid_argument("mc_detection_rates: snr must be positive");
    if (cpi_symbols < 1) throw std::invalid_argument("cpi_symbols must be >= 1");
    validate(plan);

    // Unit noise power per symbol; the per-symbol amplitude gives the requested
    // post-integration SNR N A^2.
    const double n = static_cast<double>(cpi_symbols);
    const double amplitude = std::sqrt(snr / n);
    const double mu = n * amplitude;
    const auto log_lr = [&](std::complex<double> y) { return (2.0 * (std::conj(y) * mu).real() - mu * mu) / n; };

    const auto count = [&](Stream stream, double mean) {
        const std::size_t blocks = block_count(plan.trials);
        std::vector<long long> hits(blocks, 0);
        for_each_block(blocks, plan.workers, [&](std::size_t b) {
            std::mt19937_64 rng(derive_seed(plan.master_seed, stream, b));
            const long long len = block_length(plan.trials, b);
            long long local = 0;
            for (long long i = 0; i < len; ++i) {
                if (log_lr(integrate(mean, 1.0, cpi_symbols, rng)) > threshold) ++local;
            }
            hits[b] = local;
        });
        long long total = 0;
        for (long long h : hits) total += h;
        return total;
    };

    DetectionRates rates;
    rates.pfa = proportion_estimate(count(kNullHypothesis, 0.0), plan.trials, plan.confidence);
    rates.pd = proportion_estimate(count(kAltHypothesis, amplitude), plan.trials, plan.confidence);
    return rates;
}

EmpiricalEstimate mc_integration_energy(const RadarLinkParams& link, double path_amplitude,
                                        const TrialPlan& plan) {
    if (!(path_amplitude >= 0.0)) throw std::invalid_argument("path amplitude must be non-negative");
    validate(link);
    validate(plan);
    const double kappa = db_to_linear(link.combined_gain_db);
    const double signal = kappa * std::sqrt(dbm_to_watts(link.tx_power_dbm) / link.uavs_per_symbol) * path_amplitude;
    const double noise = dbm_to_watts(link.noise_power_dbm);
    const Moments m = run_blocks(plan.trials, plan.workers, [&](std::size_t b, long long len) {
        std::mt19937_64 rng(derive_seed(plan.master_seed, kIntegration, b));
        Moments local;
        for (long long i = 0; i < len; ++i) local.add(std::norm(integrate(signal, noise, link.cpi_symbols, rng)));
        return local;
    });
    return iid_estimate(m, plan.confidence);
}

double expected_integration_energy(const RadarLinkParams& link, double path_amplitude) {
    const double kappa = db_to_linear(link.combined_gain_db);
    const double n = static_cast<double>(link.cpi_symbols);
    return kappa * kappa * dbm_to_watts(link.tx_power_dbm) / link.uavs_per_symbol * n * n *
               path_amplitude * path_amplitude +
           n * dbm_to_watts(link.noise_power_dbm);
}

EmpiricalEstimate mc_integration_snr(const RadarLinkParams& link, double path_amplitude,
                                     const TrialPlan& plan) {
    const EmpiricalEstimate with_target = mc_integration_energy(link, path_amplitude, plan);
    const EmpiricalEstimate noise_only = mc_integration_energy(link, 0.0, plan);
    EmpiricalEstimate e;
    e.trials = plan.trials;
    e.mean = with_target.mean / noise_only.mean - 1.0;
    const double d_signal = with_target.std_error / noise_only.mean;
    const double d_noise = with_target.mean * noise_only.std_error / (noise_only.mean * noise_only.mean);
    e.std_error = std::hypot(d_signal, d_noise);
    e.half_width = normal_quantile(plan.confidence) * e.std_error;
    return e;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 paired points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += std::log(x[i]);
        my += std::log(y[i]);
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(y.size());
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = std::log(x[i]) - mx;
        sxy += dx * (std::log(y[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

}  // namespace isaccap
