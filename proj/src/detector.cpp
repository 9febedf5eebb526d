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

#include "isaccap/detector.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <numbers>
#include <string>

namespace isaccap {

DetectionSpec make_detection_spec(double pfa, double pd_threshold, double snr_threshold_db) {
    if (!(pfa > 0.0 && pfa < 0.5)) {
        throw std::invalid_argument("pfa must lie in (0, 0.5), got " + std::to_string(pfa));
    }
    if (!(pd_threshold >= 0.5 && pd_threshold < 1.0)) {
        throw std::invalid_argument("pd_threshold must lie in [0.5, 1), got " +
                                    std::to_string(pd_threshold));
    }
    if (!std::isfinite(snr_threshold_db)) {
        throw std::invalid_argument("snr_threshold_db must be finite");
    }
    return DetectionSpec{pfa, pd_threshold, snr_threshold_db};
}

double q(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double log_q(double x) {
    if (x < 0.0) return std::log1p(-q(-x));
    if (x > 30.0) {
        // asymptotic tail; q(x) underflows near x = 38
        const double r = 1.0 / (x * x);
        return -0.5 * x * x - std::log(x) - 0.5 * std::log(2.0 * std::numbers::pi) +
               std::log1p(r * (-1.0 + r * (3.0 + r * (-15.0 + 105.0 * r))));
    }
    return std::log(q(x));
}

double q_inv(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw std::invalid_argument("q_inv: probability must lie in (0, 1), got " + std::to_string(p));
    }
    return std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

double lrt_threshold(double snr, double pfa) {
    if (!(snr > 0.0)) throw std::invalid_argument("lrt_threshold: snr must be positive");
    return std::sqrt(2.0 * snr) * q_inv(pfa) - snr;
}

double false_alarm_probability(double snr, double threshold) {
    if (!(snr > 0.0)) throw std::invalid_argument("false_alarm_probability: snr must be positive");
    return q(threshold / std::sqrt(2.0 * snr) + std::sqrt(snr / 2.0));
}

double pd_single(double snr, double pfa) {
    if (!(snr >= 0.0)) throw std::invalid_argument("pd_single: snr must be non-negative");
    return q(q_inv(pfa) - std::sqrt(2.0 * snr));
}

double joint_pd(double mean_snr, long long num_uavs, double pfa) {
    if (num_uavs < 1) throw std::invalid_argument("joint_pd: num_uavs must be >= 1");
    return std::pow(pd_single(mean_snr, pfa), static_cast<double>(num_uavs));
}

double q_exp_approx(double x, const QApproxCoefficients& coeffs) {
    if (!(std::abs(x) <= 4.0)) {
        throw OutOfSurrogateRegime("q_exp_approx: |x| must not exceed 4, got " + std::to_string(x));
    }
    if (x >= 0.0) return std::exp(-coeffs.a * x * x - coeffs.b * x - coeffs.c);
    return 1.0 - std::exp(-coeffs.a * x * x + coeffs.b * x - coeffs.c);
}

double log_joint_pd_surrogate(double rho, double xi, long long num_uavs, SurrogateMode mode,
                              const QApproxCoefficients& coeffs) {
    if (!(rho > 0.0)) throw std::invalid_argument("surrogate: rho must be positive");
    if (num_uavs < 1) throw std::invalid_argument("surrogate: num_uavs must be >= 1");
    const double l = static_cast<double>(num_uavs);
    const double s = std::sqrt(rho / l);
    const double x = xi - s;
    if (!(x >= -4.0 && x <= 0.0)) {
        throw OutOfSurrogateRegime("surrogate: xi - sqrt(rho/L) = " + std::to_string(x) +
                                   " outside [-4, 0]");
    }
    double exponent = 0.0;
    switch (mode) {
        case SurrogateMode::rederived:
            exponent = -coeffs.a * rho / l + (2.0 * coeffs.a * xi - coeffs.b) * s -
                       coeffs.a * xi * xi + coeffs.b * xi - coeffs.c;
            break;
        case SurrogateMode::paper_literal:
            exponent = -0.3842 * rho / l + (0.7684 * xi - 0.764) * s + 0.3798 * xi - 0.6964;
            break;
        case SurrogateMode::exact:
            return log_joint_pd_exact(rho, xi, num_uavs);
    }
    return -l * std::exp(exponent);
}

double log_joint_pd_exact(double rho, double xi, long long num_uavs) {
    if (num_uavs < 1) throw std::invalid_argument("log_joint_pd_exact: num_uavs must be >= 1");
    const double l = static_cast<double>(num_uavs);
    return l * log_q(xi - std::sqrt(rho / l));
}

}  // namespace isaccap
