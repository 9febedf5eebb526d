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

#ifndef ISACCAP_DETECTOR_HPP_
#define ISACCAP_DETECTOR_HPP_

#include <stdexcept>

namespace isaccap {

struct DetectionSpec {
    double pfa = 0.05;
    double pd_threshold = 0.95;
    double snr_threshold_db = 13.0;
};

// Enforces 0 < pfa < 0.5, 0.5 <= pd_threshold < 1 and a finite SNR threshold.
DetectionSpec make_detection_spec(double pfa, double pd_threshold, double snr_threshold_db);

// Q(x) ~= exp(-a x^2 - b x - c) on [0, 4].
struct QApproxCoefficients {
    double a = 0.3842;
    double b = 0.7640;
    double c = 0.6964;
};

enum class SurrogateMode { exact, rederived, paper_literal };

// Thrown when the exponential surrogate is asked for an argument outside
// [-4, 4]; callers fall back to the exact expression.
class OutOfSurrogateRegime : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Standard normal tail probability.
double q(double x);

// ln Q(x), accurate also where Q(x) is within rounding of 1.
double log_q(double x);

// Inverse of q on (0, 1); throws std::invalid_argument otherwise.
double q_inv(double p);

// gamma = sqrt(2 snr) Q^-1(pfa) - snr
double lrt_threshold(double snr, double pfa);

// Pr(ln Lambda > gamma | H0) = Q(gamma / sqrt(2 snr) + sqrt(snr / 2))
double false_alarm_probability(double snr, double threshold);

// Q(Q^-1(pfa) - sqrt(2 snr)); snr = 0 gives pfa.
double pd_single(double snr, double pfa);

// pd_single(mean_snr, pfa)^num_uavs
double joint_pd(double mean_snr, long long num_uavs, double pfa);

double q_exp_approx(double x, const QApproxCoefficients& coeffs = {});

// Surrogate for L ln Q(xi - sqrt(rho / L)) built from ln(1 - e^u) ~= -e^u.
// `rederived` expands the surrogate exponent symbolically; `paper_literal`
// uses the literal exponent
//   -0.3842 rho/L + (0.7684 xi - 0.764) sqrt(rho/L) + 0.3798 xi - 0.6964
// whose constant term does not match the expansion. Throws
// OutOfSurrogateRegime unless xi - sqrt(rho/L) lies in [-4, 0].
double log_joint_pd_surrogate(double rho, double xi, long long num_uavs, SurrogateMode mode,
                              const QApproxCoefficients& coeffs = {});

// L ln Q(xi - sqrt(rho / L)) evaluated exactly.
double log_joint_pd_exact(double rho, double xi, long long num_uavs);

}  // namespace isaccap

#endif  // ISACCAP_DETECTOR_HPP_
