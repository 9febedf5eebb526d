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

#ifndef ISACCAP_VALIDATION_HPP_
#define ISACCAP_VALIDATION_HPP_

#include <string>
#include <vector>

#include "isaccap/config.hpp"
#include "isaccap/region.hpp"

namespace isaccap {

enum class CheckStatus { pass, fail, inconclusive, info };

struct CheckResult {
    std::string name;
    CheckStatus status;
    double measured;
    double expected;
    double tolerance;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    // 0 when nothing failed or was inconclusive, 1 on any failure, else 2.
    int exit_code() const;
};

struct ValidationOptions {
    // Multiplies the path-loss constant seen by the Monte Carlo side only.
    // Used to show the closed-form check catches unit errors.
    double mc_pathloss_scale = 1.0;
};

// Triple Gauss-Kronrod integral of position_pdf over the region's support.
double integrate_position_pdf(const SensingRegion& region, PdfMode mode);

ValidationReport run_validation(const ScenarioConfig& config, const ValidationOptions& options = {});

std::string render_validation_csv(const ScenarioConfig& config, const ValidationReport& report);

const char* to_string(CheckStatus status);

}  // namespace isaccap

#endif  // ISACCAP_VALIDATION_HPP_
