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

// isaccap: sensing-capacity sweeps and validation from a key=value config.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isaccap/config.hpp"
#include "isaccap/sweep.hpp"
#include "isaccap/validation.hpp"

namespace {

struct Command {
    const char* name;
    const char* description;
    isaccap::SweepKind kind;
    isaccap::SweepView view;
};

constexpr Command kSweeps[] = {
    {"snr-vs-uavs", "Average SNR versus number of UAVs", isaccap::SweepKind::uav_count, isaccap::SweepView::snr},
    {"pd-vs-uavs", "Joint detection probability versus number of UAVs", isaccap::SweepKind::uav_count,
     isaccap::SweepView::pd},
    {"capacity-vs-radius", "Sensing capacity versus detection radius", isaccap::SweepKind::radius,
     isaccap::SweepView::capacity},
    {"capacity-vs-frames", "Sensing capacity versus number of frames", isaccap::SweepKind::frames,
     isaccap::SweepView::capacity},
    {"capacity-vs-power", "Sensing capacity versus transmit power", isaccap::SweepKind::tx_power,
     isaccap::SweepView::capacity},
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sensing capacity of an ISAC base station: sweeps and validation"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<long long> trials;
    std::optional<int> workers;
    std::vector<std::string> overrides;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value scenario file")->check(CLI::ExistingFile);
        sub->add_option("--out", out_path, "output CSV path (default: stdout)");
        sub->add_option("--seed", seed, "master seed");
        sub->add_option("--trials", trials, "Monte Carlo trials");
        sub->add_option("--workers", workers, "worker threads (results do not depend on it)");
        sub->add_option("--set", overrides, "override one key, e.g. --set radius_km=1.5");
    };

    std::vector<CLI::App*> sweep_apps;
    for (const Command& c : kSweeps) {
        CLI::App* sub = app.add_subcommand(c.name, c.description);
        add_common(sub);
        sweep_apps.push_back(sub);
    }
    CLI::App* validate_app = app.add_subcommand("validate", "Run the oracle suite and report pass/fail per check");
    add_common(validate_app);

    CLI11_PARSE(app, argc, argv);

    try {
        isaccap::KeyValues values;
        if (!config_path.empty()) values = isaccap::parse_key_values(read_file(config_path));
        const Command* sweep = nullptr;
        for (std::size_t i = 0; i < sweep_apps.size(); ++i) {
            if (sweep_apps[i]->parsed()) sweep = &kSweeps[i];
        }
        if (sweep != nullptr) values["sweep"] = isaccap::to_string(sweep->kind);
        if (seed) values["seed"] = std::to_string(*seed);
        if (trials) values["trials"] = std::to_string(*trials);
        if (workers) values["workers"] = std::to_string(*workers);
        for (const std::string& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) throw isaccap::ConfigError("--set expects key=value, got '" + kv + "'");
            values[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        const isaccap::ScenarioConfig config = isaccap::config_from_key_values(values);
        const std::string destination = out_path.empty() ? config.output : out_path;

        if (sweep != nullptr) {
            const auto rows = isaccap::run_sweep(config);
            write_output(destination, isaccap::render_sweep_csv(config, rows, sweep->view, sweep->name));
            return 0;
        }
        const isaccap::ValidationReport report = isaccap::run_validation(config);
        write_output(destination, isaccap::render_validation_csv(config, report));
        for (const auto& check : report.checks) {
            if (check.status == isaccap::CheckStatus::fail || check.status == isaccap::CheckStatus::inconclusive) {
                std::cerr << isaccap::to_string(check.status) << ": " << check.name << "\n";
            }
        }
        return report.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }
}
