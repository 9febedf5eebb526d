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

#include "isaccap/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <exception>

#include "isaccap/detector.hpp"
#include "isaccap/link_budget.hpp"
#include "isaccap/units.hpp"

namespace isaccap {

namespace {

constexpr std::uint64_t kRowSeedStream = 0x5EE9;

double surrogate_pd(double rho, double xi, long long uavs, SurrogateMode mode) {
    const double x = xi - std::sqrt(rho / static_cast<double>(uavs));
    if (!(x >= -4.0 && x <= 0.0)) return kNaN;
    return std::exp(log_joint_pd_surrogate(rho, xi, uavs, mode));
}

void fill_uav_row(const ScenarioConfig& config, std::size_t series_index, SweepRow& row) {
    const auto frames = static_cast<long long>(row.series);
    const long long symbols = total_symbols_for_frames(frames, config.symbols_per_frame);
    const auto uavs = static_cast<long long>(row.value);
    row.snr_normalized = mean_multi_uav_snr(config.link, config.region, symbols, uavs, PdfMode::normalized);
    row.snr_paper_literal = mean_multi_uav_snr(config.link, config.region, symbols, uavs, PdfMode::paper_literal);
    row.snr = config.snr_mode == PdfMode::normalized ? row.snr_normalized : row.snr_paper_literal;
    row.joint_pd = joint_pd(row.snr, uavs, config.spec.pfa);
    const double rho = 2.0 * row.snr * static_cast<double>(uavs);
    const double xi = q_inv(config.spec.pfa);
    row.surrogate_pd_rederived = surrogate_pd(rho, xi, uavs, SurrogateMode::rederived);
    row.surrogate_pd_paper_literal = surrogate_pd(rho, xi, uavs, SurrogateMode::paper_literal);
    if (config.monte_carlo) {
        TrialPlan plan = config.plan;
        plan.master_seed = derive_seed(config.plan.master_seed, kRowSeedStream + series_index,
                                       static_cast<std::uint64_t>(uavs));
        row.mc_snr = mc_mean_multi_uav_snr(config.link, config.region, symbols, uavs, plan);
    }
}

void fill_capacity_row(const ScenarioConfig& config, SweepRow& row) {
    ScenarioConfig point = config;
    switch (config.sweep) {
        case SweepKind::radius:
            point.region = make_region(row.value, config.region.radius_ratio, config.region.max_elevation_rad);
            if (!std::isnan(row.series)) point.link.tx_power_dbm = row.series;
            break;
        case SweepKind::frames: point.frames = static_cast<long long>(row.value); break;
        case SweepKind::tx_power: point.link.tx_power_dbm = row.value; break;
        case SweepKind::uav_count: break;
    }
    CapacityQuery query = point.query();
    row.cap_snr = capacity_under_snr(query);
    query.surrogate_mode = SurrogateMode::exact;
    row.cap_pd_exact = capacity_under_pd(query);
    query.surrogate_mode = SurrogateMode::rederived;
    row.cap_pd_rederived = capacity_under_pd(query);
    query.surrogate_mode = SurrogateMode::paper_literal;
    row.cap_pd_paper_literal = capacity_under_pd(query);
    row.capacity = sensing_capacity(point.query());
}

const char* value_column(SweepKind kind) {
    switch (kind) {
        case SweepKind::uav_count: return "num_uavs";
        case SweepKind::radius: return "radius_km";
        case SweepKind::frames: return "frames";
        case SweepKind::tx_power: return "tx_power_dbm";
    }
    return "value";
}

const char* series_column(SweepKind kind) {
    switch (kind) {
        case SweepKind::uav_count: return "series_frames";
        case SweepKind::radius: return "series_tx_power_dbm";
        default: return nullptr;
    }
}

std::string db_cell(double linear) { return std::isnan(linear) ? std::string() : format_sig6(linear_to_db(linear)); }
std::string prob_cell(double p) { return std::isnan(p) ? std::string() : format_sig6(p); }

std::string sanitize(std::string s) {
    for (char& ch : s) {
        if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
    }
    return s;
}

}  // namespace

std::string format_sig6(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& config) {
    const std::vector<double> points = sweep_points(config);
    std::vector<double> series = config.series;
    if (series.empty() || (config.sweep != SweepKind::uav_count && config.sweep != SweepKind::radius)) {
        series = {kNaN};
    }
    std::vector<SweepRow> rows;
    rows.reserve(points.size() * series.size());
    for (std::size_t s = 0; s < series.size(); ++s) {
        for (double value : points) {
            SweepRow row;
            row.series = series[s];
            if (config.sweep == SweepKind::uav_count && std::isnan(row.series)) {
                row.series = static_cast<double>(config.frames);
            }
            row.value = value;
            try {
                if (config.sweep == SweepKind::uav_count) {
                    fill_uav_row(config, s, row);
                } else {
                    fill_capacity_row(config, row);
                }
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string csv_preamble(const ScenarioConfig& config, std::string_view command) {
    std::string out = "# isaccap ";
    out += command;
    out += '\n';
    for (const auto& [key, value] : resolved_key_values(config)) {
        out += "# " + key + "=" + value + "\n";
    }
    return out;
}

std::string render_sweep_csv(const ScenarioConfig& config, const std::vector<SweepRow>& rows, SweepView view,
                             std::string_view command) {
    std::string out = csv_preamble(config, command);
    const char* series = series_column(config.sweep);
    const bool has_series = series != nullptr && !config.series.empty();
    std::vector<std::string> header;
    if (has_series) header.emplace_back(series);
    header.emplace_back(value_column(config.sweep));
    switch (view) {
        case SweepView::snr:
            header.insert(header.end(), {"snr_db", "snr_db_normalized", "snr_db_paper_literal"});
            if (config.monte_carlo) header.insert(header.end(), {"mc_snr_db", "mc_ci_low_db", "mc_ci_high_db"});
            break;
        case SweepView::pd:
            header.insert(header.end(), {"snr_db", "joint_pd", "surrogate_pd_rederived", "surrogate_pd_paper_literal"});
            break;
        case SweepView::capacity:
            header.insert(header.end(), {"cap_snr", "snr_db_at_cap_snr", "cap_pd_exact", "joint_pd_at_cap_pd",
                                         "cap_pd_rederived", "cap_pd_paper_literal", "capacity", "binding"});
            break;
    }
    header.emplace_back("status");
    for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
    out += '\n';

    for (const SweepRow& row : rows) {
        std::vector<std::string> cells;
        if (has_series) cells.push_back(format_double(row.series));
        cells.push_back(format_double(row.value));
        const std::size_t data_columns = header.size() - cells.size() - 1;
        if (!row.ok()) {
            cells.resize(cells.size() + data_columns);
            cells.push_back("failed: " + sanitize(row.error));
        } else {
            switch (view) {
                case SweepView::snr:
                    cells.insert(cells.end(), {db_cell(row.snr), db_cell(row.snr_normalized), db_cell(row.snr_paper_literal)});
                    if (config.monte_carlo) {
                        const EmpiricalEstimate& mc = *row.mc_snr;
                        cells.insert(cells.end(), {db_cell(mc.mean), db_cell(mc.mean - mc.half_width),
                                                   db_cell(mc.mean + mc.half_width)});
                    }
                    break;
                case SweepView::pd:
                    cells.insert(cells.end(), {db_cell(row.snr), prob_cell(row.joint_pd),
                                               prob_cell(row.surrogate_pd_rederived),
                                               prob_cell(row.surrogate_pd_paper_literal)});
                    break;
                case SweepView::capacity:
                    cells.insert(cells.end(),
                                 {std::to_string(row.cap_snr.max_uavs), db_cell(row.cap_snr.achieved_snr),
                                  std::to_string(row.cap_pd_exact.max_uavs), prob_cell(row.cap_pd_exact.achieved_joint_pd),
                                  std::to_string(row.cap_pd_rederived.max_uavs),
                                  std::to_string(row.cap_pd_paper_literal.max_uavs),
                                  std::to_string(row.capacity.max_uavs), to_string(row.capacity.binding_constraint)});
                    break;
            }
            cells.emplace_back("ok");
        }
        for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
        out += '\n';
    }
    return out;
}

}  // namespace isaccap
