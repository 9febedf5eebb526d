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

#include "isaccap/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "isaccap/units.hpp"

namespace isaccap {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void fail(const std::string& key, const std::string& message) {
    throw ConfigError("config key '" + key + "': " + message);
}

double parse_number(const std::string& key, const std::string& text) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        fail(key, "expected a finite number, got '" + text + "'");
    }
    return value;
}

long long parse_integer(const std::string& key, const std::string& text) {
    long long value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) fail(key, "expected an integer, got '" + text + "'");
    return value;
}

std::uint64_t parse_seed(const std::string& key, const std::string& text) {
    std::uint64_t value = 0;
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) fail(key, "expected an unsigned 64-bit integer, got '" + text + "'");
    return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    fail(key, "expected true or false, got '" + text + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::string t = trim(item);
        if (!t.empty()) out.push_back(parse_number(key, t));
    }
    return out;
}

bool is_integral(double v) { return std::floor(v) == v; }

template <class Enum>
Enum parse_enum(const std::string& key, const std::string& text,
                std::initializer_list<std::pair<const char*, Enum>> options) {
    std::string allowed;
    for (const auto& [name, value] : options) {
        if (text == name) return value;
        allowed += allowed.empty() ? name : std::string(", ") + name;
    }
    fail(key, "expected one of {" + allowed + "}, got '" + text + "'");
}

SweepRange default_range(SweepKind kind) {
    switch (kind) {
        case SweepKind::uav_count: return {1.0, 60.0, 1.0};
        case SweepKind::radius: return {0.5, 2.0, 0.25};
        case SweepKind::frames: return {1.0, 10.0, 1.0};
        case SweepKind::tx_power: return {50.0, 58.0, 1.0};
    }
    return {1.0, 1.0, 1.0};
}

std::vector<double> default_series(SweepKind kind) {
    switch (kind) {
        case SweepKind::uav_count: return {1.0, 3.0, 5.0};      // frames per curve
        case SweepKind::radius: return {50.0, 54.0, 58.0};      // tx power per curve
        default: return {};
    }
}

std::string format_list(const std::vector<double>& values) {
    std::string out;
    for (double v : values) {
        if (!out.empty()) out += ",";
        out += format_double(v);
    }
    return out;
}

}  // namespace

CapacityQuery ScenarioConfig::query() const {
    return CapacityQuery{link, region, total_symbols(), spec, snr_mode, surrogate_mode};
}

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

KeyValues parse_key_values(std::string_view text) {
    KeyValues out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value', got '" + body + "'");
        }
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        if (!out.emplace(key, value).second) fail(key, "duplicate key");
    }
    return out;
}

ScenarioConfig config_from_key_values(const KeyValues& values) {
    ScenarioConfig c;
    std::set<std::string> seen;
    const auto get = [&](const char* key) -> std::optional<std::string> {
        seen.insert(key);
        const auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        return it->second;
    };
    const auto number = [&](const char* key, double& target) {
        if (auto v = get(key)) target = parse_number(key, *v);
    };
    const auto count = [&](const char* key, auto& target, long long min) {
        if (auto v = get(key)) {
            const long long n = parse_integer(key, *v);
            if (n < min) fail(key, "must be >= " + std::to_string(min) + ", got " + *v);
            target = static_cast<std::remove_reference_t<decltype(target)>>(n);
        }
    };

    number("tx_power_dbm", c.link.tx_power_dbm);
    number("combined_gain_db", c.link.combined_gain_db);
    number("noise_density_dbm_hz", c.noise_density_dbm_hz);
    number("bandwidth_mhz", c.bandwidth_mhz);
    if (!(c.bandwidth_mhz > 0.0)) fail("bandwidth_mhz", "must be positive");
    c.link.noise_power_dbm = noise_power_dbm(c.noise_density_dbm_hz, c.bandwidth_mhz * 1e6);
    number("noise_power_dbm", c.link.noise_power_dbm);
    number("carrier_freq_mhz", c.link.carrier_freq_mhz);
    if (!(c.link.carrier_freq_mhz > 0.0)) fail("carrier_freq_mhz", "must be positive");
    number("rcs_m2", c.link.rcs_m2);
    if (!(c.link.rcs_m2 > 0.0)) fail("rcs_m2", "must be positive");
    count("uavs_per_symbol", c.link.uavs_per_symbol, 1);
    count("cpi_symbols", c.link.cpi_symbols, 1);

    double radius = c.region.max_range_km;
    double ratio = c.region.radius_ratio;
    double elevation = c.region.max_elevation_rad;
    number("radius_km", radius);
    number("radius_ratio", ratio);
    number("max_elevation_rad", elevation);
    if (!(radius > 0.0)) fail("radius_km", "must be positive");
    if (!(ratio > 1.0)) fail("radius_ratio", "must exceed 1");
    if (!(elevation > 0.0 && elevation <= kPi / 2.0)) fail("max_elevation_rad", "must lie in (0, pi/2]");
    c.region = make_region(radius, ratio, elevation);

    number("pfa", c.spec.pfa);
    if (!(c.spec.pfa > 0.0 && c.spec.pfa < 0.5)) fail("pfa", "must lie in (0, 0.5), got " + format_double(c.spec.pfa));
    number("pd_threshold", c.spec.pd_threshold);
    if (!(c.spec.pd_threshold >= 0.5 && c.spec.pd_threshold < 1.0)) {
        fail("pd_threshold", "must lie in [0.5, 1), got " + format_double(c.spec.pd_threshold));
    }
    number("snr_threshold_db", c.spec.snr_threshold_db);

    count("frames", c.frames, 1);
    count("symbols_per_frame", c.symbols_per_frame, 1);

    if (auto v = get("sweep")) {
        c.sweep = parse_enum<SweepKind>("sweep", *v,
                                        {{"uav_count", SweepKind::uav_count},
                                         {"radius", SweepKind::radius},
                                         {"frames", SweepKind::frames},
                                         {"tx_power", SweepKind::tx_power}});
    }
    c.range = default_range(c.sweep);
    number("sweep_start", c.range.start);
    number("sweep_stop", c.range.stop);
    number("sweep_step", c.range.step);
    if (!(c.range.step > 0.0)) fail("sweep_step", "must be positive");
    if (!(c.range.stop >= c.range.start)) fail("sweep_stop", "must be >= sweep_start");
    c.series = default_series(c.sweep);
    if (auto v = get("series")) c.series = parse_list("series", *v);

    const bool counts = c.sweep == SweepKind::uav_count || c.sweep == SweepKind::frames;
    if (counts && (!is_integral(c.range.start) || !is_integral(c.range.step) || c.range.start < 1.0)) {
        fail("sweep_start", "count sweeps need integer start >= 1 and integer step");
    }
    if (c.sweep == SweepKind::radius && !(c.range.start > 0.0)) fail("sweep_start", "radius must be positive");
    if (c.sweep == SweepKind::uav_count) {
        for (double f : c.series) {
            if (!is_integral(f) || f < 1.0) fail("series", "frame counts must be integers >= 1");
        }
    }

    if (auto v = get("snr_mode")) {
        c.snr_mode = parse_enum<PdfMode>("snr_mode", *v,
                                         {{"normalized", PdfMode::normalized}, {"paper_literal", PdfMode::paper_literal}});
    }
    if (auto v = get("surrogate_mode")) {
        c.surrogate_mode = parse_enum<SurrogateMode>("surrogate_mode", *v,
                                                     {{"exact", SurrogateMode::exact},
                                                      {"rederived", SurrogateMode::rederived},
                                                      {"paper_literal", SurrogateMode::paper_literal}});
    }

    count("trials", c.plan.trials, 1);
    if (auto v = get("seed")) c.plan.master_seed = parse_seed("seed", *v);
    number("confidence", c.plan.confidence);
    if (!(c.plan.confidence > 0.0 && c.plan.confidence < 1.0)) fail("confidence", "must lie in (0, 1)");
    if (auto v = get("sampling")) {
        c.plan.sampling = parse_enum<SpatialSampling>(
            "sampling", *v, {{"stratified", SpatialSampling::stratified}, {"iid", SpatialSampling::iid}});
    }
    count("batches", c.plan.batches, 2);
    count("workers", c.plan.workers, 1);
    if (auto v = get("monte_carlo")) c.monte_carlo = parse_bool("monte_carlo", *v);
    if (auto v = get("output")) c.output = *v;

    for (const auto& [key, value] : values) {
        if (!seen.contains(key)) throw ConfigError("config key '" + key + "': unknown key");
    }
    return c;
}

ScenarioConfig parse_config(std::string_view text) { return config_from_key_values(parse_key_values(text)); }

std::vector<std::pair<std::string, std::string>> resolved_key_values(const ScenarioConfig& c) {
    return {
        {"tx_power_dbm", format_double(c.link.tx_power_dbm)},
        {"combined_gain_db", format_double(c.link.combined_gain_db)},
        {"noise_density_dbm_hz", format_double(c.noise_density_dbm_hz)},
        {"bandwidth_mhz", format_double(c.bandwidth_mhz)},
        {"noise_power_dbm", format_double(c.link.noise_power_dbm)},
        {"carrier_freq_mhz", format_double(c.link.carrier_freq_mhz)},
        {"rcs_m2", format_double(c.link.rcs_m2)},
        {"uavs_per_symbol", std::to_string(c.link.uavs_per_symbol)},
        {"cpi_symbols", std::to_string(c.link.cpi_symbols)},
        {"radius_km", format_double(c.region.max_range_km)},
        {"radius_ratio", format_double(c.region.radius_ratio)},
        {"max_elevation_rad", format_double(c.region.max_elevation_rad)},
        {"pfa", format_double(c.spec.pfa)},
        {"pd_threshold", format_double(c.spec.pd_threshold)},
        {"snr_threshold_db", format_double(c.spec.snr_threshold_db)},
        {"frames", std::to_string(c.frames)},
        {"symbols_per_frame", std::to_string(c.symbols_per_frame)},
        {"sweep", to_string(c.sweep)},
        {"sweep_start", format_double(c.range.start)},
        {"sweep_stop", format_double(c.range.stop)},
        {"sweep_step", format_double(c.range.step)},
        {"series", format_list(c.series)},
        {"snr_mode", to_string(c.snr_mode)},
        {"surrogate_mode", to_string(c.surrogate_mode)},
        {"trials", std::to_string(c.plan.trials)},
        {"seed", std::to_string(c.plan.master_seed)},
        {"confidence", format_double(c.plan.confidence)},
        {"sampling", to_string(c.plan.sampling)},
        {"batches", std::to_string(c.plan.batches)},
        {"monte_carlo", c.monte_carlo ? "true" : "false"},
    };
}

std::vector<double> sweep_points(const ScenarioConfig& c) {
    const auto n = static_cast<long long>(std::floor((c.range.stop - c.range.start) / c.range.step + 1e-9)) + 1;
    std::vector<double> points;
    points.reserve(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) points.push_back(c.range.start + static_cast<double>(i) * c.range.step);
    return points;
}

const char* to_string(SweepKind kind) {
    switch (kind) {
        case SweepKind::uav_count: return "uav_count";
        case SweepKind::radius: return "radius";
        case SweepKind::frames: return "frames";
        case SweepKind::tx_power: return "tx_power";
    }
    return "?";
}

const char* to_string(PdfMode mode) { return mode == PdfMode::normalized ? "normalized" : "paper_literal"; }

const char* to_string(SurrogateMode mode) {
    switch (mode) {
        case SurrogateMode::exact: return "exact";
        case SurrogateMode::rederived: return "rederived";
        case SurrogateMode::paper_literal: return "paper_literal";
    }
    return "?";
}

const char* to_string(SpatialSampling sampling) {
    return sampling == SpatialSampling::stratified ? "stratified" : "iid";
}

}  // namespace isaccap
