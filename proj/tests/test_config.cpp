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
#include <string>

#include "isaccap/config.hpp"
#include "isaccap/units.hpp"

using namespace isaccap;

namespace {

std::string error_of(std::string_view text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

KeyValues as_map(const std::vector<std::pair<std::string, std::string>>& kv) { return {kv.begin(), kv.end()}; }

}  // namespace

TEST_CASE("empty document yields the reference setup") {
    const ScenarioConfig c = parse_config("");
    CHECK(c.link.tx_power_dbm == 58.0);
    CHECK(c.link.combined_gain_db == 22.5);
    CHECK(c.link.noise_power_dbm == doctest::Approx(-94.0).epsilon(1e-14));
    CHECK(c.link.carrier_freq_mhz == 4900.0);
    CHECK(c.link.rcs_m2 == 0.01);
    CHECK(c.link.uavs_per_symbol == 1);
    CHECK(c.link.cpi_symbols == 3);
    CHECK(c.region.max_range_km == 1.0);
    CHECK(c.region.radius_ratio == 10.0);
    CHECK(c.region.max_elevation_rad == doctest::Approx(kPi / 5.0).epsilon(1e-15));
    CHECK(c.spec.pfa == 0.05);
    CHECK(c.spec.pd_threshold == 0.95);
    CHECK(c.spec.snr_threshold_db == 13.0);
    CHECK(c.total_symbols() == 14);
    CHECK(c.snr_mode == PdfMode::normalized);
    CHECK(c.surrogate_mode == SurrogateMode::exact);
    CHECK_FALSE(c.monte_carlo);
    CHECK(sweep_points(c).size() == 60);
}

TEST_CASE("comments, whitespace and overrides") {
    const ScenarioConfig c = parse_config(
        "# scenario\n"
        "  tx_power_dbm = 50   # lower power\n"
        "\n"
        "noise_power_dbm=-90\n"
        "frames = 4\r\n"
        "snr_mode = paper_literal\n");
    CHECK(c.link.tx_power_dbm == 50.0);
    CHECK(c.link.noise_power_dbm == -90.0);
    CHECK(c.total_symbols() == 56);
    CHECK(c.snr_mode == PdfMode::paper_literal);
    const ScenarioConfig b = parse_config("bandwidth_mhz = 10");
    CHECK(b.link.noise_power_dbm == doctest::Approx(-104.0).epsilon(1e-14));
}

TEST_CASE("out-of-range values name the key and the bound") {
    const std::string msg = error_of("pfa = 1.5");
    CHECK(msg.find("pfa") != std::string::npos);
    CHECK(msg.find("0.5") != std::string::npos);
    CHECK(msg.find("1.5") != std::string::npos);
    CHECK(error_of("pd_threshold = 1").find("pd_threshold") != std::string::npos);
    CHECK(error_of("radius_km = -1").find("radius_km") != std::string::npos);
    CHECK(error_of("radius_ratio = 1").find("radius_ratio") != std::string::npos);
    CHECK(error_of("trials = 0").find("trials") != std::string::npos);
    CHECK(error_of("frames = 2.5").find("frames") != std::string::npos);
    CHECK(error_of("tx_power_dbm = abc").find("tx_power_dbm") != std::string::npos);
    CHECK(error_of("snr_mode = bogus").find("snr_mode") != std::string::npos);
    CHECK(error_of("monte_carlo = maybe").find("monte_carlo") != std::string::npos);
    CHECK(error_of("sweep = radius\nsweep_start = 2\nsweep_stop = 1").find("sweep_stop") != std::string::npos);
}

TEST_CASE("structural errors") {
    CHECK(error_of("colour = blue").find("'colour': unknown key") != std::string::npos);
    CHECK(error_of("frames = 1\nframes = 2").find("duplicate") != std::string::npos);
    CHECK(error_of("frames 1").find("line 1") != std::string::npos);
    CHECK(error_of("= 3").find("empty key") != std::string::npos);
}

TEST_CASE("sweep kinds carry their own defaults") {
    const ScenarioConfig radius = parse_config("sweep = radius");
    const std::vector<double> pts = sweep_points(radius);
    REQUIRE(pts.size() == 7);
    CHECK(pts.front() == 0.5);
    CHECK(pts.back() == 2.0);
    CHECK(radius.series == std::vector<double>{50.0, 54.0, 58.0});
    CHECK(parse_config("").series == std::vector<double>{1.0, 3.0, 5.0});
    CHECK(sweep_points(parse_config("sweep = frames")).size() == 10);
    CHECK(sweep_points(parse_config("sweep = tx_power")).size() == 9);
    CHECK(sweep_points(parse_config("sweep = tx_power\nsweep_step = 0.1")).size() == 81);
}

TEST_CASE("resolved listing round-trips") {
    const char* docs[] = {"", "sweep = radius\nseries = 52, 56", "frames = 3\npfa = 0.01\nseed = 12345\nsampling = iid",
                          "sweep = tx_power\nsurrogate_mode = rederived\nmonte_carlo = true\nmax_elevation_rad = 0.1"};
    for (const char* doc : docs) {
        const ScenarioConfig c = parse_config(doc);
        const auto listing = resolved_key_values(c);
        const ScenarioConfig again = config_from_key_values(as_map(listing));
        CHECK(resolved_key_values(again) == listing);
        for (const auto& [k, v] : listing) {
            CHECK(k != "workers");
            CHECK(k != "output");
        }
    }
}

TEST_CASE("format_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, -94.0, 1e-300, 6.02e23, kPi / 5.0}) {
        CHECK(std::stod(format_double(v)) == v);
    }
    CHECK(format_double(58.0) == "58");
}
