// Copyright 2026 The cavsq Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "config.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

using namespace cavsq_cli;

namespace {

json base() {
    return json::parse(R"({
        "cavity": {"T1": 3e-5, "T2": 4.533e-4, "kappa_hz": 520000},
        "atoms": {"gamma_hz": 184000, "eta": 1.8},
        "probe": {"n_atoms": 1000, "n_sc": 100}
    })");
}

std::string key_of(const json &tree) {
    try {
        resolve(tree);
    } catch (const ConfigError &e) {
        return e.key();
    }
    return "";
}

nlohmann::json unordered(const json &j) { return nlohmann::json::parse(j.dump()); }

std::string temp_file(const std::string &name, const std::string &text) {
    const std::string path = std::string(CAVSQ_TEST_TMP) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("frequencies in Hz become angular") {
    const auto c = resolve(base());
    CHECK(c.cavity.kappa == doctest::Approx(2 * M_PI * 520e3));
    CHECK(c.atoms.gamma == doctest::Approx(2 * M_PI * 184e3));
    CHECK(c.cavity.finesse == doctest::Approx(2 * M_PI / (3e-5 + 4.533e-4)));
    CHECK(c.probe.budget_kind == CAVSQ_BUDGET_N_SC);
    CHECK(c.probe.budget == 100);
}

TEST_CASE("unknown keys and sections are rejected with their path") {
    json t = base();
    t["probe"]["n_scc"] = 1;
    CHECK(key_of(t) == "probe.n_scc");
    t = base();
    t["optics"] = json::object();
    CHECK(key_of(t) == "optics");
}

TEST_CASE("type and range errors name the key") {
    json t = base();
    t["cavity"]["T1"] = "high";
    CHECK(key_of(t) == "cavity.T1");
    t = base();
    t["probe"]["q_eff"] = 1.5;
    CHECK(key_of(t) == "probe.q_eff");
    t = base();
    t["probe"]["n_in"] = 10;
    CHECK(key_of(t) == "probe.n_sc");
    t = base();
    t["atoms"]["eta_down_ratio"] = 0.5;
    CHECK(key_of(t) == "atoms.delta_z_hz");
    t["probe"]["model"] = "three-level";
    CHECK(key_of(t) == "atoms.eta_down_ratio");
    t = base();
    t["cavity"].erase("kappa_hz");
    CHECK(key_of(t) == "cavity.kappa_hz");
    t["cavity"]["fsr_hz"] = 1e9;
    CHECK(key_of(t) == "");
}

TEST_CASE("scan grids") {
    json t = base();
    t["scan"] = json::parse(R"({"variable": "n_d", "start": 1, "stop": 100, "points": 3,
                               "scale": "log"})");
    auto c = resolve(t);
    REQUIRE(c.scan.values.size() == 3);
    CHECK(c.scan.values[1] == doctest::Approx(10.0));
    t["scan"]["values"] = json::array({1, 2});
    CHECK(key_of(t) == "scan.start");
    t["scan"] = json::parse(R"({"variable": "detuning_hz", "values": [92000]})");
    c = resolve(t);
    CHECK(x_a_grid(c)[0] == doctest::Approx(1.0));
}

TEST_CASE("overrides parse JSON literals") {
    json t = base();
    apply_override(t, "probe.n_sc=250");
    apply_override(t, "probe.t_tot=both");
    apply_override(t, "probe.curvature=true");
    const auto c = resolve(t);
    CHECK(c.probe.budget == 250);
    CHECK(c.probe.t_tot == CAVSQ_TOT_BOTH);
    CHECK(c.probe.curvature == 1);
    CHECK_THROWS_AS(apply_override(t, "n_sc=3"), ConfigError);
}

TEST_CASE("TOML and JSON files load to the same tree") {
    const std::string toml = temp_file("cfg.toml", R"(
[cavity]
T1 = 3e-5
T2 = 4.533e-4
kappa_hz = 520000

[atoms]
gamma_hz = 184000
eta = 1.8

[probe]
n_atoms = 1000
n_sc = 100
)");
    const std::string js = temp_file("cfg.json", base().dump());
    CHECK(unordered(load_tree(toml)) == unordered(load_tree(js)));
    const std::string doc = temp_file("result.json",
                                      json{{"command", "squeeze"}, {"config", base()}}.dump());
    CHECK(load_tree(doc) == base());
    const std::string bad = temp_file("bad.toml", "[cavity\nT1 = ");
    CHECK_THROWS_AS(load_tree(bad), ConfigError);
    CHECK_THROWS_AS(load_tree(std::string(CAVSQ_TEST_TMP) + "/missing.toml"), ConfigError);
}
