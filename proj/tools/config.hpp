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

// Run configuration for the command-line tool. Files are TOML or JSON; both
// end up as the same json tree, which is what --json echoes back.
#pragma once

#include "cavsq/cavsq.h"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cavsq_cli {

using json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
  public:
    ConfigError(const std::string &key, const std::string &msg)
        : std::runtime_error("config error at " + key + ": " + msg), key_(key) {}
    [[nodiscard]] const std::string &key() const { return key_; }

  private:
    std::string key_;
};

struct Scan {
    std::string variable;
    std::vector<double> values;
    bool present = false;
};

struct TwoColor {
    std::optional<double> omega_l1; // rad/s
    std::optional<std::pair<double, double>> window;
    std::optional<std::pair<double, double>> window_l1;
    bool optimize = false;
    cavsq_phase_convention convention = CAVSQ_PHASE_ECHO;
};

struct RunConfig {
    json tree;
    cavsq_cavity cavity{};
    cavsq_atoms atoms{};
    cavsq_probe probe{};
    std::optional<double> x_a;
    Scan scan;
    TwoColor two_color;
    double shift_kappa = 0.1;
    bool has_atoms = false;
};

/// Parses a .toml or .json file into a tree. A JSON result document is
/// accepted too; its "config" member is used.
json load_tree(const std::string &path);

/// Applies `section.key=value` overrides; value is read as a JSON literal,
/// falling back to a plain string.
void apply_override(json &tree, const std::string &assignment);

/// Validates the tree and converts it. Frequencies in Hz become rad/s.
RunConfig resolve(const json &tree);

/// x_a values for an x_a or detuning_hz scan.
std::vector<double> x_a_grid(const RunConfig &c);

} // namespace cavsq_cli
