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

/**
 * @file
 * Reference-check suite comparing the analytic modules with the oracle and
 * with each other.
 */
#pragma once

#include <string>
#include <vector>

namespace cavsq::validation {

struct Check {
    std::string name;
    double value = 0.0;     ///< worst observed error
    double tolerance = 0.0;
    bool pass = false;
};

std::vector<Check> lossless_checks();
std::vector<Check> identity_checks(int draws = 10000);
std::vector<Check> oracle_checks();
std::vector<Check> reduction_checks(int draws = 1000);

/// All of the above.
std::vector<Check> run_all();

} // namespace cavsq::validation
