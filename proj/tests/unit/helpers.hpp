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

#pragma once

#include "cavsq/types.hpp"

#include <random>

namespace cavsq::test {

inline std::mt19937_64 &rng() {
    static std::mt19937_64 g(20260101);
    return g;
}

inline double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline CavityParams yb_cavity() {
    CavityParams c;
    c.T1 = 30e-6;
    c.L1 = 30e-6;
    c.T2 = 196e-6;
    c.L2 = 227.3e-6;
    c.finesse = 13000;
    c.kappa = two_pi * 520e3;
    return c;
}

inline AtomParams yb_atoms(double ratio = 0.0) {
    const double gamma = two_pi * 184e3;
    return ratio > 0.0 ? AtomParams::four_level(gamma, 1.8, ratio, 230)
                       : AtomParams::three_level(gamma, 1.8);
}

template <class F> ErrorCode error_code(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return static_cast<ErrorCode>(0);
}

} // namespace cavsq::test
