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

#include "cavsq/types.hpp"

#include <cmath>
#include <sstream>

namespace cavsq {

namespace {
bool in_unit(double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; }
} // namespace

std::vector<std::string> CavityParams::check() const {
    if (!in_unit(T1) || !in_unit(T2) || !in_unit(L1) || !in_unit(L2))
        fail("cavity: T1, T2, L1, L2 must lie in [0,1]");
    if (T1 + L1 > 1.0 || T2 + L2 > 1.0)
        fail("cavity: T_i + L_i exceeds 1");
    if (!(finesse > 0.0) || !(kappa > 0.0))
        fail("cavity: finesse and kappa must be positive");
    std::vector<std::string> warn;
    const double loss = T1 + T2 + L1 + L2;
    if (loss > 0.0) {
        const double f0 = two_pi / loss;
        if (std::abs(f0 - finesse) / finesse > 0.02) {
            std::ostringstream os;
            os << "cavity: finesse " << finesse << " differs from 2pi/(T+L) = "
               << f0 << " by more than 2%";
            warn.push_back(os.str());
        }
    }
    if (fsr > 0.0 && std::abs(fsr / finesse - kappa) / kappa > 0.02) {
        std::ostringstream os;
        os << "cavity: kappa differs from fsr/finesse by more than 2%";
        warn.push_back(os.str());
    }
    return warn;
}

CavityParams ideal_cavity(double T1, double T2, double kappa) {
    CavityParams c;
    c.T1 = T1;
    c.T2 = T2;
    c.finesse = two_pi / (T1 + T2);
    c.kappa = kappa;
    return c;
}

AtomParams AtomParams::three_level(double gamma, double eta) {
    AtomParams a;
    a.gamma = gamma;
    a.eta = eta;
    a.eta_up = eta;
    a.eta_down = 0.0;
    a.b = 0.0;
    return a;
}

AtomParams AtomParams::four_level(double gamma, double eta,
                                  double eta_down_ratio, double b) {
    AtomParams a;
    a.gamma = gamma;
    a.eta = eta;
    a.eta_up = eta;
    a.eta_down = eta * eta_down_ratio;
    a.b = b;
    return a;
}

void AtomParams::check() const {
    if (!(gamma > 0.0))
        fail("atoms: gamma must be positive");
    if (!(eta_up >= 0.0) || !(eta_down >= 0.0) || !(eta >= 0.0))
        fail("atoms: cooperativities must be non-negative");
    if (!std::isfinite(b))
        fail("atoms: b must be finite");
}

double cooperativity(const CavityParams &cav) {
    if (!(cav.waist > 0.0) || !(cav.wavelength > 0.0))
        fail("cooperativity: waist and wavelength required");
    const double k = two_pi / cav.wavelength;
    return 24.0 * cav.finesse / (pi * k * k * cav.waist * cav.waist);
}

const char *budget_name(Budget b) {
    switch (b) {
    case Budget::n_in:
        return "n_in";
    case Budget::n_t:
        return "n_t";
    case Budget::n_sc:
        return "n_sc";
    case Budget::n_c:
        return "n_c";
    }
    return "?";
}

ProbePoint probe_at(const CavityParams &cav, const AtomParams &atoms,
                    double x_a, double offset, double n_atoms) {
    ProbePoint p;
    p.x_a = x_a;
    p.x_c = (x_a * atoms.gamma - 2.0 * offset) / cav.kappa;
    p.n_up = 0.5 * n_atoms;
    p.n_down = 0.5 * n_atoms;
    return p;
}

} // namespace cavsq
