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

#include "cavsq/spinlight.hpp"

#include "cavsq/cavity.hpp"

#include <cmath>

namespace cavsq::spinlight {

namespace {

void require_three_level(const AtomParams &atoms, const char *who) {
    if (atoms.eta_down != 0.0)
        fail(std::string(who) +
             ": three-level formula called with eta_down != 0; use fourlevel");
}

} // namespace

PhotonBudget photon_budget(const CavityParams &cav, const AtomParams &atoms,
                           const ProbePoint &p) {
    if (!(p.budget >= 0.0) || !std::isfinite(p.budget))
        fail("photon_budget: authoritative count must be finite and >= 0");
    if (p.n_up < 0.0 || p.n_down < 0.0)
        fail("photon_budget: atom numbers must be >= 0");
    const double t0 = cavity::transmission(cav, atoms, p).T0;
    const double st = cavity::scatter_to_transmit(cav, atoms, p);
    PhotonBudget b;
    b.authoritative = p.budget_kind;
    double A = 0.0;
    switch (p.budget_kind) {
    case Budget::n_in: {
        const double f = cav.finesse / pi;
        A = p.budget * f * f * cav.T1 * t0;
        break;
    }
    case Budget::n_t:
        A = p.budget / cav.T2;
        break;
    case Budget::n_sc:
        if (p.budget > 0.0 && st == 0.0)
            fail("photon_budget: n_sc requested but the probe point does "
                 "not scatter");
        A = p.budget > 0.0 ? p.budget / st / cav.T2 : 0.0;
        break;
    case Budget::n_c:
        if (!(p.tau > 0.0))
            fail("photon_budget: tau must be positive to use n_c");
        A = p.budget * cav.kappa * p.tau;
        break;
    }
    b.intracavity = A;
    b.n_t = cav.T2 * A;
    b.n_sc = p.budget_kind == Budget::n_sc ? p.budget : st * b.n_t;
    {
        const double f = cav.finesse / pi;
        b.n_in = A / (f * f * cav.T1 * t0);
    }
    if (p.budget_kind == Budget::n_in)
        b.n_in = p.budget;
    b.n_c = p.tau > 0.0 ? A / (cav.kappa * p.tau) : 0.0;
    if (p.budget_kind == Budget::n_c)
        b.n_c = p.budget;
    b.saturation_warning = p.n_up > 0.0 && b.n_c > 0.1 * p.n_up;
    return b;
}

double light_shift_per_photon(const CavityParams &cav, const AtomParams &atoms,
                              const ProbePoint &p) {
    return pi * atoms.eta_up * cavity::lorentzians(p.x_a).Ld * cav.kappa /
           cav.finesse;
}

double phase_shift(const CavityParams &, const AtomParams &atoms,
                   const ProbePoint &p, const PhotonBudget &budget) {
    require_three_level(atoms, "phase_shift");
    if (budget.n_sc == 0.0)
        return 0.0;
    if (p.n_up <= 0.0)
        fail("phase_shift: n_sc > 0 with no atoms in |up>");
    return -budget.n_sc / (2.0 * p.n_up) * p.x_a;
}

double phase_shift_transmitted(const CavityParams &cav,
                               const AtomParams &atoms, const ProbePoint &p,
                               const PhotonBudget &budget) {
    require_three_level(atoms, "phase_shift_transmitted");
    return atoms.eta_up * budget.n_t * (cav.T1 + cav.T2) / (2.0 * cav.T2) *
           cavity::lorentzians(p.x_a).Ld;
}

Shearing shearing(const CavityParams &cav, const AtomParams &atoms,
                  const ProbePoint &p, const PhotonBudget &budget) {
    require_three_level(atoms, "shearing");
    const double t0 = cavity::transmission(cav, atoms, p).T0;
    const double S = p.spin();
    const double eta = atoms.eta_up;
    const double Q = -2.0 * eta * cavity::lorentzians(p.x_a).Ld *
                     (1.0 - p.x_c * p.x_a + S * eta) * t0 * budget.n_sc;
    const double N = p.n_atoms();
    const double chi = (N > 0.0 && p.tau > 0.0) ? Q / (N * p.tau) : 0.0;
    return {chi, Q};
}

double q_over_f(const AtomParams &atoms, const ProbePoint &p) {
    const double Se = p.spin() * atoms.eta_up;
    return p.x_a * (1.0 - p.x_c * p.x_a + Se) /
           (1.0 + p.x_a * p.x_a + 0.5 * Se);
}

} // namespace cavsq::spinlight
