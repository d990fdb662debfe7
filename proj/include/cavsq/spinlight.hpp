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
 * Photon bookkeeping and the coherent light-induced spin effects: phase
 * shift, one-axis-twisting strength Q and the Q/F relation.
 */
#pragma once

#include "cavsq/types.hpp"

namespace cavsq::spinlight {

struct PhotonBudget {
    double n_in = 0.0;
    double n_t = 0.0;
    double n_sc = 0.0;
    double n_c = 0.0;
    /// Intracavity |alpha_c|^2 scaled so that n_t = T2 * intracavity.
    double intracavity = 0.0;
    Budget authoritative = Budget::n_sc;
    bool saturation_warning = false;
};

PhotonBudget photon_budget(const CavityParams &cav, const AtomParams &atoms,
                           const ProbePoint &p);

/// Light shift per intracavity photon, pi eta Ld(x_a) kappa / F.
double light_shift_per_photon(const CavityParams &cav, const AtomParams &atoms,
                              const ProbePoint &p);

/// -(n_sc / 2 N_up) x_a (three-level).
double phase_shift(const CavityParams &cav, const AtomParams &atoms,
                   const ProbePoint &p, const PhotonBudget &budget);

/// eta n_t (T1+T2)/(2 T2) Ld(x_a); equals phase_shift for a cavity with
/// finesse 2pi/(T1+T2).
double phase_shift_transmitted(const CavityParams &cav,
                               const AtomParams &atoms, const ProbePoint &p,
                               const PhotonBudget &budget);

struct Shearing {
    double chi; ///< rad/s per S_z^2
    double Q;
};

/// Q = -2 eta Ld(x_a) (1 - x_c x_a + S eta) T0 n_sc, chi = Q/(N tau).
Shearing shearing(const CavityParams &cav, const AtomParams &atoms,
                  const ProbePoint &p, const PhotonBudget &budget);

/// x_a (1 - x_c x_a + S eta) / (1 + x_a^2 + S eta / 2).
double q_over_f(const AtomParams &atoms, const ProbePoint &p);

} // namespace cavsq::spinlight
