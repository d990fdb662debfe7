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
 * Quantum Fisher information carried by the cavity output and the
 * resulting S_z detection resolution.
 *
 * Normalized quantities are in SQL units: F = (S/2) * F_raw, so that the
 * conditional S_z variance reads 1/(1+F).
 */
#pragma once

#include "cavsq/spinlight.hpp"
#include "cavsq/types.hpp"

#include <optional>

namespace cavsq::qfi {

/// 4 |d alpha/dx|^2.
double coherent_qfi(cplx dalpha);

struct QfiBreakdown {
    double total = 0.0;
    double amplitude = 0.0;
    double phase = 0.0;
    double normalized = 0.0; ///< (S/2) * total
    bool phase_undefined = false;
};

QfiBreakdown qfi_split(cplx alpha, cplx dalpha, double spin = 0.0);

/// 2 n_sc eta La(x_a) (1 + x_a^2 + S eta/2) T0 (three-level).
double total_F(const CavityParams &cav, const AtomParams &atoms,
               const ProbePoint &p, const spinlight::PhotonBudget &budget);

/// Field-derivative route: 2S [T1+T2 + (pi/F) sum N eta La] |d alpha/dS_z|^2.
/// Valid for both level schemes.
double total_F_route(const CavityParams &cav, const AtomParams &atoms,
                     const ProbePoint &p,
                     const spinlight::PhotonBudget &budget);

/// Per-photon split of the total information into the amplitude and phase
/// quadratures of the output field.
QfiBreakdown output_split(const AtomParams &atoms, const ProbePoint &p);

enum class TotMode { transmission, both };

struct DetectionSetup {
    TotMode mode = TotMode::transmission;
    double q_eff = 1.0;
    std::optional<double> omega_m; ///< sideband offset, rad/s
};

struct MeasFisher {
    double raw = 0.0;        ///< 4 T_tot |dE_c/dS_z|^2 tau, spin units
    double normalized = 0.0; ///< q (S/2) raw
    double amplitude = 0.0;  ///< normalized, amplitude quadrature
    double phase = 0.0;      ///< normalized, phase quadrature
};

MeasFisher measurement_fisher(const CavityParams &cav,
                              const AtomParams &atoms, const ProbePoint &p,
                              const DetectionSetup &setup,
                              const spinlight::PhotonBudget &budget);

/// Probe point displaced by `omega` rad/s in laser frequency.
ProbePoint shifted(const CavityParams &cav, const AtomParams &atoms,
                   const ProbePoint &p, double omega);

struct ChirpFisher {
    double F = 0.0;       ///< normalized, both sidebands, q applied
    double F_plus = 0.0;
    double F_minus = 0.0;
    double n_t = 0.0;     ///< transmitted photons, both sidebands
    double raman = 0.0;   ///< expected spin flips, both sidebands
};

/// Two balanced sidebands at the probe point +- setup.omega_m. The budget
/// must be n_in and is split equally; the sidebands are independent modes.
ChirpFisher chirp_fisher(const CavityParams &cav, const AtomParams &atoms,
                         const ProbePoint &center, const DetectionSetup &setup,
                         double branching = 0.0);

/// 1/(1 + q F_meas) + Raman variance, SQL units. Uses the chirp pair when
/// setup.omega_m is set.
double detection_variance(const CavityParams &cav, const AtomParams &atoms,
                          const ProbePoint &p, const DetectionSetup &setup,
                          double branching);

} // namespace cavsq::qfi
