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
 * Four-level extension: a second, Zeeman-shifted transition from |down>,
 * Raman spin flips, cavity compensation and two-color pulse design.
 *
 * Frequencies passed as omega are laser detunings from the |up> line in
 * rad/s; `offset` is omega_c - omega_a.
 */
#pragma once

#include "cavsq/spinlight.hpp"
#include "cavsq/types.hpp"

#include <utility>
#include <vector>

namespace cavsq::fourlevel {

cplx fl_cavity_field(const CavityParams &cav, const AtomParams &atoms,
                     const ProbePoint &p);

struct Squeeze {
    double delta_phi = 0.0;
    double Q = 0.0;
    double F = 0.0;
};

/// Differential phase, shearing and total information from the exact field.
Squeeze fl_squeeze(const CavityParams &cav, const AtomParams &atoms,
                   const ProbePoint &p, const spinlight::PhotonBudget &budget);

struct RamanModel {
    double rate_down_up = 0.0; ///< spin flips per second
    double branching = 2.0 / 3.0;
};

/// Expected |down> -> |up> flips for the pulse.
double raman_flips(const CavityParams &cav, const AtomParams &atoms,
                   const ProbePoint &p, const spinlight::PhotonBudget &budget,
                   double branching);

RamanModel raman_model(const CavityParams &cav, const AtomParams &atoms,
                       const ProbePoint &p,
                       const spinlight::PhotonBudget &budget,
                       double branching);

/// Flip variance in SQL units, R tau / (S/2).
double raman_variance(const CavityParams &cav, const AtomParams &atoms,
                      const ProbePoint &p,
                      const spinlight::PhotonBudget &budget,
                      const RamanModel &model);

/// delta_c = N_down eta_down gamma kappa / (4 delta_z), rad/s.
double compensation_detuning(const CavityParams &cav, const AtomParams &atoms,
                             double n_down);

/// Shift of the empty-cavity resonance caused by the |down> transition at
/// the |up> line, rad/s (positive = pushed up).
double cavity_pull(const CavityParams &cav, const AtomParams &atoms,
                   double n_down);

enum class PhaseConvention {
    echo,   ///< a pi pulse separates the colors, the phases subtract
    direct, ///< phases add
};

struct PulseResponse {
    double omega = 0.0;
    double Q = 0.0;
    double F = 0.0;
    double dphi = 0.0;
    double dQ_dN = 0.0;
    double ddphi_dN = 0.0;
};

struct Operating {
    CavityParams cav;
    AtomParams atoms;
    double n_atoms = 0.0;
    double offset = 0.0; ///< omega_c - omega_a, rad/s
};

/// Per-input-photon Q, F, phase and their analytic N-derivatives at
/// N_up = N_down = N/2.
PulseResponse pulse_response(const Operating &op, double omega);

/// Same derivatives by central differences at relative step h.
std::pair<double, double> pulse_derivatives_fd(const Operating &op,
                                               double omega, double h = 1e-5);

struct TwoColorPulse {
    PulseResponse first;
    PulseResponse second;
    double gamma = 0.0;
    double residual_q = 0.0;   ///< relative
    double residual_phi = 0.0; ///< relative
    double q_over_f = 0.0;
    int roots_found = 0;
    PhaseConvention convention = PhaseConvention::echo;
};

struct Window {
    double lo;
    double hi;
};

/// Lower and upper transmission maxima of the loaded cavity, rad/s.
std::pair<double, double> rabi_peaks(const Operating &op);

/// Default red-pulse window: above the lower peak, below the bare line.
Window default_red_window(const Operating &op);

TwoColorPulse two_color_solve(const Operating &op, double omega_l1,
                              Window window, PhaseConvention conv,
                              double step = two_pi * 2e3);

struct TwoColorOptimum {
    TwoColorPulse pulse;
    double omega_l1 = 0.0;
    double q_over_f = 0.0;
    int feasible = 0;
};

/// Maximizes |Q/F| of the compensated pair over omega_l1 in `window_l1`.
TwoColorOptimum two_color_optimize(const Operating &op, Window window_l1,
                                   Window window_l2, PhaseConvention conv,
                                   int points = 121);

} // namespace cavsq::fourlevel
