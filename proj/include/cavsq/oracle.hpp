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
 * Brute-force reference computations. Nothing here calls the analytic
 * modules it is used to check.
 */
#pragma once

#include "cavsq/types.hpp"

#include <functional>
#include <vector>

namespace cavsq::oracle {

/// Amplitudes over k = 0..N atoms in |up>, S_z = k - N/2.
struct DickeState {
    int n_atoms = 0;
    std::vector<cplx> amp;

    [[nodiscard]] double spin() const { return 0.5 * n_atoms; }
    [[nodiscard]] double norm() const;
};

/// Coherent spin state with mean direction
/// (sin t cos p, sin t sin p, -cos t); theta = 0 is the S_z = -S pole.
DickeState css(int n_atoms, double theta, double phi);

/// exp(-i mu S_z^2) applied in place.
void twist(DickeState &s, double mu);

struct SpinMoments {
    double sx, sy, sz;
    double s2; ///< <Sx^2 + Sy^2 + Sz^2> from ladder operators
};

SpinMoments moments(const DickeState &s);

/// Variance of n.S for unit vector n.
double variance_along(const DickeState &s, double nx, double ny, double nz);

/// <S_x>/S after exp(-i (Q/N) S_z^2) on the equatorial state.
double oat_exact_contrast(int n_atoms, double Q);

struct AlphaScan {
    double min;
    double max;
    double argmin;
};

AlphaScan variance_alpha_scan(double Q, double F, int n_grid);

using ComplexFn = std::function<cplx(double)>;
using RealFn = std::function<double(double)>;

/// Pure-state QFI from the coherent-state overlap between x0 -+ h.
double fidelity_qfi(const ComplexFn &alpha, double x0, double h = 1e-5);

/// (d lambda/dx)^2 / lambda by central difference.
double poisson_fisher(const RealFn &lambda, double x0, double h = 1e-6);

struct EffectiveDetuning {
    double delta_eff = 0.0;   ///< rad/s, sign as in H = -Delta_eff a^dag a
    double n_photons = 0.0;   ///< mean-field intracavity photon number
    double validity = 0.0;    ///< largest adiabaticity ratio
    bool valid = true;        ///< validity < 1e-2
};

/// Mean-field effective detuning of |up> for a drive of `flux` photons/s
/// incident on mirror 1. Built from g, kappa, gamma and the bare
/// detunings only.
EffectiveDetuning effective_detuning(const CavityParams &cav,
                                     const AtomParams &atoms,
                                     const ProbePoint &p, double flux);

} // namespace cavsq::oracle
