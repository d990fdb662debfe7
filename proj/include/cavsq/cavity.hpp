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
 * Steady-state optical response of a two-mirror cavity loaded with atoms.
 */
#pragma once

#include "cavsq/types.hpp"

#include <vector>

namespace cavsq::cavity {

struct Lorentz {
    double Ld;
    double La;
};

/// Ld = -x/(1+x^2), La = 1/(1+x^2).
Lorentz lorentzians(double x);

/// Complex atomic response 1/(1 - i x) = La - i Ld.
inline cplx response(double x) { return 1.0 / cplx(1.0, -x); }

/// 1 - i x_c + N_up eta_up u(x_a) + N_down eta_down u(x_a + b).
cplx denominator(const AtomParams &atoms, const ProbePoint &p);

/// d(denominator)/dS_z = eta_up u(x_a) - eta_down u(x_a + b).
cplx denominator_dsz(const AtomParams &atoms, const ProbePoint &p);

/// Intracavity field relative to E_in, (F/pi) i t1 / D.
cplx intracavity_field(const CavityParams &cav, const AtomParams &atoms,
                       const ProbePoint &p);

struct Transmission {
    double T0;
    double T;
};

Transmission transmission(const CavityParams &cav, const AtomParams &atoms,
                          const ProbePoint &p);

/// Ratio of free-space scattered to transmitted photons.
double scatter_to_transmit(const CavityParams &cav, const AtomParams &atoms,
                           const ProbePoint &p);

struct DressedResonances {
    std::vector<double> x_a;  ///< normalized detunings, ascending
    double vacuum_rabi = 0.0; ///< 2 g sqrt(N_up), rad/s
    double g = 0.0;           ///< sqrt(eta kappa gamma)/2, rad/s
};

/// Roots of x_a gamma/kappa + N_up eta Ld(x_a) = 0 for a resonant cavity.
DressedResonances dressed_resonances(const CavityParams &cav,
                                     const AtomParams &atoms, double n_up);

struct LosslessEquivalent {
    double t1s, r1s, r2s, t2s, t3s, t4s, t5s;
    [[nodiscard]] double T(int i) const;
};

LosslessEquivalent map_lossless(const CavityParams &cav);

/// Lossless cavity with the same intracavity response; the mirror-2
/// transmission absorbs all losses.
CavityParams to_lossless(const CavityParams &cav);

/// Fraction of light leaving the mapped output coupler that is real
/// transmission (T3*).
double output_efficiency(const CavityParams &cav);

struct FieldResponse {
    cplx e_c;
    cplx e_t;
    cplx e_r;
    double transmission;
    double scattered; ///< free-space radiated fraction of input power
};

/// Ensemble coupling beta = N eta_fs (Ld + i La) with eta_fs = 6/(k w)^2.
cplx ensemble_beta(const CavityParams &cav, double n_atoms, double x_a);

/// Exact two-mirror fields with round-trip phase 2kL.
FieldResponse lossy_fields(const CavityParams &cav, cplx beta, double kL);

/// Fields of the mapped lossless network (external beamsplitters included).
FieldResponse lossless_network_fields(const LosslessEquivalent &m, cplx beta,
                                      double kL);

} // namespace cavsq::cavity
