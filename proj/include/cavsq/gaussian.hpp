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
 * Gaussian model of the collective spin near the equator. Covariances are
 * over (S_y, S_z) in SQL units, so the coherent state is the identity.
 */
#pragma once

#include <array>

namespace cavsq::gaussian {

using Mat2 = std::array<std::array<double, 2>, 2>;

struct GaussianSpinState {
    Mat2 cov{{{1.0, 0.0}, {0.0, 1.0}}};
    double mean_phi = 0.0;
    double mean_sz = 0.0;
    double n_atoms = 0.0;
    double contrast = 1.0;

    [[nodiscard]] double det() const;
    /// Covariance in spin units, (N/4) cov.
    [[nodiscard]] Mat2 spin_cov() const;
};

GaussianSpinState css(double n_atoms);

/// Shear by Q, broaden S_y by F, then rotate by alpha.
GaussianSpinState evolve(const GaussianSpinState &s, double Q, double F,
                         double alpha);

/// 1 - Q sin 2a + (F + Q^2) sin^2 a.
double variance_at_angle(double Q, double F, double alpha);

struct Xi2 {
    double minus;
    double plus;
};

Xi2 xi2_ku(double Q, double F);

/// Angle of the squeezed axis, tan a = (sqrt(4Q^2 + (F+Q^2)^2) - (F+Q^2)) / 2Q.
double optimal_angle(double Q, double F);

struct Contrast {
    double scattering;
    double bloch;
    double total;
};

Contrast contrast(double Q, double n_sc, double n_atoms);

/// Wineland parameter. With curvature the Bloch-sphere broadening
/// Q^4/(24 S^2) is added to xi2_minus and the wrap contrast is included.
double wineland(double Q, double F, double n_sc, double n_atoms,
                bool curvature);

struct SqueezeOutcome {
    double Q = 0.0;
    double F = 0.0;
    double delta_phi = 0.0;
    double contrast = 1.0;
    double xi2_ku = 1.0;
    double xi2 = 1.0;
};

SqueezeOutcome outcome(double Q, double F, double delta_phi, double n_sc,
                       double n_atoms, bool curvature);

} // namespace cavsq::gaussian
