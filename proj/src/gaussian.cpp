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

#include "cavsq/gaussian.hpp"

#include "cavsq/types.hpp"

#include <cmath>

namespace cavsq::gaussian {

namespace {

Mat2 mul(const Mat2 &a, const Mat2 &b) {
    Mat2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

Mat2 transpose(const Mat2 &a) { return {{{a[0][0], a[1][0]}, {a[0][1], a[1][1]}}}; }

} // namespace

double GaussianSpinState::det() const {
    return cov[0][0] * cov[1][1] - cov[0][1] * cov[1][0];
}

Mat2 GaussianSpinState::spin_cov() const {
    Mat2 m = cov;
    for (auto &row : m)
        for (double &v : row)
            v *= 0.25 * n_atoms;
    return m;
}

GaussianSpinState css(double n_atoms) {
    if (!(n_atoms >= 1.0))
        fail("gaussian: need at least one atom");
    GaussianSpinState s;
    s.n_atoms = n_atoms;
    return s;
}

GaussianSpinState evolve(const GaussianSpinState &s, double Q, double F,
                         double alpha) {
    if (!(F >= 0.0))
        fail("evolve: F must be non-negative");
    const Mat2 M{{{1.0, Q}, {0.0, 1.0}}};
    Mat2 c = mul(mul(M, s.cov), transpose(M));
    c[0][0] += F;
    const double ca = std::cos(alpha), sa = std::sin(alpha);
    const Mat2 R{{{ca, -sa}, {sa, ca}}};
    GaussianSpinState out = s;
    out.cov = mul(mul(R, c), transpose(R));
    out.mean_phi = s.mean_phi + Q * s.mean_sz;
    return out;
}

double variance_at_angle(double Q, double F, double alpha) {
    const double sa = std::sin(alpha);
    return 1.0 - Q * std::sin(2.0 * alpha) + (F + Q * Q) * sa * sa;
}

Xi2 xi2_ku(double Q, double F) {
    if (!(F >= 0.0))
        fail("xi2_ku: F must be non-negative");
    const double a = F + Q * Q;
    const double r = std::sqrt(4.0 * Q * Q + a * a);
    const double plus = 0.5 * (2.0 + a + r);
    // product of eigenvalues is 1+F; avoids cancellation for large Q
    return {(1.0 + F) / plus, plus};
}

double optimal_angle(double Q, double F) {
    if (Q == 0.0)
        return 0.0;
    const double a = F + Q * Q;
    return std::atan((std::sqrt(4.0 * Q * Q + a * a) - a) / (2.0 * Q));
}

Contrast contrast(double Q, double n_sc, double n_atoms) {
    if (!(n_atoms >= 1.0))
        fail("contrast: need at least one atom");
    Contrast c;
    c.scattering = std::exp(-n_sc / n_atoms);
    c.bloch = std::exp(-Q * Q / (2.0 * n_atoms));
    c.total = c.scattering * c.bloch;
    return c;
}

double wineland(double Q, double F, double n_sc, double n_atoms,
                bool curvature) {
    const Contrast c = contrast(Q, n_sc, n_atoms);
    double xi = xi2_ku(Q, F).minus;
    if (!curvature)
        return xi / (c.scattering * c.scattering);
    const double S = 0.5 * n_atoms;
    xi += Q * Q * Q * Q / (24.0 * S * S);
    return xi / (c.total * c.total);
}

SqueezeOutcome outcome(double Q, double F, double delta_phi, double n_sc,
                       double n_atoms, bool curvature) {
    SqueezeOutcome o;
    o.Q = Q;
    o.F = F;
    o.delta_phi = delta_phi;
    const Contrast c = contrast(Q, n_sc, n_atoms);
    o.contrast = curvature ? c.total : c.scattering;
    o.xi2_ku = xi2_ku(Q, F).minus;
    o.xi2 = wineland(Q, F, n_sc, n_atoms, curvature);
    return o;
}

} // namespace cavsq::gaussian
