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

#include "cavsq/cavity.hpp"

#include <cmath>

namespace cavsq::cavity {

Lorentz lorentzians(double x) {
    if (!std::isfinite(x))
        fail("lorentzians: non-finite detuning");
    const double la = 1.0 / (1.0 + x * x);
    return {-x * la, la};
}

cplx denominator(const AtomParams &atoms, const ProbePoint &p) {
    cplx d(1.0, -p.x_c);
    d += p.n_up * atoms.eta_up * response(p.x_a);
    if (atoms.eta_down != 0.0)
        d += p.n_down * atoms.eta_down * response(p.x_a + atoms.b);
    return d;
}

cplx denominator_dsz(const AtomParams &atoms, const ProbePoint &p) {
    cplx g = atoms.eta_up * response(p.x_a);
    if (atoms.eta_down != 0.0)
        g -= atoms.eta_down * response(p.x_a + atoms.b);
    return g;
}

cplx intracavity_field(const CavityParams &cav, const AtomParams &atoms,
                       const ProbePoint &p) {
    const double t1 = std::sqrt(cav.T1);
    return cplx(0.0, cav.finesse / pi * t1) / denominator(atoms, p);
}

Transmission transmission(const CavityParams &cav, const AtomParams &atoms,
                          const ProbePoint &p) {
    const double t0 = 1.0 / std::norm(denominator(atoms, p));
    const double s = cav.T1 + cav.T2;
    return {t0, 4.0 * cav.T1 * cav.T2 / (s * s) * t0};
}

double scatter_to_transmit(const CavityParams &cav, const AtomParams &atoms,
                           const ProbePoint &p) {
    if (cav.T2 == 0.0)
        fail("scatter_to_transmit: T2 = 0, no transmitted photons");
    double s = p.n_up * atoms.eta_up * lorentzians(p.x_a).La;
    if (atoms.eta_down != 0.0)
        s += p.n_down * atoms.eta_down * lorentzians(p.x_a + atoms.b).La;
    return two_pi / (cav.T2 * cav.finesse) * s;
}

DressedResonances dressed_resonances(const CavityParams &cav,
                                     const AtomParams &atoms, double n_up) {
    DressedResonances r;
    r.g = 0.5 * std::sqrt(atoms.eta_up * cav.kappa * atoms.gamma);
    r.vacuum_rabi = 2.0 * r.g * std::sqrt(n_up);
    const double s = n_up * atoms.eta_up * cav.kappa / atoms.gamma - 1.0;
    if (s > 0.0) {
        const double x = std::sqrt(s);
        r.x_a = {-x, x};
    }
    return r;
}

double LosslessEquivalent::T(int i) const {
    switch (i) {
    case 1:
        return t1s * t1s;
    case 2:
        return t2s * t2s;
    case 3:
        return t3s * t3s;
    case 4:
        return t4s * t4s;
    case 5:
        return t5s * t5s;
    default:
        fail("LosslessEquivalent::T: index must be 1..5");
    }
}

LosslessEquivalent map_lossless(const CavityParams &cav) {
    const double R1 = 1.0 - cav.T1 - cav.L1;
    const double R2 = 1.0 - cav.T2 - cav.L2;
    if (!(cav.T1 > 0.0) || !(cav.T2 > 0.0) || cav.L1 < 0.0 || cav.L2 < 0.0 ||
        !(R1 > 0.0) || !(R2 > 0.0))
        fail("map_lossless: need 0 < T_i, 0 <= L_i and R_i > 0");
    const double t1 = std::sqrt(cav.T1), r1 = std::sqrt(R1);
    const double t2 = std::sqrt(cav.T2), r2 = std::sqrt(R2);
    LosslessEquivalent m{};
    m.t1s = 1.0 / std::sqrt(1.0 + R1 / cav.T1);
    m.r1s = std::sqrt(1.0 - m.t1s * m.t1s);
    m.r2s = r1 * r2 / m.r1s;
    if (m.r2s > 1.0)
        fail("map_lossless: mapped r2* exceeds 1");
    m.t2s = std::sqrt(1.0 - m.r2s * m.r2s);
    m.t3s = t2 / m.t2s;
    m.t4s = t1 / m.t1s;
    m.t5s = r1 / (m.r1s * m.t4s);
    const double tol = 1.0 + 1e-12;
    if (m.t3s > tol || m.t4s > tol || m.t5s > tol)
        fail("map_lossless: mapped transmission exceeds 1");
    return m;
}

CavityParams to_lossless(const CavityParams &cav) {
    if (cav.lossless())
        return cav;
    const LosslessEquivalent m = map_lossless(cav);
    CavityParams out = cav;
    out.T1 = m.T(1);
    out.T2 = m.T(2);
    out.L1 = 0.0;
    out.L2 = 0.0;
    return out;
}

double output_efficiency(const CavityParams &cav) {
    if (cav.lossless())
        return 1.0;
    return map_lossless(cav).T(3);
}

cplx ensemble_beta(const CavityParams &cav, double n_atoms, double x_a) {
    if (!(cav.waist > 0.0) || !(cav.wavelength > 0.0))
        fail("ensemble_beta: waist and wavelength required");
    const double k = two_pi / cav.wavelength;
    const double eta_fs = 6.0 / (k * k * cav.waist * cav.waist);
    const Lorentz l = lorentzians(x_a);
    return n_atoms * eta_fs * cplx(l.Ld, l.La);
}

namespace {

FieldResponse network(double tin, double rin, double tout, double rr,
                      double t1, double r1, double r2, double t2, cplx beta,
                      double kL) {
    // tin: input amplitude factor, tout: output factor after mirror 2,
    // rr: factor on the reflected path.
    const cplx ph = std::exp(cplx(0.0, 2.0 * kL));
    const cplx d = 1.0 - cplx(0.0, 4.0) * beta - r1 * r2 * ph;
    FieldResponse f{};
    f.e_c = cplx(0.0, tin * t1) / d;
    f.e_t = -tin * t1 * t2 * tout * std::exp(cplx(0.0, kL)) / d;
    f.e_r = rr * tin * (rin - t1 * t1 * r2 * ph / d);
    f.transmission = std::norm(f.e_t);
    f.scattered = std::norm(f.e_c) * (8.0 * beta.imag() + 16.0 * std::norm(beta));
    return f;
}

} // namespace

FieldResponse lossy_fields(const CavityParams &cav, cplx beta, double kL) {
    const double t1 = std::sqrt(cav.T1), t2 = std::sqrt(cav.T2);
    const double r1 = std::sqrt(1.0 - cav.T1 - cav.L1);
    const double r2 = std::sqrt(1.0 - cav.T2 - cav.L2);
    return network(1.0, r1, 1.0, 1.0, t1, r1, r2, t2, beta, kL);
}

FieldResponse lossless_network_fields(const LosslessEquivalent &m, cplx beta,
                                      double kL) {
    return network(m.t4s, m.r1s, m.t3s, m.t5s, m.t1s, m.r1s, m.r2s, m.t2s,
                   beta, kL);
}

} // namespace cavsq::cavity
