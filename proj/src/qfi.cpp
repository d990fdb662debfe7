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

#include "cavsq/qfi.hpp"

#include "cavsq/cavity.hpp"
#include "cavsq/fourlevel.hpp"

#include <cmath>

namespace cavsq::qfi {

double coherent_qfi(cplx dalpha) { return 4.0 * std::norm(dalpha); }

QfiBreakdown qfi_split(cplx alpha, cplx dalpha, double spin) {
    QfiBreakdown q;
    q.total = coherent_qfi(dalpha);
    const double a = std::abs(alpha);
    if (a == 0.0) {
        q.amplitude = q.total;
        q.phase = 0.0;
        q.phase_undefined = q.total > 0.0;
    } else {
        const cplx r = std::conj(alpha) * dalpha;
        const double dA = r.real() / a;
        const double dphi = r.imag() / (a * a);
        q.amplitude = 4.0 * dA * dA;
        q.phase = 4.0 * a * a * dphi * dphi;
    }
    q.normalized = 0.5 * spin * q.total;
    return q;
}

double total_F(const CavityParams &cav, const AtomParams &atoms,
               const ProbePoint &p, const spinlight::PhotonBudget &budget) {
    if (atoms.eta_down != 0.0)
        fail("total_F: three-level formula called with eta_down != 0");
    const double t0 = cavity::transmission(cav, atoms, p).T0;
    const double Se = p.spin() * atoms.eta_up;
    return 2.0 * budget.n_sc * atoms.eta_up *
           cavity::lorentzians(p.x_a).La *
           (1.0 + p.x_a * p.x_a + 0.5 * Se) * t0;
}

double total_F_route(const CavityParams &cav, const AtomParams &atoms,
                     const ProbePoint &p,
                     const spinlight::PhotonBudget &budget) {
    const cplx D = cavity::denominator(atoms, p);
    const cplx g = cavity::denominator_dsz(atoms, p);
    double lossy = p.n_up * atoms.eta_up * cavity::lorentzians(p.x_a).La;
    if (atoms.eta_down != 0.0)
        lossy += p.n_down * atoms.eta_down *
                 cavity::lorentzians(p.x_a + atoms.b).La;
    const double bracket = cav.T1 + cav.T2 + pi / cav.finesse * lossy;
    const double dalpha2 = budget.intracavity * std::norm(g / D);
    return 2.0 * p.spin() * bracket * dalpha2;
}

QfiBreakdown output_split(const AtomParams &atoms, const ProbePoint &p) {
    // d ln(alpha)/dS_z = -g/D
    const cplx r = -cavity::denominator_dsz(atoms, p) /
                   cavity::denominator(atoms, p);
    QfiBreakdown q;
    q.amplitude = 4.0 * r.real() * r.real();
    q.phase = 4.0 * r.imag() * r.imag();
    q.total = q.amplitude + q.phase;
    q.normalized = 0.5 * p.spin() * q.total;
    return q;
}

MeasFisher measurement_fisher(const CavityParams &cav,
                              const AtomParams &atoms, const ProbePoint &p,
                              const DetectionSetup &setup,
                              const spinlight::PhotonBudget &budget) {
    if (!(setup.q_eff > 0.0) || setup.q_eff > 1.0)
        fail("measurement_fisher: q_eff must lie in (0,1]");
    const double t_tot =
        setup.mode == TotMode::transmission ? cav.T2 : cav.T1 + cav.T2;
    const QfiBreakdown per = output_split(atoms, p);
    const double photons = t_tot * budget.intracavity;
    MeasFisher m;
    m.raw = per.total * photons;
    const double scale = setup.q_eff * 0.5 * p.spin() * photons;
    m.normalized = scale * per.total;
    m.amplitude = scale * per.amplitude;
    m.phase = scale * per.phase;
    return m;
}

ProbePoint shifted(const CavityParams &cav, const AtomParams &atoms,
                   const ProbePoint &p, double omega) {
    ProbePoint q = p;
    q.x_a += 2.0 * omega / atoms.gamma;
    q.x_c += 2.0 * omega / cav.kappa;
    return q;
}

ChirpFisher chirp_fisher(const CavityParams &cav, const AtomParams &atoms,
                         const ProbePoint &center, const DetectionSetup &setup,
                         double branching) {
    if (!setup.omega_m)
        fail("chirp_fisher: omega_m not set");
    if (center.budget_kind != Budget::n_in)
        fail("chirp_fisher: sideband power is fixed by n_in; got " +
             std::string(budget_name(center.budget_kind)));
    ChirpFisher c;
    for (int sgn : {+1, -1}) {
        ProbePoint s = shifted(cav, atoms, center, sgn * *setup.omega_m);
        s.budget = 0.5 * center.budget;
        const spinlight::PhotonBudget b = spinlight::photon_budget(cav, atoms, s);
        const double f = measurement_fisher(cav, atoms, s, setup, b).normalized;
        (sgn > 0 ? c.F_plus : c.F_minus) = f;
        c.F += f;
        c.n_t += b.n_t;
        if (branching > 0.0)
            c.raman += fourlevel::raman_flips(cav, atoms, s, b, branching);
    }
    return c;
}

double detection_variance(const CavityParams &cav, const AtomParams &atoms,
                          const ProbePoint &p, const DetectionSetup &setup,
                          double branching) {
    double F = 0.0, flips = 0.0;
    if (setup.omega_m) {
        const ChirpFisher c = chirp_fisher(cav, atoms, p, setup, branching);
        F = c.F;
        flips = c.raman;
    } else {
        const spinlight::PhotonBudget b = spinlight::photon_budget(cav, atoms, p);
        F = measurement_fisher(cav, atoms, p, setup, b).normalized;
        if (branching > 0.0)
            flips = fourlevel::raman_flips(cav, atoms, p, b, branching);
    }
    const double sql = 0.5 * p.spin();
    return 1.0 / (1.0 + F) + (sql > 0.0 ? flips / sql : 0.0);
}

} // namespace cavsq::qfi
