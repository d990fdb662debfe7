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

#include "cavsq/validation.hpp"

#include "cavsq/cavity.hpp"
#include "cavsq/fourlevel.hpp"
#include "cavsq/gaussian.hpp"
#include "cavsq/oracle.hpp"
#include "cavsq/qfi.hpp"
#include "cavsq/spinlight.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace cavsq::validation {

namespace {

double rel(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

double relc(cplx a, cplx b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

Check make(std::string name, double value, double tol) {
    return {std::move(name), value, tol, value <= tol};
}

CavityParams lossy_cavity() {
    CavityParams c;
    c.T1 = 30e-6;
    c.L1 = 30e-6;
    c.T2 = 196e-6;
    c.L2 = 227.3e-6;
    c.finesse = 13000.0;
    c.kappa = two_pi * 520e3;
    return c;
}

ProbePoint point(double x_a, double x_c, double n_up) {
    ProbePoint p;
    p.x_a = x_a;
    p.x_c = x_c;
    p.n_up = n_up;
    p.n_down = n_up;
    return p;
}

} // namespace

std::vector<Check> lossless_checks() {
    std::vector<Check> out;
    const auto m = cavity::map_lossless(lossy_cavity());
    out.push_back(make("lossless map T1*", rel(m.T(1), 30e-6), 1e-4));
    out.push_back(make("lossless map T2*", rel(m.T(2), 453.3e-6), 1e-4));
    out.push_back(make("lossless map T3*", rel(m.T(3), 0.4324), 1e-4));
    out.push_back(make("lossless map T4*", rel(m.T(4), 1.0), 1e-4));
    out.push_back(make("lossless map T5*", rel(m.T(5), 1.0), 1e-4));

    std::mt19937_64 rng(20260101);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double bs = 0.0, field = 0.0, energy = 0.0;
    for (int d = 0; d < 40; ++d) {
        CavityParams c = d == 0 ? lossy_cavity() : CavityParams{};
        if (d > 0) {
            c.T1 = std::pow(10.0, -6.0 + 5.0 * u(rng));
            c.T2 = std::pow(10.0, -6.0 + 5.0 * u(rng));
            c.L1 = std::pow(10.0, -6.0 + 5.0 * u(rng));
            c.L2 = std::pow(10.0, -6.0 + 5.0 * u(rng));
        }
        const auto mm = cavity::map_lossless(c);
        bs = std::max({bs, std::abs(mm.t1s * mm.t1s + mm.r1s * mm.r1s - 1.0),
                       std::abs(mm.t2s * mm.t2s + mm.r2s * mm.r2s - 1.0)});
        const cplx beta(1e-4 * (u(rng) - 0.5), 1e-4 * u(rng));
        for (int k = 0; k < 1000; ++k) {
            const double kL = pi * k / 1000.0;
            const auto a = cavity::lossy_fields(c, beta, kL);
            const auto b = cavity::lossless_network_fields(mm, beta, kL);
            field = std::max({field, relc(a.e_c, b.e_c), relc(a.e_t, b.e_t),
                              relc(a.e_r, b.e_r)});
        }
        CavityParams ll = c;
        ll.L1 = ll.L2 = 0.0;
        for (int k = 0; k < 200; ++k) {
            const double kL = pi * k / 200.0;
            const auto f = cavity::lossy_fields(ll, beta, kL);
            energy = std::max(energy, std::abs(f.transmission + std::norm(f.e_r) +
                                               f.scattered - 1.0));
        }
    }
    out.push_back(make("mapped beamsplitters lossless", bs, 1e-12));
    out.push_back(make("lossy vs mapped fields, 1000-point kL grid", field, 1e-9));
    out.push_back(make("energy conservation, lossless mirrors", energy, 1e-9));
    return out;
}

std::vector<Check> identity_checks(int draws) {
    std::vector<Check> out;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const CavityParams cav = ideal_cavity(30e-6, 453.3e-6, two_pi * 520e3);

    double lin = 0.0, qf = 0.0, det = 0.0, prod = 0.0, sym = 0.0, empty = 0.0,
           phi = 0.0, froute = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double x = (u(rng) < 0.5 ? -1.0 : 1.0) * std::pow(10.0, -6.0 + 12.0 * u(rng));
        const auto l = cavity::lorentzians(x);
        lin = std::max(lin, rel(l.Ld * l.Ld + l.La * l.La, l.La));

        const double eta = std::pow(10.0, -1.0 + 2.0 * u(rng));
        const AtomParams at = AtomParams::three_level(two_pi * 184e3, eta);
        const double n_up = std::pow(10.0, 4.0 * u(rng));
        const double x_a = 200.0 * (u(rng) - 0.5);
        const double x_c = 100.0 * (u(rng) - 0.5);
        ProbePoint p = point(x_a, x_c, n_up);
        p.budget_kind = Budget::n_sc;
        p.budget = std::pow(10.0, 3.0 * u(rng));
        const auto b = spinlight::photon_budget(cav, at, p);
        const double Q = spinlight::shearing(cav, at, p, b).Q;
        const double F = qfi::total_F(cav, at, p, b);
        qf = std::max(qf, rel(Q / F, spinlight::q_over_f(at, p)));
        froute = std::max(froute, rel(F, qfi::total_F_route(cav, at, p, b)));
        phi = std::max(phi, rel(spinlight::phase_shift(cav, at, p, b),
                                spinlight::phase_shift_transmitted(cav, at, p, b)));

        const auto xi = gaussian::xi2_ku(Q, F);
        prod = std::max(prod, rel(xi.minus * xi.plus, 1.0 + F));

        const double sq = 100.0 * (u(rng) - 0.5), sf = 50.0 * u(rng);
        const auto s = gaussian::evolve(gaussian::css(1000.0), sq, sf, pi * (u(rng) - 0.5));
        det = std::max(det, rel(s.det(), 1.0 + sf));

        const double kg = cav.kappa / at.gamma;
        const auto t1 = cavity::transmission(cav, at, point(x_a, x_a / kg, n_up));
        const auto t2 = cavity::transmission(cav, at, point(-x_a, -x_a / kg, n_up));
        sym = std::max(sym, rel(t1.T, t2.T));
        const auto te = cavity::transmission(cav, at, point(x_a, x_c, 0.0));
        empty = std::max(empty, rel(te.T0, 1.0 / (1.0 + x_c * x_c)));
    }
    out.push_back(make("lineshape identity Ld^2 + La^2 = La", lin, 1e-14));
    out.push_back(make("Q/F identity over random draws", qf, 1e-9));
    out.push_back(make("total F closed form vs field route", froute, 1e-8));
    out.push_back(make("phase shift via n_sc vs via n_t", phi, 1e-9));
    out.push_back(make("det(cov) = 1 + F", det, 1e-9));
    out.push_back(make("xi2_minus * xi2_plus = 1 + F", prod, 1e-12));
    out.push_back(make("transmission symmetric under detuning reflection", sym, 1e-12));
    out.push_back(make("empty cavity Lorentzian", empty, 1e-14));
    return out;
}

std::vector<Check> oracle_checks() {
    std::vector<Check> out;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    double scan = 0.0, arg = 0.0;
    for (int i = 0; i < 12; ++i) {
        const double Q = i == 0 ? 3.0 : 10.0 * u(rng);
        const double F = i == 0 ? 1.0 : 10.0 * u(rng);
        const auto s = oracle::variance_alpha_scan(Q, F, 200000);
        const auto xi = gaussian::xi2_ku(Q, F);
        scan = std::max({scan, std::abs(s.min - xi.minus), std::abs(s.max - xi.plus)});
        arg = std::max(arg, std::abs(s.argmin - gaussian::optimal_angle(Q, F)));
    }
    out.push_back(make("xi2 vs alpha scan", scan, 1e-6));
    out.push_back(make("squeezing angle vs alpha scan", arg, 1e-4));
    out.push_back(make("xi2_minus(3,1) = (12 - sqrt 136)/2",
                       std::abs(gaussian::xi2_ku(3.0, 1.0).minus -
                                0.5 * (12.0 - std::sqrt(136.0))), 1e-12));

    double qfi_err = 0.0, pois = 0.0;
    for (int i = 0; i < 50; ++i) {
        const cplx c0(u(rng) - 0.5, u(rng) - 0.5), c1(u(rng), u(rng) - 0.5);
        const double k = 3.0 * u(rng), m = u(rng);
        const auto alpha = [&](double x) {
            return (c0 + c1 * x) * std::exp(cplx(0.0, k * x)) * (1.0 + m * x * x);
        };
        const double x0 = u(rng);
        const cplx e = std::exp(cplx(0.0, k * x0));
        const cplx d = c1 * e * (1.0 + m * x0 * x0) +
                       (c0 + c1 * x0) * cplx(0.0, k) * e * (1.0 + m * x0 * x0) +
                       (c0 + c1 * x0) * e * (2.0 * m * x0);
        qfi_err = std::max(qfi_err, rel(oracle::fidelity_qfi(alpha, x0, 1e-4),
                                        qfi::coherent_qfi(d)));

        const double a0 = 1.0 + u(rng), a1 = u(rng), p1 = u(rng);
        const auto A = [&](double x) { return a0 + a1 * std::sin(x); };
        const auto lam = [&](double x) { return A(x) * A(x); };
        const cplx al = A(x0) * std::exp(cplx(0.0, p1 * x0));
        const cplx dal = (a1 * std::cos(x0) + cplx(0.0, p1) * A(x0)) *
                         std::exp(cplx(0.0, p1 * x0));
        pois = std::max(pois, rel(oracle::poisson_fisher(lam, x0),
                                  qfi::qfi_split(al, dal).amplitude));
    }
    out.push_back(make("coherent QFI vs fidelity finite difference", qfi_err, 1e-6));
    out.push_back(make("Poisson Fisher information = amplitude QFI", pois, 1e-6));
    out.push_back(make("Poisson Fisher information, lambda = x at 4",
                       std::abs(oracle::poisson_fisher([](double x) { return x; }, 4.0) - 0.25),
                       1e-9));

    {
        // QFI of the intracavity field about S_z, three-level
        const CavityParams cav = ideal_cavity(30e-6, 453.3e-6, two_pi * 520e3);
        const AtomParams at = AtomParams::three_level(two_pi * 184e3, 1.8);
        double err = 0.0;
        for (int i = 0; i < 20; ++i) {
            const double x_a = 120.0 * (u(rng) - 0.5);
            const double x_c = x_a * at.gamma / cav.kappa;
            const double S = 500.0;
            const auto field = [&](double sz) {
                return cavity::intracavity_field(cav, at, point(x_a, x_c, S + sz));
            };
            const ProbePoint p = point(x_a, x_c, S);
            const cplx e = cavity::intracavity_field(cav, at, p);
            const cplx de = -e * cavity::denominator_dsz(at, p) / cavity::denominator(at, p);
            const double scale = std::abs(cavity::denominator(at, p) /
                                          cavity::denominator_dsz(at, p));
            err = std::max(err, rel(oracle::fidelity_qfi(field, 0.0, 1e-4 * scale),
                                    qfi::qfi_split(e, de).total));
        }
        out.push_back(make("field QFI about S_z vs fidelity route", err, 1e-6));
    }

    double bloch = 0.0;
    for (int N : {50, 100, 400}) {
        for (int k = 1; k <= 40; ++k) {
            const double Q = std::sqrt(2.0 * N) * k / 40.0;
            const double ex = oracle::oat_exact_contrast(N, Q);
            bloch = std::max(bloch, rel(gaussian::contrast(Q, 0.0, N).bloch, ex));
        }
    }
    out.push_back(make("Bloch contrast vs exact Dicke sum, Q^2 <= 2N", bloch, 0.05));

    double oat = 0.0;
    for (int N : {2, 10, 100, 1000, 4000}) {
        for (double Q : {0.0, 0.5, 3.0, 10.0}) {
            const double ex = oracle::oat_exact_contrast(N, Q);
            oat = std::max(oat, std::abs(ex - std::pow(std::cos(Q / N), N - 1)));
        }
    }
    out.push_back(make("exact contrast = cos^(N-1)(Q/N)", oat, 1e-10));

    double css_n = 0.0, css_s2 = 0.0, css_perp = 0.0;
    for (int N : {1, 2, 10, 100, 1000}) {
        const double th = pi * u(rng), ph = two_pi * u(rng);
        const auto s = oracle::css(N, th, ph);
        css_n = std::max(css_n, std::abs(s.norm() - 1.0));
        const auto m = oracle::moments(s);
        const double S = 0.5 * N;
        css_s2 = std::max(css_s2, rel(m.s2, S * (S + 1.0)));
        // unit vectors orthogonal to the mean spin
        const double e1[3] = {std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph),
                              std::sin(th)};
        const double e2[3] = {-std::sin(ph), std::cos(ph), 0.0};
        for (const double *e : {e1, e2})
            css_perp = std::max(css_perp,
                                rel(oracle::variance_along(s, e[0], e[1], e[2]), 0.5 * S));
    }
    out.push_back(make("CSS normalization", css_n, 1e-12));
    out.push_back(make("CSS total spin S(S+1)", css_s2, 1e-9));
    out.push_back(make("CSS transverse variance S/2", css_perp, 1e-9));
    {
        const auto s = oracle::css(2, 0.5 * pi, 0.0);
        const double e = std::max({std::abs(s.amp[0] - 0.5), std::abs(s.amp[1] - std::sqrt(0.5)),
                                   std::abs(s.amp[2] - 0.5)});
        out.push_back(make("CSS N=2 equator amplitudes", e, 1e-15));
    }

    {
        double err = 0.0;
        int used = 0;
        for (int i = 0; i < 2000 && used < 200; ++i) {
            const double T1 = std::pow(10.0, -5.0 + 2.0 * u(rng));
            const double T2 = std::pow(10.0, -5.0 + 2.0 * u(rng));
            const CavityParams cav = ideal_cavity(T1, T2, two_pi * 1e5 * (1.0 + 10.0 * u(rng)));
            const AtomParams at = AtomParams::three_level(two_pi * 1e5 * (1.0 + 10.0 * u(rng)),
                                                          0.1 + 3.0 * u(rng));
            ProbePoint p = point(200.0 * (u(rng) - 0.5), 200.0 * (u(rng) - 0.5),
                                 std::pow(10.0, 3.0 * u(rng)));
            p.tau = 1e-6;
            const double flux = std::pow(10.0, 3.0 + 4.0 * u(rng));
            const auto eff = oracle::effective_detuning(cav, at, p, flux);
            if (!eff.valid)
                continue;
            ++used;
            p.budget_kind = Budget::n_in;
            p.budget = flux * p.tau;
            const auto b = spinlight::photon_budget(cav, at, p);
            const double route = spinlight::light_shift_per_photon(cav, at, p) * b.n_c;
            err = std::max(err, rel(eff.delta_eff, route));
        }
        out.push_back(make("effective detuning vs light shift times n_c", err, 1e-6));
        out.push_back(make("effective detuning draws inside validity",
                           used >= 100 ? 0.0 : 1.0, 0.0));
    }
    return out;
}

std::vector<Check> reduction_checks(int draws) {
    std::vector<Check> out;
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const CavityParams cav = ideal_cavity(30e-6, 453.3e-6, two_pi * 520e3);
    double q = 0.0, f = 0.0, ph = 0.0, far = 0.0, meas = 0.0;
    for (int i = 0; i < draws; ++i) {
        const AtomParams at = AtomParams::three_level(two_pi * 184e3, 0.1 + 3.0 * u(rng));
        ProbePoint p = point(200.0 * (u(rng) - 0.5), 100.0 * (u(rng) - 0.5),
                             std::pow(10.0, 3.5 * u(rng)));
        p.budget_kind = Budget::n_sc;
        p.budget = 1.0 + 1000.0 * u(rng);
        const auto b = spinlight::photon_budget(cav, at, p);
        const auto s = fourlevel::fl_squeeze(cav, at, p, b);
        q = std::max(q, rel(s.Q, spinlight::shearing(cav, at, p, b).Q));
        f = std::max(f, rel(s.F, qfi::total_F(cav, at, p, b)));
        ph = std::max(ph, rel(s.delta_phi, spinlight::phase_shift(cav, at, p, b)));

        AtomParams wide = AtomParams::four_level(at.gamma, at.eta, 1.0 / 3.0, 1e12);
        far = std::max(far, relc(cavity::intracavity_field(cav, wide, p),
                                 cavity::intracavity_field(cav, at, p)));

        qfi::DetectionSetup d;
        d.mode = qfi::TotMode::both;
        d.q_eff = u(rng);
        const double fm = qfi::measurement_fisher(cav, at, p, d, b).normalized;
        meas = std::max(meas, std::max(0.0, fm - s.F) / s.F);
    }
    out.push_back(make("four-level Q reduces to three-level", q, 1e-9));
    out.push_back(make("four-level F reduces to three-level", f, 1e-9));
    out.push_back(make("four-level phase reduces to three-level", ph, 1e-9));
    out.push_back(make("far-detuned second transition decouples", far, 1e-6));
    out.push_back(make("measured information <= total information", meas, 1e-12));

    fourlevel::Operating op;
    op.cav = cavity::to_lossless(lossy_cavity());
    op.atoms = AtomParams::four_level(two_pi * 184e3, 1.8, 1.0 / 3.0, 230.0);
    op.n_atoms = 1000.0;
    op.offset = -two_pi * 0.34e6;
    double dq = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double w = two_pi * 16e6 * (u(rng) - 0.5);
        const auto r = fourlevel::pulse_response(op, w);
        const auto fd = fourlevel::pulse_derivatives_fd(op, w);
        dq = std::max({dq, rel(r.dQ_dN, fd.first), rel(r.ddphi_dN, fd.second)});
    }
    out.push_back(make("analytic N-derivatives vs central difference", dq, 1e-4));
    return out;
}

std::vector<Check> run_all() {
    std::vector<Check> all;
    for (auto &&part : {lossless_checks(), identity_checks(), oracle_checks(),
                        reduction_checks()})
        all.insert(all.end(), part.begin(), part.end());
    return all;
}

} // namespace cavsq::validation
