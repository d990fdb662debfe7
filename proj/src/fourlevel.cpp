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

#include "cavsq/fourlevel.hpp"

#include "cavsq/cavity.hpp"
#include "cavsq/qfi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace cavsq::fourlevel {

cplx fl_cavity_field(const CavityParams &cav, const AtomParams &atoms,
                     const ProbePoint &p) {
    return cavity::intracavity_field(cav, atoms, p);
}

namespace {

double dispersive_difference(const AtomParams &atoms, double x_a) {
    double d = atoms.eta_up * cavity::lorentzians(x_a).Ld;
    if (atoms.eta_down != 0.0)
        d -= atoms.eta_down * cavity::lorentzians(x_a + atoms.b).Ld;
    return d;
}

} // namespace

Squeeze fl_squeeze(const CavityParams &cav, const AtomParams &atoms,
                   const ProbePoint &p, const spinlight::PhotonBudget &budget) {
    const cplx D = cavity::denominator(atoms, p);
    const cplx g = cavity::denominator_dsz(atoms, p);
    Squeeze s;
    s.delta_phi = pi / cav.finesse * dispersive_difference(atoms, p.x_a) *
                  budget.intracavity;
    // d ln|D|^-2 / dS_z
    const double dlog = -2.0 * std::real(std::conj(D) * g) / std::norm(D);
    s.Q = p.n_atoms() * s.delta_phi * dlog;
    s.F = qfi::total_F_route(cav, atoms, p, budget);
    return s;
}

double raman_flips(const CavityParams &cav, const AtomParams &atoms,
                   const ProbePoint &p, const spinlight::PhotonBudget &budget,
                   double branching) {
    if (!(branching >= 0.0 && branching <= 1.0))
        fail("raman: branching ratio must lie in [0,1]");
    if (atoms.eta_down == 0.0 || p.n_down == 0.0)
        return 0.0;
    const double sc = two_pi / cav.finesse * p.n_down * atoms.eta_down *
                      cavity::lorentzians(p.x_a + atoms.b).La *
                      budget.intracavity;
    return branching * sc;
}

RamanModel raman_model(const CavityParams &cav, const AtomParams &atoms,
                       const ProbePoint &p,
                       const spinlight::PhotonBudget &budget,
                       double branching) {
    if (!(p.tau > 0.0))
        fail("raman_model: tau must be positive");
    RamanModel m;
    m.branching = branching;
    m.rate_down_up = raman_flips(cav, atoms, p, budget, branching) / p.tau;
    return m;
}

double raman_variance(const CavityParams &, const AtomParams &,
                      const ProbePoint &p, const spinlight::PhotonBudget &,
                      const RamanModel &model) {
    if (!(model.branching >= 0.0 && model.branching <= 1.0))
        fail("raman: branching ratio must lie in [0,1]");
    const double sql = 0.5 * p.spin();
    return sql > 0.0 ? model.rate_down_up * p.tau / sql : 0.0;
}

double compensation_detuning(const CavityParams &cav, const AtomParams &atoms,
                             double n_down) {
    const double dz = atoms.delta_z();
    if (dz == 0.0)
        fail("compensation_detuning: Zeeman splitting is zero");
    return n_down * atoms.eta_down * atoms.gamma * cav.kappa / (4.0 * dz);
}

double cavity_pull(const CavityParams &cav, const AtomParams &atoms,
                   double n_down) {
    const double b = atoms.b;
    return 0.5 * cav.kappa * n_down * atoms.eta_down * b / (1.0 + b * b);
}

namespace {

ProbePoint op_probe(const Operating &op, double omega, double n) {
    ProbePoint p = probe_at(op.cav, op.atoms, 2.0 * omega / op.atoms.gamma,
                            op.offset, n);
    p.budget_kind = Budget::n_in;
    p.budget = 1.0;
    return p;
}

struct Raw {
    double Q, F, dphi;
};

Raw raw_response(const Operating &op, double omega, double n) {
    const ProbePoint p = op_probe(op, omega, n);
    const auto b = spinlight::photon_budget(op.cav, op.atoms, p);
    const Squeeze s = fl_squeeze(op.cav, op.atoms, p, b);
    return {s.Q, s.F, s.delta_phi};
}

} // namespace

PulseResponse pulse_response(const Operating &op, double omega) {
    const double N = op.n_atoms;
    if (!(N > 0.0))
        fail("pulse_response: atom number must be positive");
    const ProbePoint p = op_probe(op, omega, N);
    const auto budget = spinlight::photon_budget(op.cav, op.atoms, p);
    const Squeeze s = fl_squeeze(op.cav, op.atoms, p, budget);

    const AtomParams &at = op.atoms;
    const cplx D = cavity::denominator(at, p);
    const cplx g = cavity::denominator_dsz(at, p);
    cplx e = 0.5 * at.eta_up * cavity::response(p.x_a);
    if (at.eta_down != 0.0)
        e += 0.5 * at.eta_down * cavity::response(p.x_a + at.b);
    const double t0 = 1.0 / std::norm(D);
    const double dt0 = -t0 * t0 * 2.0 * std::real(std::conj(D) * e);
    const double f = op.cav.finesse / pi;
    const double c = dispersive_difference(at, p.x_a) * f * op.cav.T1;
    const double rdg = std::real(std::conj(D) * g);
    const double redg = std::real(std::conj(e) * g);

    PulseResponse r;
    r.omega = omega;
    r.Q = s.Q;
    r.F = s.F;
    r.dphi = s.delta_phi;
    r.ddphi_dN = c * dt0;
    r.dQ_dN = -2.0 * c *
              (rdg * t0 * t0 + N * redg * t0 * t0 + N * rdg * 2.0 * t0 * dt0);
    return r;
}

std::pair<double, double> pulse_derivatives_fd(const Operating &op,
                                               double omega, double h) {
    const double N = op.n_atoms;
    const Raw up = raw_response(op, omega, N * (1.0 + h));
    const Raw dn = raw_response(op, omega, N * (1.0 - h));
    const double den = 2.0 * N * h;
    return {(up.Q - dn.Q) / den, (up.dphi - dn.dphi) / den};
}

namespace {

double transmission_at(const Operating &op, double omega) {
    const ProbePoint p = op_probe(op, omega, op.n_atoms);
    return cavity::transmission(op.cav, op.atoms, p).T0;
}

double golden_max(const std::function<double(double)> &f, double a, double b,
                  double tol) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = f(c), fd = f(d);
    while (std::abs(b - a) > tol * (std::abs(a) + std::abs(b) + 1.0)) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::pair<double, double> rabi_peaks(const Operating &op) {
    const double g = 0.5 * std::sqrt(op.atoms.eta_up * op.cav.kappa *
                                     op.atoms.gamma);
    const double span = 3.0 * g * std::sqrt(0.5 * op.n_atoms) +
                        std::abs(op.offset) + op.cav.kappa;
    const int n = 6001;
    const double step = 2.0 * span / (n - 1);
    std::vector<double> t(n);
    for (int i = 0; i < n; ++i)
        t[i] = transmission_at(op, -span + i * step);
    double lo = 0.0, hi = 0.0;
    double best_lo = -1.0, best_hi = -1.0;
    const double center = op.offset;
    for (int i = 1; i + 1 < n; ++i) {
        if (!(t[i] >= t[i - 1] && t[i] > t[i + 1]))
            continue;
        const double w = -span + i * step;
        const auto f = [&](double x) { return transmission_at(op, x); };
        const double wr = golden_max(f, w - step, w + step, 1e-12);
        if (w < center && t[i] > best_lo) {
            best_lo = t[i];
            lo = wr;
        } else if (w >= center && t[i] > best_hi) {
            best_hi = t[i];
            hi = wr;
        }
    }
    if (best_lo < 0.0 || best_hi < 0.0)
        throw Error(ErrorCode::no_solution,
                    "rabi_peaks: no resolved vacuum-Rabi splitting");
    return {lo, hi};
}

Window default_red_window(const Operating &op) {
    const auto [lo, hi] = rabi_peaks(op);
    (void)hi;
    return {lo, 0.0};
}

namespace {

double rel_residual(double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s > 0.0 ? std::abs(a + b) / s : 0.0;
}

struct Candidate {
    double omega;
    double gamma;
    double value; // phase-compensation mismatch
    bool valid;
};

} // namespace

TwoColorPulse two_color_solve(const Operating &op, double omega_l1,
                              Window window, PhaseConvention conv,
                              double step) {
    if (!(step > 0.0) || !(window.hi > window.lo))
        fail("two_color_solve: empty search window");
    const PulseResponse r1 = pulse_response(op, omega_l1);
    const double s = conv == PhaseConvention::echo ? -1.0 : 1.0;

    const auto eval = [&](double w) -> Candidate {
        const PulseResponse r2 = pulse_response(op, w);
        if (r2.dQ_dN == 0.0)
            return {w, 0.0, 0.0, false};
        const double gam = -r1.dQ_dN / r2.dQ_dN;
        const double v = r1.ddphi_dN + s * gam * r2.ddphi_dN;
        return {w, gam, v, gam > 0.0 && std::isfinite(v)};
    };

    std::vector<double> grid;
    const int n = static_cast<int>(std::floor((window.hi - window.lo) / step));
    for (int i = 0; i <= n; ++i) {
        const double w = window.lo + i * step;
        if (std::abs(w - omega_l1) < step)
            continue;
        grid.push_back(w);
    }
    if (grid.size() < 2)
        throw Error(ErrorCode::no_solution,
                    "two_color_solve: search window holds fewer than two "
                    "grid points away from omega_l1");

    TwoColorPulse best;
    bool have = false;
    int roots = 0;
    int brackets = 0;
    Candidate prev = eval(grid[0]);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const Candidate cur = eval(grid[i]);
        const bool adjacent = grid[i] - grid[i - 1] < 1.5 * step;
        if (prev.valid && cur.valid && adjacent &&
            std::signbit(prev.value) != std::signbit(cur.value)) {
            ++brackets;
            Candidate a = prev, b = cur;
            for (int it = 0; it < 200 && b.omega - a.omega >
                                             4e-16 * std::abs(a.omega) + 1e-9;
                 ++it) {
                const Candidate m = eval(0.5 * (a.omega + b.omega));
                if (!m.valid)
                    break;
                if (std::signbit(m.value) == std::signbit(a.value))
                    a = m;
                else
                    b = m;
            }
            const Candidate &root = std::abs(a.value) < std::abs(b.value) ? a : b;
            const PulseResponse r2 = pulse_response(op, root.omega);
            const double rq = rel_residual(r1.dQ_dN, root.gamma * r2.dQ_dN);
            const double rp = rel_residual(r1.ddphi_dN, s * root.gamma * r2.ddphi_dN);
            if (root.valid && rq <= 1e-8 && rp <= 1e-8) {
                ++roots;
                const double qf = (r1.Q + root.gamma * r2.Q) /
                                  (r1.F + root.gamma * r2.F);
                if (!have || std::abs(qf) > std::abs(best.q_over_f)) {
                    best.first = r1;
                    best.second = r2;
                    best.gamma = root.gamma;
                    best.residual_q = rq;
                    best.residual_phi = rp;
                    best.q_over_f = qf;
                    best.convention = conv;
                    have = true;
                }
            }
        }
        prev = cur;
    }
    if (!have) {
        std::ostringstream os;
        os << "two_color_solve: no compensating red pulse in window ["
           << window.lo / two_pi << ", " << window.hi / two_pi
           << "] Hz for omega_l1 = " << omega_l1 / two_pi << " Hz ("
           << grid.size() << " grid points, " << brackets
           << " sign changes, none converged)";
        throw Error(ErrorCode::no_solution, os.str());
    }
    best.roots_found = roots;
    return best;
}

TwoColorOptimum two_color_optimize(const Operating &op, Window window_l1,
                                   Window window_l2, PhaseConvention conv,
                                   int points) {
    if (points < 2 || !(window_l1.hi > window_l1.lo))
        fail("two_color_optimize: need a window and at least two points");
    TwoColorOptimum out;
    bool have = false;
    const auto try_at = [&](double w, TwoColorPulse &res) {
        try {
            res = two_color_solve(op, w, window_l2, conv);
            return true;
        } catch (const Error &e) {
            if (e.code() != ErrorCode::no_solution)
                throw;
            return false;
        }
    };
    const double dw = (window_l1.hi - window_l1.lo) / (points - 1);
    int best_i = -1;
    for (int i = 0; i < points; ++i) {
        const double w = window_l1.lo + i * dw;
        TwoColorPulse res;
        if (!try_at(w, res))
            continue;
        ++out.feasible;
        if (!have || std::abs(res.q_over_f) > std::abs(out.q_over_f)) {
            out.pulse = res;
            out.omega_l1 = w;
            out.q_over_f = res.q_over_f;
            best_i = i;
            have = true;
        }
    }
    if (!have)
        throw Error(ErrorCode::no_solution,
                    "two_color_optimize: no feasible blue detuning in window");
    const double a = std::max(window_l1.lo, window_l1.lo + (best_i - 1) * dw);
    const double b = std::min(window_l1.hi, window_l1.lo + (best_i + 1) * dw);
    const auto f = [&](double w) {
        TwoColorPulse res;
        return try_at(w, res) ? std::abs(res.q_over_f) : -1.0;
    };
    const double w = golden_max(f, a, b, 1e-6);
    TwoColorPulse res;
    if (try_at(w, res) && std::abs(res.q_over_f) > std::abs(out.q_over_f)) {
        out.pulse = res;
        out.omega_l1 = w;
        out.q_over_f = res.q_over_f;
    }
    return out;
}

} // namespace cavsq::fourlevel
