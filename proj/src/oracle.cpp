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

#include "cavsq/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace cavsq::oracle {

namespace {

// Neumaier compensated sum
class Sum {
  public:
    void add(double v) {
        const double t = s_ + v;
        if (std::abs(s_) >= std::abs(v))
            c_ += (s_ - t) + v;
        else
            c_ += (v - t) + s_;
        s_ = t;
    }
    [[nodiscard]] double value() const { return s_ + c_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

double log_binomial(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
           std::lgamma(n - k + 1.0);
}

// <k+1| S+ |k>
double ladder(int n, int k) {
    const double S = 0.5 * n, m = k - S;
    return std::sqrt((S - m) * (S + m + 1.0));
}

} // namespace

double DickeState::norm() const {
    Sum s;
    for (const cplx &a : amp)
        s.add(std::norm(a));
    return s.value();
}

DickeState css(int n_atoms, double theta, double phi) {
    if (n_atoms < 1)
        fail("css: need at least one atom");
    DickeState s;
    s.n_atoms = n_atoms;
    s.amp.resize(n_atoms + 1);
    const double sh = std::sin(0.5 * theta), ch = std::cos(0.5 * theta);
    for (int k = 0; k <= n_atoms; ++k) {
        double mag;
        if ((sh == 0.0 && k > 0) || (ch == 0.0 && k < n_atoms)) {
            mag = 0.0;
        } else {
            double lg = 0.5 * log_binomial(n_atoms, k);
            if (k > 0)
                lg += k * std::log(std::abs(sh));
            if (k < n_atoms)
                lg += (n_atoms - k) * std::log(std::abs(ch));
            mag = std::exp(lg);
            if (sh < 0.0 && (k % 2))
                mag = -mag;
            if (ch < 0.0 && ((n_atoms - k) % 2))
                mag = -mag;
        }
        s.amp[k] = mag * std::exp(cplx(0.0, -k * phi));
    }
    return s;
}

void twist(DickeState &s, double mu) {
    const double S = s.spin();
    for (int k = 0; k <= s.n_atoms; ++k) {
        const double m = k - S;
        s.amp[k] *= std::exp(cplx(0.0, -mu * m * m));
    }
}

SpinMoments moments(const DickeState &s) {
    const int n = s.n_atoms;
    const double S = s.spin();
    Sum re_p, im_p, z, z2, pm;
    for (int k = 0; k <= n; ++k) {
        const double w = std::norm(s.amp[k]);
        const double m = k - S;
        z.add(w * m);
        z2.add(w * m * m);
        if (k < n) {
            const cplx v = std::conj(s.amp[k + 1]) * s.amp[k] * ladder(n, k);
            re_p.add(v.real());
            im_p.add(v.imag());
        }
        // S+S- + S-S+ on |k>
        const double up = k < n ? ladder(n, k) : 0.0;
        const double dn = k > 0 ? ladder(n, k - 1) : 0.0;
        pm.add(w * (up * up + dn * dn));
    }
    SpinMoments r{};
    r.sx = re_p.value();
    r.sy = im_p.value();
    r.sz = z.value();
    r.s2 = 0.5 * pm.value() + z2.value();
    return r;
}

double variance_along(const DickeState &s, double nx, double ny, double nz) {
    const int n = s.n_atoms;
    const double S = s.spin();
    // v = (n.S)|psi>, n.S = (nx - i ny)/2 S+ + (nx + i ny)/2 S- + nz Sz
    const cplx cp(0.5 * nx, -0.5 * ny), cm(0.5 * nx, 0.5 * ny);
    std::vector<cplx> v(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        v[k] += nz * (k - S) * s.amp[k];
        if (k < n)
            v[k + 1] += cp * ladder(n, k) * s.amp[k];
        if (k > 0)
            v[k - 1] += cm * ladder(n, k - 1) * s.amp[k];
    }
    Sum mean, sq;
    for (int k = 0; k <= n; ++k) {
        mean.add(std::real(std::conj(s.amp[k]) * v[k]));
        sq.add(std::norm(v[k]));
    }
    const double m = mean.value();
    return sq.value() - m * m;
}

double oat_exact_contrast(int n_atoms, double Q) {
    if (n_atoms < 2)
        fail("oat_exact_contrast: need N >= 2");
    DickeState s = css(n_atoms, 0.5 * pi, 0.0);
    twist(s, Q / n_atoms);
    return moments(s).sx / s.spin();
}

AlphaScan variance_alpha_scan(double Q, double F, int n_grid) {
    if (n_grid < 1000)
        fail("variance_alpha_scan: need at least 1000 grid points");
    AlphaScan r{1e300, -1e300, 0.0};
    for (int i = 0; i < n_grid; ++i) {
        const double a = pi * i / n_grid - 0.5 * pi;
        const double sa = std::sin(a);
        // written out from the covariance rotation, not from gaussian::
        const double v = 1.0 - 2.0 * Q * sa * std::cos(a) + (F + Q * Q) * sa * sa;
        if (v < r.min) {
            r.min = v;
            r.argmin = a;
        }
        r.max = std::max(r.max, v);
    }
    return r;
}

double fidelity_qfi(const ComplexFn &alpha, double x0, double h) {
    const cplx a = alpha(x0 - h), b = alpha(x0 + h);
    // -ln |<a|b>|^2 = |a|^2 + |b|^2 - 2 Re(a* b)
    const double nl = std::norm(a) + std::norm(b) - 2.0 * std::real(std::conj(a) * b);
    if (!std::isfinite(nl))
        fail("fidelity_qfi: non-finite overlap");
    return nl / (h * h);
}

double poisson_fisher(const RealFn &lambda, double x0, double h) {
    const double l0 = lambda(x0);
    if (!(l0 > 0.0))
        fail("poisson_fisher: lambda must be positive");
    const double step = h * std::max(1.0, std::abs(x0));
    const double d = (lambda(x0 + step) - lambda(x0 - step)) / (2.0 * step);
    return d * d / l0;
}

EffectiveDetuning effective_detuning(const CavityParams &cav,
                                     const AtomParams &atoms,
                                     const ProbePoint &p, double flux) {
    if (!(flux >= 0.0))
        fail("effective_detuning: drive flux must be non-negative");
    const double g2 = 0.25 * atoms.eta_up * cav.kappa * atoms.gamma;
    const double da = 0.5 * p.x_a * atoms.gamma; // omega_l - omega_a
    const double dc = 0.5 * p.x_c * cav.kappa;   // omega_l - omega_c
    const double k_in = cav.kappa * cav.T1 / (cav.T1 + cav.T2);
    const cplx chi_a = g2 / cplx(0.5 * atoms.gamma, -da);
    const cplx den = cplx(0.5 * cav.kappa, -dc) + p.n_up * chi_a;
    EffectiveDetuning r;
    r.n_photons = k_in * flux / std::norm(den);
    const double shift = g2 * da / (da * da + 0.25 * atoms.gamma * atoms.gamma);
    r.delta_eff = -shift * r.n_photons;
    const double d2 = std::min(da * da, dc * dc);
    const double drive = 2.0 * cav.T1 / (cav.T1 + cav.T2) * r.n_photons;
    const double big = std::max(cav.kappa * flux, g2) * drive;
    r.validity = d2 > 0.0 ? big / d2 : (big > 0.0 ? 1e300 : 0.0);
    r.valid = r.validity < 1e-2;
    return r;
}

} // namespace cavsq::oracle
