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

// Acceptance suite. One PASS/FAIL line per criterion.
//
// Exit status is 0 when the set of failing criteria equals kKnownFailures,
// so a regression or an unexpected pass both break the build. The known
// failures are listed, with their measured values, in README.md.

#include "cavsq/cavity.hpp"
#include "cavsq/fourlevel.hpp"
#include "cavsq/sweep.hpp"
#include "cavsq/validation.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cavsq;

namespace {

const std::set<int> kKnownFailures = {6, 8, 9};

// Tolerances.
constexpr double kMapRel = 1e-4;
constexpr double kFieldAbs = 1e-9;
constexpr double kIdentity = 1e-9;
constexpr double kDressedX = 50.2, kDressedTol = 1.0;
constexpr double kCompHz = 0.34e6, kCompShift = 1.3, kCompRel = 0.05;
constexpr double kGamma = 0.52, kOmegaL2Hz = -2.0e6, kQF = 6.47, kTwoColorRel = 0.10;
constexpr double kExpLinear = 1.00, kExpCurved = 0.73, kExpTol = 0.05;
constexpr double kPOpt = 0.5, kPOptRel = 0.05;
constexpr double kDetSlope = 0.5, kDetSlopeTol = 0.05;
constexpr double kChirpDrop = 2.0, kChirpRel = 0.15;
constexpr double kDepthDb = -11.0, kDepthTol = 3.0;
constexpr double kNd = 500.0, kNdFactor = 2.0;
constexpr double kSlopeTol = 0.1;
constexpr double kInvariance = 1e-9;

// Runtime limits, seconds.
constexpr double kT1 = 1.0, kT2 = 5.0, kT3 = 30.0, kT6 = 60.0, kT7 = 300.0;

struct Result {
    bool pass = true;
    std::ostringstream detail;
    std::string misses;
    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            misses += " [miss: " + what + "]";
        }
    }
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double seconds(const std::function<void()> &fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

CavityParams lossy_cavity() {
    CavityParams c;
    c.T1 = 30e-6;
    c.L1 = 30e-6;
    c.T2 = 196e-6;
    c.L2 = 227.3e-6;
    c.finesse = 13000;
    c.kappa = two_pi * 520e3;
    return c;
}

sweep::Setup yb171() {
    sweep::Setup s;
    s.cav = lossy_cavity();
    s.atoms = AtomParams::four_level(two_pi * 184e3, 1.8, 1.0 / 3.0, 230);
    s.n_atoms = 1000;
    s.offset = -two_pi * 0.34e6;
    s.budget_kind = Budget::n_in;
    s.budget = 1000;
    s.detection.q_eff = 0.15;
    return s;
}

sweep::Setup resonant(double eta, double n_atoms, double n_sc) {
    sweep::Setup s;
    const double gamma = two_pi * 184e3;
    s.cav = ideal_cavity(100e-6, 100e-6, 2.8 * gamma);
    s.atoms = AtomParams::three_level(gamma, eta);
    s.n_atoms = n_atoms;
    s.budget_kind = Budget::n_sc;
    s.budget = n_sc;
    return s;
}

bool checks_pass(const std::vector<validation::Check> &cs, Result &r,
                 const std::vector<std::string> &prefixes) {
    bool all = true;
    int matched = 0;
    for (const auto &c : cs) {
        bool wanted = prefixes.empty();
        for (const auto &p : prefixes)
            wanted = wanted || c.name.rfind(p, 0) == 0;
        if (!wanted)
            continue;
        ++matched;
        r.require(c.pass, c.name);
        all = all && c.pass;
    }
    r.require(matched > 0, "no checks matched");
    return all;
}

void criterion1(Result &r) {
    std::vector<validation::Check> cs;
    const double t = seconds([&] { cs = validation::lossless_checks(); });
    const auto m = cavity::map_lossless(lossy_cavity());
    const double e1 = rel(m.T(1), 30e-6), e2 = rel(m.T(2), 453.3e-6),
                 e3 = rel(m.T(3), 0.4324);
    r.require(e1 <= kMapRel, "T1*");
    r.require(e2 <= kMapRel, "T2*");
    r.require(e3 <= kMapRel, "T3*");
    double field = 0.0;
    for (const auto &c : cs)
        if (c.name.rfind("lossy vs mapped", 0) == 0)
            field = c.value;
    r.require(field <= kFieldAbs, "field equivalence");
    checks_pass(cs, r, {});
    r.require(t < kT1, "runtime");
    r.detail << "T1*=" << m.T(1) << " T2*=" << m.T(2) << " T3*=" << m.T(3)
             << " field_err=" << field << " t=" << t << "s";
}

void criterion2(Result &r) {
    std::vector<validation::Check> cs;
    const double t = seconds([&] { cs = validation::identity_checks(10000); });
    double qf = 1.0;
    for (const auto &c : cs)
        if (c.name.rfind("Q/F identity", 0) == 0)
            qf = c.value;
    r.require(qf <= kIdentity, "Q/F identity");
    checks_pass(cs, r,
                {"lineshape identity", "Q/F identity", "det(cov)", "xi2_minus * xi2_plus",
                 "transmission symmetric"});
    r.require(t < kT2, "runtime");
    r.detail << "Q/F_err=" << qf << " checks=" << cs.size() << " t=" << t << "s";
}

void criterion3(Result &r) {
    std::vector<validation::Check> cs;
    const double t = seconds([&] { cs = validation::oracle_checks(); });
    checks_pass(cs, r,
                {"xi2 vs alpha scan", "coherent QFI vs fidelity",
                 "Poisson Fisher information = amplitude", "Bloch contrast",
                 "effective detuning"});
    double worst_contrast = 0.0;
    for (const auto &c : cs)
        if (c.name.rfind("Bloch contrast", 0) == 0)
            worst_contrast = c.value;
    r.require(t < kT3, "runtime");
    r.detail << "checks=" << cs.size() << " bloch_rel=" << worst_contrast << " t=" << t
             << "s";
}

void criterion4(Result &r) {
    const double gamma = two_pi * 184e3;
    const CavityParams cav = ideal_cavity(100e-6, 100e-6, 2.8 * gamma);
    const AtomParams atoms = AtomParams::three_level(gamma, 1.8);
    const auto d = cavity::dressed_resonances(cav, atoms, 900.0 / 1.8);
    r.require(d.x_a.size() == 2, "two resonances");
    if (d.x_a.size() == 2) {
        r.require(std::abs(d.x_a[0] + kDressedX) <= kDressedTol, "lower");
        r.require(std::abs(d.x_a[1] - kDressedX) <= kDressedTol, "upper");
        r.detail << "x_a=" << d.x_a[0] << "," << d.x_a[1];
    }
}

void criterion5(Result &r) {
    const sweep::Setup s = yb171();
    const CavityParams cav = s.physics_cavity();
    const double dc = fourlevel::compensation_detuning(cav, s.atoms, 0.5 * s.n_atoms);
    const double hz = dc / two_pi, shift = 2.0 * dc / cav.kappa;
    r.require(rel(hz, kCompHz) <= kCompRel, "delta_c");
    r.require(rel(shift, kCompShift) <= kCompRel, "normalized shift");
    r.detail << "delta_c=" << hz << "Hz shift=" << shift;
}

void criterion6(Result &r) {
    sweep::Table t;
    const double sec = seconds([&] {
        sweep::TwoColorRequest req;
        req.omega_l1 = two_pi * 7.333e6;
        t = sweep::two_color(yb171(), req);
    });
    const double g = *t.get("gamma"), w2 = *t.get("omega_l2_hz"),
                 qf = std::abs(*t.get("q_over_f"));
    r.require(rel(g, kGamma) <= kTwoColorRel, "gamma");
    r.require(rel(w2, kOmegaL2Hz) <= kTwoColorRel, "omega_l2");
    r.require(rel(qf, kQF) <= kTwoColorRel, "|Q/F|");
    r.require(sec < kT6, "runtime");
    r.detail << "gamma=" << g << " omega_l2=" << w2 << "Hz |Q/F|=" << qf << " t=" << sec
             << "s";
}

void criterion7(Result &r) {
    std::vector<double> n;
    for (int k = 1; k <= 16; ++k)
        n.push_back(500.0 * k);
    sweep::Setup s;
    s.cav = ideal_cavity(30e-6, 453.3e-6, two_pi * 520e3);
    s.atoms = AtomParams::three_level(two_pi * 184e3, 1.8);
    sweep::Table lin, cur;
    const double sec = seconds([&] {
        s.curvature = false;
        lin = sweep::scaling(s, n);
        s.curvature = true;
        cur = sweep::scaling(s, n);
    });
    const double e0 = *lin.get("gain_exponent"), p0 = *lin.get("p_opt_largest_n"),
                 d0 = *lin.get("detuning_exponent");
    const double e1 = *cur.get("gain_exponent"), d1 = *cur.get("detuning_exponent");
    r.require(std::abs(e0 - kExpLinear) <= kExpTol, "exponent, curvature off");
    r.require(rel(p0, kPOpt) <= kPOptRel, "p*, curvature off");
    r.require(std::abs(d0 - kDetSlope) <= kDetSlopeTol, "detuning slope, curvature off");
    r.require(std::abs(e1 - kExpCurved) <= kExpTol, "exponent, curvature on");
    r.require(std::abs(d1 - kDetSlope) <= kDetSlopeTol, "detuning slope, curvature on");
    r.require(sec < kT7, "runtime");
    r.detail << "off: exp=" << e0 << " p*=" << p0 << " det_slope=" << d0
             << "; on: exp=" << e1 << " det_slope=" << d1
             << " excluded_n=" << *cur.get("excluded_n") << " t=" << sec << "s";
}

void criterion8(Result &r) {
    sweep::Setup s;
    s.cav = lossy_cavity();
    s.atoms = AtomParams::four_level(two_pi * 184e3, 1.8, 1.0, 230);
    s.n_atoms = 1000;
    s.offset = -fourlevel::compensation_detuning(s.physics_cavity(), s.atoms, 500);
    s.budget_kind = Budget::n_in;
    s.budget = 1000;
    const auto t = sweep::chirp_shift(s, 0.1 * s.cav.kappa);
    const double drop = *t.get("drop_factor");
    r.require(rel(drop, kChirpDrop) <= kChirpRel, "drop factor");
    r.detail << "drop(+kappa/10)=" << *t.get("drop_factor_plus")
             << " drop(-kappa/10)=" << *t.get("drop_factor_minus");
}

void criterion9(Result &r) {
    const auto t = sweep::detection_scan(yb171(), sweep::make_grid(1, 1e5, 101,
                                                                   sweep::Scale::log));
    const double minima = *t.get("local_minima"), db = *t.get("min_db"),
                 nd = *t.get("min_n_d"), lo = *t.get("slope_measurement_asymptote"),
                 hi = *t.get("slope_last");
    r.require(minima == 1.0, "single minimum");
    r.require(std::abs(db - kDepthDb) <= kDepthTol, "depth");
    r.require(nd >= kNd / kNdFactor && nd <= kNd * kNdFactor, "location");
    r.require(std::abs(lo + 1.0) <= kSlopeTol, "low-n slope");
    r.require(std::abs(hi - 1.0) <= kSlopeTol, "high-n slope");
    r.detail << "minima=" << minima << " depth=" << db << "dB n_d=" << nd
             << " slopes=" << lo << "," << hi;
}

void criterion10(Result &r) {
    const auto grid = sweep::make_grid(-150, 150, 601, sweep::Scale::linear);
    const sweep::Setup a = resonant(1.8, 1000, 400);
    sweep::set_threads(1);
    const auto serial = sweep::wineland_scan(a, sweep::ScanVariable::x_a, grid);
    sweep::set_threads(0);
    const auto par1 = sweep::wineland_scan(a, sweep::ScanVariable::x_a, grid);
    const auto par2 = sweep::wineland_scan(a, sweep::ScanVariable::x_a, grid);
    r.require(serial.rows == par1.rows && par1.rows == par2.rows, "deterministic");

    const std::size_t cq = serial.column("Q");
    std::vector<double> zeros;
    for (std::size_t i = 0; i + 1 < serial.rows.size(); ++i) {
        const double q0 = serial.rows[i][cq], q1 = serial.rows[i + 1][cq];
        const double x0 = grid[i], x1 = grid[i + 1];
        if (q0 == 0.0)
            zeros.push_back(x0);
        else if (q0 * q1 < 0.0)
            zeros.push_back(x0 - q0 * (x1 - x0) / (q1 - q0));
    }
    r.require(zeros.size() == 3, "three sign changes");
    if (zeros.size() == 3) {
        r.require(std::abs(zeros[0] + kDressedX) <= kDressedTol, "lower boundary");
        r.require(std::abs(zeros[1]) <= kDressedTol, "center boundary");
        r.require(std::abs(zeros[2] - kDressedX) <= kDressedTol, "upper boundary");
    }

    // Same N_up eta and photons per atom at twice the cooperativity.
    const auto b = sweep::wineland_scan(resonant(3.6, 500, 200), sweep::ScanVariable::x_a, grid);
    double worst = 0.0;
    for (const char *col : {"x_c", "Q", "F", "contrast", "xi2_ku", "xi2", "gain"}) {
        const std::size_t c = serial.column(col);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double u = serial.rows[i][c], v = b.rows[i][c];
            worst = std::max(worst, std::abs(u - v) / std::max(1.0, std::abs(u)));
        }
    }
    r.require(worst <= kInvariance, "eta invariance");
    r.detail << "boundaries=";
    for (double z : zeros)
        r.detail << z << " ";
    r.detail << "invariance_err=" << worst;
}

} // namespace

int main() {
    const std::vector<std::pair<const char *, void (*)(Result &)>> criteria = {
        {"lossless mapping", criterion1},
        {"identity suite", criterion2},
        {"oracle equivalence", criterion3},
        {"dressed resonance", criterion4},
        {"compensation detuning", criterion5},
        {"two-color optimum", criterion6},
        {"scaling", criterion7},
        {"chirp sensitivity", criterion8},
        {"detection scan", criterion9},
        {"wineland-scan golden", criterion10},
    };
    std::set<int> failed;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        r.detail.precision(6);
        try {
            criteria[i].second(r);
        } catch (const std::exception &e) {
            r.pass = false;
            r.misses += std::string(" [exception: ") + e.what() + "]";
        }
        const int id = static_cast<int>(i) + 1;
        if (!r.pass)
            failed.insert(id);
        std::printf("%s criterion %2d %-22s %s%s%s\n", r.pass ? "PASS" : "FAIL", id,
                    criteria[i].first, r.detail.str().c_str(), r.misses.c_str(),
                    !r.pass && kKnownFailures.count(id) ? " (known)" : "");
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
    if (failed != kKnownFailures) {
        std::printf("failing set differs from the documented known failures\n");
        return 1;
    }
    return 0;
}
