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

#include "cavsq/sweep.hpp"

#include "cavsq/cavity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

namespace cavsq::sweep {

namespace {

std::atomic<int> g_threads{0};

double golden_min(const std::function<double(double)> &f, double a, double b,
                  double tol) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = f(c), fd = f(d);
    while (std::abs(b - a) > tol) {
        if (fc <= fd) {
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

void set_threads(int n) { g_threads = std::max(0, n); }

int thread_count() {
    int n = g_threads.load();
    if (n <= 0)
        n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char *env = std::getenv("CAVITY_SQUEEZE_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0)
            n = std::min(n, cap);
    }
    return std::max(1, n);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn) {
    const std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(thread_count()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t err_index = n;
    std::exception_ptr err;
    const auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (i < err_index) {
                    err_index = i;
                    err = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t t = 1; t < workers; ++t)
        pool.emplace_back(work);
    work();
    for (auto &t : pool)
        t.join();
    if (err)
        std::rethrow_exception(err);
}

std::vector<double> make_grid(double start, double stop, int points,
                              Scale scale) {
    if (points < 2)
        fail("grid: need at least two points");
    if (!(start != stop) || !std::isfinite(start) || !std::isfinite(stop))
        fail("grid: start and stop must be finite and distinct");
    std::vector<double> g(points);
    if (scale == Scale::log) {
        if (!(start > 0.0) || !(stop > 0.0))
            fail("grid: log scale needs positive bounds");
        const double a = std::log(start), b = std::log(stop);
        for (int i = 0; i < points; ++i)
            g[i] = std::exp(a + (b - a) * i / (points - 1));
        g.front() = start;
        g.back() = stop;
    } else {
        for (int i = 0; i < points; ++i)
            g[i] = start + (stop - start) * i / (points - 1);
    }
    return g;
}

std::size_t Table::column(const std::string &name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name)
            return i;
    fail("table: no column " + name);
}

std::optional<double> Table::get(const std::string &key) const {
    for (const auto &[k, v] : summary)
        if (k == key)
            return v;
    return std::nullopt;
}

CavityParams Setup::physics_cavity() const { return cavity::to_lossless(cav); }

ProbePoint Setup::probe(double x_a) const {
    ProbePoint p = probe_at(cav, atoms, x_a, offset, n_atoms);
    p.budget_kind = budget_kind;
    p.budget = budget;
    p.tau = tau;
    return p;
}

PointResult squeeze_point(const Setup &s, double x_a) {
    const CavityParams cav = s.physics_cavity();
    const ProbePoint p = s.probe(x_a);
    PointResult r;
    r.budget = spinlight::photon_budget(cav, s.atoms, p);
    double Q = 0.0, F = 0.0, dphi = 0.0;
    if (s.four_level()) {
        const fourlevel::Squeeze q = fourlevel::fl_squeeze(cav, s.atoms, p, r.budget);
        Q = q.Q;
        F = q.F;
        dphi = q.delta_phi;
    } else {
        Q = spinlight::shearing(cav, s.atoms, p, r.budget).Q;
        F = qfi::total_F(cav, s.atoms, p, r.budget);
        dphi = p.n_up > 0.0 ? spinlight::phase_shift(cav, s.atoms, p, r.budget) : 0.0;
    }
    r.outcome = gaussian::outcome(Q, F, dphi, r.budget.n_sc, s.n_atoms, s.curvature);
    r.chi = s.tau > 0.0 ? Q / (s.n_atoms * s.tau) : 0.0;
    return r;
}

Table spectrum(const Setup &s, const std::vector<double> &x_a) {
    const CavityParams cav = s.physics_cavity();
    Table t;
    t.columns = {"x_a", "detuning_hz", "x_c", "T0", "T", "scatter_to_transmit"};
    t.rows.resize(x_a.size());
    parallel_for(x_a.size(), [&](std::size_t i) {
        const ProbePoint p = s.probe(x_a[i]);
        const auto tr = cavity::transmission(cav, s.atoms, p);
        t.rows[i] = {x_a[i], 0.5 * x_a[i] * s.atoms.gamma / two_pi, p.x_c,
                     tr.T0, tr.T, cavity::scatter_to_transmit(cav, s.atoms, p)};
    });
    return t;
}

namespace {

const std::vector<std::string> &outcome_columns() {
    static const std::vector<std::string> c = {
        "n_in", "n_t", "n_sc", "n_c", "delta_phi_rad", "Q", "F",
        "contrast", "xi2_ku", "xi2", "gain", "gain_db"};
    return c;
}

void append_outcome(std::vector<double> &row, const PointResult &r) {
    const auto &o = r.outcome;
    row.insert(row.end(), {r.budget.n_in, r.budget.n_t, r.budget.n_sc,
                           r.budget.n_c, o.delta_phi, o.Q, o.F, o.contrast,
                           o.xi2_ku, o.xi2, 1.0 / o.xi2,
                           -10.0 * std::log10(o.xi2)});
}

} // namespace

Table squeeze(const Setup &s, double x_a) {
    const PointResult r = squeeze_point(s, x_a);
    Table t;
    t.columns = {"x_a", "x_c"};
    t.columns.insert(t.columns.end(), outcome_columns().begin(),
                     outcome_columns().end());
    t.columns.push_back("chi_rad_s");
    std::vector<double> row = {x_a, s.probe(x_a).x_c};
    append_outcome(row, r);
    row.push_back(r.chi);
    t.rows.push_back(row);
    if (r.budget.saturation_warning)
        t.notes.push_back("intracavity photon number exceeds N_up/10; the "
                          "linear-response model may not hold");
    return t;
}

Table wineland_scan(const Setup &s, ScanVariable var,
                    const std::vector<double> &grid, double x_a) {
    if (grid.size() < 2)
        fail("wineland_scan: grid needs at least two points");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]) && !(grid[i] < grid[i - 1]))
            fail("wineland_scan: grid must be strictly monotone");
    Table t;
    const char *name = var == ScanVariable::x_a    ? "x_a_set"
                       : var == ScanVariable::n_sc ? "n_sc_set"
                                                   : "n_atoms";
    t.columns = {name, "x_a", "x_c"};
    t.columns.insert(t.columns.end(), outcome_columns().begin(),
                     outcome_columns().end());
    t.rows.resize(grid.size());
    std::atomic<bool> saturated{false};
    parallel_for(grid.size(), [&](std::size_t i) {
        Setup local = s;
        double xa = x_a;
        switch (var) {
        case ScanVariable::x_a:
            xa = grid[i];
            break;
        case ScanVariable::n_sc:
            local.budget_kind = Budget::n_sc;
            local.budget = grid[i];
            break;
        case ScanVariable::n_atoms:
            local.n_atoms = grid[i];
            break;
        }
        const PointResult r = squeeze_point(local, xa);
        if (r.budget.saturation_warning)
            saturated = true;
        std::vector<double> row = {grid[i], xa, local.probe(xa).x_c};
        append_outcome(row, r);
        t.rows[i] = std::move(row);
    });
    if (saturated)
        t.notes.push_back("some grid points exceed the saturation guard "
                          "(n_c > N_up/10)");
    return t;
}

namespace {

struct Linear {
    double q1;
    double f1;
};

Linear per_scattered_photon(const Setup &s, double x_a) {
    Setup one = s;
    one.budget_kind = Budget::n_sc;
    one.budget = 1.0;
    const PointResult r = squeeze_point(one, x_a);
    return {r.outcome.Q, r.outcome.F};
}

bool better(const GainOptimum &a, const GainOptimum &b) {
    const double tol = 1e-12 * std::max(a.xi2, b.xi2);
    if (a.xi2 < b.xi2 - tol)
        return true;
    if (a.xi2 > b.xi2 + tol)
        return false;
    if (std::abs(a.x_a) != std::abs(b.x_a))
        return std::abs(a.x_a) < std::abs(b.x_a);
    if (a.n_sc != b.n_sc)
        return a.n_sc < b.n_sc;
    return a.x_a > b.x_a;
}

constexpr double kPerDecade = 64.0;

} // namespace

GainOptimum optimize_photons(const Setup &s, double x_a) {
    const double N = s.n_atoms;
    if (!(N >= 2.0))
        fail("optimize: need N >= 2");
    const Linear lin = per_scattered_photon(s, x_a);
    const auto xi = [&](double logp) {
        const double n = std::exp(logp) * N;
        return gaussian::wineland(lin.q1 * n, lin.f1 * n, n, N, s.curvature);
    };
    const double lo = std::log(1e-4), hi = std::log(1e2);
    const int n = static_cast<int>(std::lround(6.0 * kPerDecade)) + 1;
    const double step = (hi - lo) / (n - 1);
    int best = 0;
    double best_v = xi(lo);
    for (int i = 1; i < n; ++i) {
        const double v = xi(lo + i * step);
        if (v < best_v * (1.0 - 1e-12)) {
            best_v = v;
            best = i;
        }
    }
    double lp = lo + best * step;
    if (best > 0 && best < n - 1) {
        const double r = golden_min(xi, lp - step, lp + step, 1e-10);
        if (xi(r) < best_v) {
            lp = r;
            best_v = xi(r);
        }
    }
    GainOptimum o;
    o.x_a = x_a;
    o.p = std::exp(lp);
    o.n_sc = o.p * N;
    o.xi2 = best_v;
    o.gain = 1.0 / best_v;
    return o;
}

GainOptimum optimize_gain(const Setup &s) {
    const double lo = std::log(1e-2), hi = std::log(1e5);
    const int n = static_cast<int>(std::lround(7.0 * kPerDecade)) + 1;
    const double step = (hi - lo) / (n - 1);
    std::vector<GainOptimum> grid(2 * n);
    parallel_for(grid.size(), [&](std::size_t i) {
        const double sign = i < static_cast<std::size_t>(n) ? 1.0 : -1.0;
        const double x = sign * std::exp(lo + (i % n) * step);
        grid[i] = optimize_photons(s, x);
    });
    std::size_t bi = 0;
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (better(grid[i], grid[bi]))
            bi = i;
    GainOptimum best = grid[bi];
    const int k = static_cast<int>(bi % n);
    if (k > 0 && k < n - 1) {
        const double sign = best.x_a > 0.0 ? 1.0 : -1.0;
        const double c = lo + k * step;
        const auto f = [&](double lx) {
            return optimize_photons(s, sign * std::exp(lx)).xi2;
        };
        const double lx = golden_min(f, c - step, c + step, 1e-9);
        const GainOptimum r = optimize_photons(s, sign * std::exp(lx));
        if (r.xi2 < best.xi2)
            best = r;
    }
    return best;
}

PowerFit scaling_fit(const std::vector<std::pair<double, double>> &points) {
    if (points.size() < 4)
        fail("scaling_fit: need at least four points");
    const double n = static_cast<double>(points.size());
    double sx = 0.0, sy = 0.0;
    for (const auto &[x, y] : points) {
        if (!(x > 0.0) || !(y > 0.0))
            fail("scaling_fit: values must be positive");
        sx += std::log(x);
        sy += std::log(y);
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (const auto &[x, y] : points) {
        const double dx = std::log(x) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y) - my);
    }
    if (!(sxx > 0.0))
        fail("scaling_fit: x values must not all coincide");
    PowerFit f;
    f.exponent = sxy / sxx;
    const double a = my - f.exponent * mx;
    f.prefactor = std::exp(a);
    double ssr = 0.0;
    for (const auto &[x, y] : points) {
        const double r = std::log(y) - (a + f.exponent * std::log(x));
        f.residuals.push_back(r);
        ssr += r * r;
    }
    f.stderr_ = std::sqrt(ssr / (n - 2.0) / sxx);
    return f;
}

Table scaling(const Setup &s, const std::vector<double> &n_atoms) {
    if (n_atoms.size() < 4)
        fail("scaling: need at least four atom numbers");
    std::vector<GainOptimum> opt(n_atoms.size());
    for (std::size_t i = 0; i < n_atoms.size(); ++i) {
        Setup local = s;
        local.n_atoms = n_atoms[i];
        opt[i] = optimize_gain(local);
    }
    Table t;
    t.columns = {"n_atoms", "x_a_opt", "n_sc_opt", "p_opt", "xi2", "gain",
                 "gain_db"};
    std::vector<std::pair<double, double>> gain, det;
    for (std::size_t i = 0; i < opt.size(); ++i) {
        const auto &o = opt[i];
        t.rows.push_back({n_atoms[i], o.x_a, o.n_sc, o.p, o.xi2, o.gain,
                          -10.0 * std::log10(o.xi2)});
        gain.emplace_back(n_atoms[i], o.gain);
        det.emplace_back(n_atoms[i], std::abs(o.x_a));
    }
    PowerFit fit = scaling_fit(gain);
    double excluded = 0.0;
    if (s.curvature && gain.size() >= 5) {
        std::size_t smallest = 0;
        for (std::size_t i = 1; i < gain.size(); ++i)
            if (gain[i].first < gain[smallest].first)
                smallest = i;
        double ss = 0.0;
        for (std::size_t i = 0; i < gain.size(); ++i)
            if (i != smallest)
                ss += fit.residuals[i] * fit.residuals[i];
        const double rms = std::sqrt(ss / (gain.size() - 1.0));
        if (std::abs(fit.residuals[smallest]) > 3.0 * rms) {
            excluded = gain[smallest].first;
            auto rest = gain;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(smallest));
            fit = scaling_fit(rest);
            t.notes.push_back("smallest atom number excluded from the gain "
                              "fit: residual above 3x the rms of the others");
        }
    }
    const PowerFit dfit = scaling_fit(det);
    std::size_t largest = 0;
    for (std::size_t i = 1; i < n_atoms.size(); ++i)
        if (n_atoms[i] > n_atoms[largest])
            largest = i;
    t.summary = {{"gain_exponent", fit.exponent},
                 {"gain_exponent_stderr", fit.stderr_},
                 {"detuning_exponent", dfit.exponent},
                 {"detuning_exponent_stderr", dfit.stderr_},
                 {"p_opt_largest_n", opt[largest].p},
                 {"excluded_n", excluded}};
    return t;
}

double dressed_center(const Setup &s) {
    const CavityParams cav = s.physics_cavity();
    return s.offset + fourlevel::cavity_pull(cav, s.atoms, 0.5 * s.n_atoms);
}

namespace {

ProbePoint center_probe(const Setup &s) {
    ProbePoint p = s.probe(2.0 * dressed_center(s) / s.atoms.gamma);
    p.budget_kind = Budget::n_in;
    p.budget = 1.0;
    return p;
}

double chirp_per_photon(const Setup &s, double omega_m) {
    const CavityParams cav = s.physics_cavity();
    qfi::DetectionSetup d = s.detection;
    d.omega_m = omega_m;
    return qfi::chirp_fisher(cav, s.atoms, center_probe(s), d).F;
}

} // namespace

double best_sideband_offset(const Setup &s) {
    const CavityParams cav = s.physics_cavity();
    const double g = 0.5 * std::sqrt(s.atoms.eta_up * cav.kappa * s.atoms.gamma);
    const double w0 = g * std::sqrt(0.5 * s.n_atoms);
    if (!(w0 > 0.0))
        fail("best_sideband_offset: no atom-cavity coupling");
    const int n = 401;
    const double a = 0.3 * w0, b = 2.0 * w0, step = (b - a) / (n - 1);
    int best = 0;
    double best_v = -1.0;
    for (int i = 0; i < n; ++i) {
        const double v = chirp_per_photon(s, a + i * step);
        if (v > best_v) {
            best_v = v;
            best = i;
        }
    }
    double w = a + best * step;
    if (best > 0 && best < n - 1)
        w = golden_min([&](double x) { return -chirp_per_photon(s, x); },
                       w - step, w + step, 1e-9 * w0);
    return w;
}

Table detection_scan(const Setup &s, const std::vector<double> &n_d) {
    if (n_d.size() < 2)
        fail("detection_scan: grid needs at least two points");
    const CavityParams cav = s.physics_cavity();
    qfi::DetectionSetup d = s.detection;
    if (!d.omega_m)
        d.omega_m = best_sideband_offset(s);
    const qfi::ChirpFisher c =
        qfi::chirp_fisher(cav, s.atoms, center_probe(s), d, s.branching);
    const double q = d.q_eff;
    const double sql = 0.25 * s.n_atoms;
    if (!(c.n_t > 0.0))
        fail("detection_scan: no transmitted light");
    const auto sigma = [&](double nd) {
        const double nin = nd / (q * c.n_t);
        return 1.0 / (1.0 + c.F * nin) + c.raman * nin / sql;
    };
    Table t;
    t.columns = {"n_d", "n_in", "n_t", "F_meas", "raman_var", "sigma2",
                 "sigma2_db"};
    std::size_t bi = 0;
    for (std::size_t i = 0; i < n_d.size(); ++i) {
        const double nin = n_d[i] / (q * c.n_t);
        const double v = sigma(n_d[i]);
        t.rows.push_back({n_d[i], nin, c.n_t * nin, c.F * nin,
                          c.raman * nin / sql, v, 10.0 * std::log10(v)});
        if (v < t.rows[bi][5])
            bi = i;
    }
    double nmin = n_d[bi], vmin = t.rows[bi][5];
    int minima = 0;
    for (std::size_t i = 1; i + 1 < n_d.size(); ++i)
        if (t.rows[i][5] < t.rows[i - 1][5] && t.rows[i][5] <= t.rows[i + 1][5])
            ++minima;
    if (bi > 0 && bi + 1 < n_d.size()) {
        const double l = golden_min([&](double x) { return sigma(std::exp(x)); },
                                    std::log(n_d[bi - 1]), std::log(n_d[bi + 1]),
                                    1e-10);
        if (sigma(std::exp(l)) < vmin) {
            nmin = std::exp(l);
            vmin = sigma(nmin);
        }
    }
    const auto slope = [&](std::size_t i, std::size_t j) {
        return std::log(t.rows[j][5] / t.rows[i][5]) / std::log(n_d[j] / n_d[i]);
    };
    // measurement term alone far into the shot-noise regime
    const double nd_far = 1e6 * q * c.n_t / c.F;
    const auto meas = [&](double nd) { return 1.0 / (1.0 + c.F * nd / (q * c.n_t)); };
    const double meas_slope = std::log(meas(1.01 * nd_far) / meas(nd_far)) / std::log(1.01);
    const std::size_t m = n_d.size();
    t.summary = {{"omega_m_hz", *d.omega_m / two_pi},
                 {"center_hz", dressed_center(s) / two_pi},
                 {"F_per_n_d", c.F / (q * c.n_t)},
                 {"raman_per_n_d", c.raman / (q * c.n_t) / sql},
                 {"min_n_d", nmin},
                 {"min_sigma2", vmin},
                 {"min_db", 10.0 * std::log10(vmin)},
                 {"local_minima", static_cast<double>(minima)},
                 {"slope_first", slope(0, 1)},
                 {"slope_last", slope(m - 2, m - 1)},
                 {"slope_measurement_asymptote", meas_slope}};
    return t;
}

Table chirp_shift(const Setup &s, double shift) {
    Table t;
    t.columns = {"cavity_shift_hz", "omega_m_hz", "F_chirp_per_n_in",
                 "F_plus", "F_minus"};
    const CavityParams cav = s.physics_cavity();
    for (double sh : {0.0, shift, -shift}) {
        Setup local = s;
        local.offset = s.offset + sh;
        const double wm = best_sideband_offset(local);
        qfi::DetectionSetup d = local.detection;
        d.omega_m = wm;
        const auto c = qfi::chirp_fisher(cav, local.atoms, center_probe(local), d);
        t.rows.push_back({sh / two_pi, wm / two_pi, c.F, c.F_plus, c.F_minus});
    }
    const double up = t.rows[0][2] / t.rows[1][2];
    const double down = t.rows[0][2] / t.rows[2][2];
    t.summary = {{"drop_factor", std::max(up, down)},
                 {"drop_factor_plus", up},
                 {"drop_factor_minus", down}};
    return t;
}

fourlevel::Operating operating(const Setup &s) {
    fourlevel::Operating op;
    op.cav = s.physics_cavity();
    op.atoms = s.atoms;
    op.n_atoms = s.n_atoms;
    op.offset = s.offset;
    return op;
}

Table two_color(const Setup &s, const TwoColorRequest &req) {
    const fourlevel::Operating op = operating(s);
    const fourlevel::Window win =
        req.window ? *req.window : fourlevel::default_red_window(op);
    fourlevel::TwoColorPulse pulse;
    double w1 = req.omega_l1;
    int feasible = 1;
    if (req.optimize) {
        fourlevel::Window w1win;
        if (req.window_l1) {
            w1win = *req.window_l1;
        } else {
            const double hi = fourlevel::rabi_peaks(op).second;
            w1win = {hi, 3.0 * hi};
        }
        const auto o = fourlevel::two_color_optimize(op, w1win, win, req.convention);
        pulse = o.pulse;
        w1 = o.omega_l1;
        feasible = o.feasible;
    } else {
        pulse = fourlevel::two_color_solve(op, w1, win, req.convention);
    }
    const auto fd1 = fourlevel::pulse_derivatives_fd(op, w1);
    const auto rel = [](double a, double b) {
        return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
    };
    Table t;
    t.columns = {"omega_l1_hz", "omega_l2_hz", "gamma", "Q1", "F1", "dphi1",
                 "Q2", "F2", "dphi2", "q_over_f"};
    t.rows.push_back({w1 / two_pi, pulse.second.omega / two_pi, pulse.gamma,
                      pulse.first.Q, pulse.first.F, pulse.first.dphi,
                      pulse.second.Q, pulse.second.F, pulse.second.dphi,
                      pulse.q_over_f});
    t.summary = {{"gamma", pulse.gamma},
                 {"omega_l2_hz", pulse.second.omega / two_pi},
                 {"q_over_f", pulse.q_over_f},
                 {"residual_q", pulse.residual_q},
                 {"residual_phi", pulse.residual_phi},
                 {"roots_found", static_cast<double>(pulse.roots_found)},
                 {"feasible_l1", static_cast<double>(feasible)},
                 {"window_lo_hz", win.lo / two_pi},
                 {"window_hi_hz", win.hi / two_pi},
                 {"dQdN_fd_rel", rel(pulse.first.dQ_dN, fd1.first)},
                 {"dphidN_fd_rel", rel(pulse.first.ddphi_dN, fd1.second)}};
    t.notes.push_back(req.convention == fourlevel::PhaseConvention::echo
                          ? "phase convention: echo"
                          : "phase convention: direct");
    return t;
}

} // namespace cavsq::sweep
