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
 * Scans and optimizers over the analytic model. Every scan returns a Table
 * whose row order follows the grid, whatever the number of worker threads.
 */
#pragma once

#include "cavsq/fourlevel.hpp"
#include "cavsq/gaussian.hpp"
#include "cavsq/qfi.hpp"
#include "cavsq/spinlight.hpp"
#include "cavsq/types.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cavsq::sweep {

/// 0 = hardware concurrency. CAVITY_SQUEEZE_THREADS caps the result.
void set_threads(int n);
int thread_count();

/// Calls fn(i) for i in [0, n) on the work pool.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn);

enum class Scale { linear, log };

std::vector<double> make_grid(double start, double stop, int points,
                              Scale scale);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, double>> summary;
    std::vector<std::string> notes;

    [[nodiscard]] std::size_t column(const std::string &name) const;
    [[nodiscard]] std::optional<double> get(const std::string &key) const;
};

struct Setup {
    CavityParams cav; ///< as configured; lossy mirrors are mapped first
    AtomParams atoms;
    double n_atoms = 1000.0;
    double offset = 0.0; ///< omega_c - omega_a, rad/s
    Budget budget_kind = Budget::n_sc;
    double budget = 0.0;
    double tau = 1e-6;
    bool curvature = false;
    qfi::DetectionSetup detection;
    double branching = 2.0 / 3.0;

    [[nodiscard]] CavityParams physics_cavity() const;
    [[nodiscard]] ProbePoint probe(double x_a) const;
    [[nodiscard]] bool four_level() const { return atoms.eta_down != 0.0; }
};

struct PointResult {
    spinlight::PhotonBudget budget;
    gaussian::SqueezeOutcome outcome;
    double chi = 0.0;
};

PointResult squeeze_point(const Setup &s, double x_a);

Table spectrum(const Setup &s, const std::vector<double> &x_a);

Table squeeze(const Setup &s, double x_a);

enum class ScanVariable { x_a, n_sc, n_atoms };

/// x_a is used as the fixed detuning when scanning n_sc or N.
Table wineland_scan(const Setup &s, ScanVariable var,
                    const std::vector<double> &grid, double x_a = 0.0);

struct GainOptimum {
    double x_a = 0.0;
    double n_sc = 0.0;
    double p = 0.0; ///< n_sc / N
    double xi2 = 1.0;
    double gain = 1.0; ///< 1/xi2
};

/// Best n_sc at fixed x_a (three-level model, budget in n_sc).
GainOptimum optimize_photons(const Setup &s, double x_a);

/// Per-detuning photon optimization, then detuning maximization.
GainOptimum optimize_gain(const Setup &s);

struct PowerFit {
    double exponent = 0.0;
    double stderr_ = 0.0;
    double prefactor = 0.0;
    std::vector<double> residuals;
};

PowerFit scaling_fit(const std::vector<std::pair<double, double>> &points);

/// Optimum per atom number plus power-law fits of gain and |x_a*|.
Table scaling(const Setup &s, const std::vector<double> &n_atoms);

/// Sideband offset maximizing the chirp information, rad/s.
double best_sideband_offset(const Setup &s);

/// Laser frequency of the dressed cavity resonance, rad/s from the |up> line.
double dressed_center(const Setup &s);

/// S_z resolution vs detected photon number, chirped two-sideband probe.
Table detection_scan(const Setup &s, const std::vector<double> &n_d);

/// F_chirp at the compensated cavity over F_chirp with the cavity moved by
/// +shift and -shift rad/s; sideband offset re-optimized at each position.
/// drop_factor is the larger of the two ratios.
Table chirp_shift(const Setup &s, double shift);

struct TwoColorRequest {
    double omega_l1 = 0.0;
    std::optional<fourlevel::Window> window;
    fourlevel::PhaseConvention convention = fourlevel::PhaseConvention::echo;
    bool optimize = false;
    std::optional<fourlevel::Window> window_l1;
};

Table two_color(const Setup &s, const TwoColorRequest &req);

fourlevel::Operating operating(const Setup &s);

} // namespace cavsq::sweep
