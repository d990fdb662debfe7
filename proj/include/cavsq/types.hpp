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
 * Parameter records shared by every module. Frequencies are angular
 * (rad/s); detunings inside ProbePoint are normalized.
 */
#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace cavsq {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

enum class ErrorCode {
    invalid_argument = 1,
    config = 2,
    no_solution = 3,
    validation = 4,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(what), code_(code) {}
    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(const std::string &msg) {
    throw Error(ErrorCode::invalid_argument, msg);
}

struct CavityParams {
    double T1 = 0.0;
    double T2 = 0.0;
    double L1 = 0.0;
    double L2 = 0.0;
    double finesse = 0.0;
    double kappa = 0.0; ///< FWHM linewidth, rad/s
    double fsr = 0.0;   ///< free spectral range, rad/s (0 = unknown)
    double waist = 0.0; ///< 1/e^2 intensity radius, m (0 = unknown)
    double wavelength = 0.0;

    [[nodiscard]] bool lossless() const { return L1 == 0.0 && L2 == 0.0; }
    /// Throws on unphysical mirrors; returns consistency warnings.
    [[nodiscard]] std::vector<std::string> check() const;
};

/// Finesse-consistent lossless cavity, finesse = 2pi/(T1+T2).
CavityParams ideal_cavity(double T1, double T2, double kappa);

struct AtomParams {
    double gamma = 0.0; ///< FWHM linewidth, rad/s
    double eta = 0.0;
    double eta_up = 0.0;
    double eta_down = 0.0;
    double b = 0.0; ///< 2 delta_z / gamma

    [[nodiscard]] double delta_z() const { return 0.5 * b * gamma; }

    static AtomParams three_level(double gamma, double eta);
    static AtomParams four_level(double gamma, double eta,
                                 double eta_down_ratio, double b);
    void check() const;
};

/// Cooperativity from cavity geometry, 24 F / (pi k^2 w^2).
double cooperativity(const CavityParams &cav);

enum class Budget { n_in, n_t, n_sc, n_c };

const char *budget_name(Budget b);

struct ProbePoint {
    double x_a = 0.0;
    double x_c = 0.0;
    double n_up = 0.0;
    double n_down = 0.0;
    Budget budget_kind = Budget::n_sc;
    double budget = 0.0;
    double tau = 1e-6;

    [[nodiscard]] double n_atoms() const { return n_up + n_down; }
    [[nodiscard]] double spin() const { return 0.5 * (n_up + n_down); }
};

/// Probe at atomic detuning x_a for a cavity sitting `offset` rad/s above
/// the atomic line (omega_c - omega_a).
ProbePoint probe_at(const CavityParams &cav, const AtomParams &atoms,
                    double x_a, double offset, double n_atoms);

} // namespace cavsq
