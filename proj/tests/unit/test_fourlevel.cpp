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
#include "cavsq/fourlevel.hpp"
#include "cavsq/qfi.hpp"
#include "cavsq/spinlight.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace cavsq;
using cavsq::test::uniform;

namespace {

fourlevel::Operating yb_operating() {
    fourlevel::Operating op;
    op.cav = cavity::to_lossless(test::yb_cavity());
    op.atoms = test::yb_atoms(1.0 / 3.0);
    op.n_atoms = 1000;
    op.offset = -two_pi * 0.34e6;
    return op;
}

} // namespace

TEST_CASE("four-level model reduces to three-level without the second line") {
    const CavityParams cav = ideal_cavity(30e-6, 453.3e-6, two_pi * 520e3);
    AtomParams four = test::yb_atoms(1.0 / 3.0);
    four.eta_down = 0.0;
    const AtomParams three = test::yb_atoms();
    for (int i = 0; i < 300; ++i) {
        ProbePoint p = probe_at(cav, three, uniform(-200, 200), two_pi * uniform(-2e6, 2e6),
                                uniform(10, 3000));
        p.budget = uniform(1, 500);
        const auto b = spinlight::photon_budget(cav, three, p);
        const auto s = fourlevel::fl_squeeze(cav, four, p, b);
        CHECK(s.Q == doctest::Approx(spinlight::shearing(cav, three, p, b).Q).epsilon(1e-9));
        CHECK(s.F == doctest::Approx(qfi::total_F(cav, three, p, b)).epsilon(1e-9));
    }
}

TEST_CASE("analytic N-derivatives match central differences") {
    const auto op = yb_operating();
    for (double w : {-3e6, -1.5e6, 2e6, 7.333e6, 12e6}) {
        const auto r = fourlevel::pulse_response(op, two_pi * w);
        const auto [dq, dphi] = fourlevel::pulse_derivatives_fd(op, two_pi * w);
        CHECK(r.dQ_dN == doctest::Approx(dq).epsilon(1e-5));
        CHECK(r.ddphi_dN == doctest::Approx(dphi).epsilon(1e-5));
    }
}

TEST_CASE("compensation detuning and cavity pull") {
    const CavityParams cav = cavity::to_lossless(test::yb_cavity());
    const AtomParams atoms = test::yb_atoms(1.0 / 3.0);
    const double dc = fourlevel::compensation_detuning(cav, atoms, 500);
    CHECK(dc / two_pi == doctest::Approx(0.34e6).epsilon(0.05));
    CHECK(2.0 * dc / cav.kappa == doctest::Approx(1.3).epsilon(0.05));
    // Far from the second line the pull approaches the compensation value.
    CHECK(fourlevel::cavity_pull(cav, atoms, 500) == doctest::Approx(dc).epsilon(1e-3));
    AtomParams flat = atoms;
    flat.b = 0.0;
    CHECK(test::error_code([&] { fourlevel::compensation_detuning(cav, flat, 500); }) ==
          ErrorCode::invalid_argument);
}

TEST_CASE("Raman flips scale with the branching ratio") {
    const CavityParams cav = cavity::to_lossless(test::yb_cavity());
    const AtomParams atoms = test::yb_atoms(1.0 / 3.0);
    ProbePoint p = probe_at(cav, atoms, 20, -two_pi * 0.34e6, 1000);
    p.budget_kind = Budget::n_in;
    p.budget = 1000;
    const auto b = spinlight::photon_budget(cav, atoms, p);
    const double a = fourlevel::raman_flips(cav, atoms, p, b, 0.5);
    CHECK(a > 0.0);
    CHECK(fourlevel::raman_flips(cav, atoms, p, b, 1.0) == doctest::Approx(2 * a));
    CHECK(fourlevel::raman_flips(cav, atoms, p, b, 0.0) == 0.0);
    CHECK_THROWS_AS(fourlevel::raman_flips(cav, atoms, p, b, 1.5), Error);
}

TEST_CASE("two-color solution cancels atom-number sensitivity") {
    const auto op = yb_operating();
    const auto w = fourlevel::default_red_window(op);
    CHECK(w.lo < 0.0);
    CHECK(w.hi == 0.0);
    const auto t = fourlevel::two_color_solve(op, two_pi * 7.333e6, w,
                                              fourlevel::PhaseConvention::echo);
    CHECK(t.gamma > 0.0);
    CHECK(t.residual_q <= 1e-8);
    CHECK(t.residual_phi <= 1e-8);
    CHECK(t.roots_found >= 1);
    const double dq = t.first.dQ_dN + t.gamma * t.second.dQ_dN;
    CHECK(std::abs(dq) <= 1e-8 * std::abs(t.first.dQ_dN));
    CHECK(t.second.omega >= w.lo);
    CHECK(t.second.omega <= w.hi);
}

TEST_CASE("two-color solver reports a missing solution") {
    const auto op = yb_operating();
    CHECK(test::error_code([&] {
              fourlevel::two_color_solve(op, two_pi * 7.333e6, {two_pi * 40e6, two_pi * 41e6},
                                         fourlevel::PhaseConvention::echo);
          }) == ErrorCode::no_solution);
    CHECK(test::error_code([&] {
              fourlevel::two_color_solve(op, two_pi * 7.333e6, {1.0, 0.0},
                                         fourlevel::PhaseConvention::echo);
          }) == ErrorCode::invalid_argument);
}
