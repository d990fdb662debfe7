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
#include "cavsq/qfi.hpp"
#include "cavsq/spinlight.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace cavsq;
using cavsq::test::uniform;

namespace {

ProbePoint random_point(const CavityParams &cav, const AtomParams &atoms) {
    ProbePoint p = probe_at(cav, atoms, uniform(-300, 300), two_pi * uniform(-3e6, 3e6),
                            uniform(10, 5000));
    p.budget_kind = Budget::n_sc;
    p.budget = uniform(1, 1000);
    return p;
}

} // namespace

TEST_CASE("photon budget is consistent whichever count is given") {
    const CavityParams cav = ideal_cavity(30e-6, 453.3e-6, two_pi * 520e3);
    const AtomParams atoms = test::yb_atoms();
    for (int i = 0; i < 300; ++i) {
        ProbePoint p = random_point(cav, atoms);
        const auto ref = spinlight::photon_budget(cav, atoms, p);
        for (auto [kind, value] : {std::pair{Budget::n_in, ref.n_in},
                                   std::pair{Budget::n_t, ref.n_t},
                                   std::pair{Budget::n_c, ref.n_c}}) {
            ProbePoint q = p;
            q.budget_kind = kind;
            q.budget = value;
            const auto b = spinlight::photon_budget(cav, atoms, q);
            CHECK(b.n_sc == doctest::Approx(ref.n_sc).epsilon(1e-10));
            CHECK(b.intracavity == doctest::Approx(ref.intracavity).epsilon(1e-10));
        }
    }
}

TEST_CASE("Q/F depends only on the probe point") {
    const CavityParams cav = ideal_cavity(30e-6, 453.3e-6, two_pi * 520e3);
    const AtomParams atoms = test::yb_atoms();
    for (int i = 0; i < 1000; ++i) {
        const ProbePoint p = random_point(cav, atoms);
        const auto b = spinlight::photon_budget(cav, atoms, p);
        const double Q = spinlight::shearing(cav, atoms, p, b).Q;
        const double F = qfi::total_F(cav, atoms, p, b);
        CHECK(Q / F == doctest::Approx(spinlight::q_over_f(atoms, p)).epsilon(1e-9));
        CHECK(F == doctest::Approx(qfi::total_F_route(cav, atoms, p, b)).epsilon(1e-9));
        CHECK(F >= 0.0);
    }
}

TEST_CASE("phase shift from either photon count agrees") {
    const CavityParams cav = ideal_cavity(30e-6, 453.3e-6, two_pi * 520e3);
    const AtomParams atoms = test::yb_atoms();
    for (int i = 0; i < 300; ++i) {
        const ProbePoint p = random_point(cav, atoms);
        const auto b = spinlight::photon_budget(cav, atoms, p);
        CHECK(spinlight::phase_shift(cav, atoms, p, b) ==
              doctest::Approx(spinlight::phase_shift_transmitted(cav, atoms, p, b))
                  .epsilon(1e-9));
    }
}

TEST_CASE("no light, no effect") {
    const CavityParams cav = ideal_cavity(30e-6, 453.3e-6, two_pi * 520e3);
    const AtomParams atoms = test::yb_atoms();
    ProbePoint p = probe_at(cav, atoms, 10, 0, 1000);
    p.budget = 0;
    const auto b = spinlight::photon_budget(cav, atoms, p);
    CHECK(b.n_t == 0.0);
    CHECK(spinlight::shearing(cav, atoms, p, b).Q == 0.0);
    CHECK(qfi::total_F(cav, atoms, p, b) == 0.0);
    CHECK(spinlight::phase_shift(cav, atoms, p, b) == 0.0);
}

TEST_CASE("invalid budgets are rejected") {
    const CavityParams cav = ideal_cavity(30e-6, 453.3e-6, two_pi * 520e3);
    const AtomParams atoms = test::yb_atoms();
    ProbePoint p = probe_at(cav, atoms, 10, 0, 1000);
    p.budget = -1;
    CHECK_THROWS_AS(spinlight::photon_budget(cav, atoms, p), Error);
    p.budget = 1;
    p.budget_kind = Budget::n_c;
    p.tau = 0;
    CHECK_THROWS_AS(spinlight::photon_budget(cav, atoms, p), Error);
}

TEST_CASE("measured information never exceeds the total") {
    const CavityParams lossy = test::yb_cavity();
    const CavityParams cav = cavity::to_lossless(lossy);
    const AtomParams atoms = test::yb_atoms();
    qfi::DetectionSetup d;
    for (int i = 0; i < 300; ++i) {
        const ProbePoint p = random_point(cav, atoms);
        const auto b = spinlight::photon_budget(cav, atoms, p);
        const double F = qfi::total_F(cav, atoms, p, b);
        d.mode = qfi::TotMode::both;
        const auto both = qfi::measurement_fisher(cav, atoms, p, d, b);
        d.mode = qfi::TotMode::transmission;
        const auto trans = qfi::measurement_fisher(cav, atoms, p, d, b);
        CHECK(both.normalized <= F * (1 + 1e-12));
        CHECK(trans.normalized <= both.normalized * (1 + 1e-12));
        CHECK(trans.amplitude + trans.phase ==
              doctest::Approx(trans.normalized).epsilon(1e-12));
    }
    d.q_eff = 0;
    const ProbePoint p = random_point(cav, atoms);
    CHECK_THROWS_AS(qfi::measurement_fisher(cav, atoms, p, d,
                                            spinlight::photon_budget(cav, atoms, p)),
                    Error);
}

TEST_CASE("QFI split of a coherent state") {
    const cplx a(0.3, -1.2), da(0.7, 0.4);
    const auto q = qfi::qfi_split(a, da, 10.0);
    CHECK(q.total == doctest::Approx(4 * std::norm(da)));
    CHECK(q.amplitude + q.phase == doctest::Approx(q.total));
    CHECK(q.normalized == doctest::Approx(5 * q.total));
    const auto z = qfi::qfi_split(0.0, da);
    CHECK(z.phase_undefined);
}
