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
#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace cavsq;
using cavsq::test::uniform;

TEST_CASE("lineshapes satisfy Ld^2 + La^2 = La") {
    for (int i = 0; i < 2000; ++i) {
        const double x = uniform(-1e3, 1e3);
        const auto l = cavity::lorentzians(x);
        CHECK(std::abs(l.Ld * l.Ld + l.La * l.La - l.La) <= 1e-15);
        const cplx u = cavity::response(x);
        CHECK(std::abs(u.real() - l.La) <= 1e-15);
        CHECK(std::abs(u.imag() + l.Ld) <= 1e-15);
    }
    CHECK_THROWS_AS(cavity::lorentzians(NAN), Error);
}

TEST_CASE("empty cavity transmits a Lorentzian") {
    const CavityParams cav = ideal_cavity(1e-4, 1e-4, two_pi * 1e6);
    const AtomParams atoms = test::yb_atoms();
    for (double xc : {-3.0, -1.0, 0.0, 0.5, 4.0}) {
        ProbePoint p;
        p.x_c = xc;
        p.x_a = 7.0;
        const auto t = cavity::transmission(cav, atoms, p);
        CHECK(t.T0 == doctest::Approx(1.0 / (1.0 + xc * xc)).epsilon(1e-14));
        CHECK(t.T == doctest::Approx(t.T0).epsilon(1e-14));
    }
}

TEST_CASE("transmission is symmetric under reflection of all detunings") {
    const CavityParams cav = ideal_cavity(1e-4, 2e-4, two_pi * 520e3);
    const AtomParams atoms = test::yb_atoms();
    for (int i = 0; i < 500; ++i) {
        ProbePoint p = probe_at(cav, atoms, uniform(-200, 200), uniform(-2e6, 2e6),
                                uniform(1, 2000));
        ProbePoint q = p;
        q.x_a = -p.x_a;
        q.x_c = -p.x_c;
        CHECK(cavity::transmission(cav, atoms, p).T0 ==
              doctest::Approx(cavity::transmission(cav, atoms, q).T0).epsilon(1e-12));
    }
}

TEST_CASE("lossless map of the lossy cavity") {
    const auto m = cavity::map_lossless(test::yb_cavity());
    CHECK(m.T(1) == doctest::Approx(30e-6).epsilon(1e-4));
    CHECK(m.T(2) == doctest::Approx(453.3e-6).epsilon(1e-4));
    CHECK(m.T(3) == doctest::Approx(0.4324).epsilon(1e-4));
    for (int i = 1; i <= 5; ++i) {
        CHECK(m.T(i) >= 0.0);
        CHECK(m.T(i) <= 1.0);
    }
    const CavityParams l = cavity::to_lossless(test::yb_cavity());
    CHECK(l.lossless());
    CHECK(cavity::output_efficiency(test::yb_cavity()) == doctest::Approx(m.T(3)));
    CHECK(cavity::output_efficiency(l) == 1.0);
}

TEST_CASE("lossy and mapped networks give the same fields") {
    CavityParams cav = test::yb_cavity();
    cav.waist = 20e-6;
    cav.wavelength = 556e-9;
    const auto m = cavity::map_lossless(cav);
    for (int i = 0; i < 200; ++i) {
        const cplx beta = cavity::ensemble_beta(cav, uniform(1, 1000), uniform(-50, 50));
        const double kl = uniform(-0.01, 0.01);
        const auto a = cavity::lossy_fields(cav, beta, kl);
        const auto b = cavity::lossless_network_fields(m, beta, kl);
        CHECK(std::abs(a.e_t - b.e_t) <= 1e-9);
        CHECK(std::abs(a.e_r - b.e_r) <= 1e-9);
    }
}

TEST_CASE("dressed resonances sit at sqrt((1 + N eta) kappa / gamma - 1)") {
    const double gamma = two_pi * 184e3;
    const CavityParams cav = ideal_cavity(1e-4, 1e-4, 2.8 * gamma);
    const AtomParams atoms = AtomParams::three_level(gamma, 1.8);
    const auto d = cavity::dressed_resonances(cav, atoms, 500);
    REQUIRE(d.x_a.size() == 2);
    const double expect = std::sqrt(900 * 2.8 - 1.0);
    CHECK(d.x_a[1] == doctest::Approx(expect).epsilon(1e-9));
    CHECK(d.x_a[0] == doctest::Approx(-expect).epsilon(1e-9));
    CHECK(std::abs(d.x_a[1] - 50.2) <= 1.0);
    // Too few atoms to split the line.
    CHECK(cavity::dressed_resonances(cav, atoms, 0.01).x_a.empty());
}

TEST_CASE("cavity parameter checks") {
    CavityParams c = test::yb_cavity();
    CHECK(c.check().empty());
    c.finesse = 20000;
    CHECK(c.check().size() == 1);
    c.T1 = 1.5;
    CHECK_THROWS_AS((void)c.check(), Error);
    CHECK(test::error_code([&] { (void)c.check(); }) == ErrorCode::invalid_argument);
}
