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
#include "helpers.hpp"

#include <doctest.h>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

using namespace cavsq;

namespace {

sweep::Setup resonant() {
    sweep::Setup s;
    const double gamma = two_pi * 184e3;
    s.cav = ideal_cavity(1e-4, 1e-4, 2.8 * gamma);
    s.atoms = AtomParams::three_level(gamma, 1.8);
    s.n_atoms = 1000;
    s.budget = 400;
    return s;
}

struct ThreadGuard {
    ~ThreadGuard() { sweep::set_threads(0); }
};

} // namespace

TEST_CASE("grids") {
    const auto g = sweep::make_grid(1, 1000, 4, sweep::Scale::log);
    CHECK(g.front() == 1.0);
    CHECK(g.back() == 1000.0);
    CHECK(g[1] == doctest::Approx(10.0));
    const auto l = sweep::make_grid(-1, 1, 5, sweep::Scale::linear);
    CHECK(l[2] == 0.0);
    CHECK_THROWS_AS(sweep::make_grid(0, 1, 5, sweep::Scale::log), Error);
    CHECK_THROWS_AS(sweep::make_grid(0, 1, 1, sweep::Scale::linear), Error);
}

TEST_CASE("parallel_for visits every index once") {
    ThreadGuard guard;
    sweep::set_threads(4);
    std::vector<std::atomic<int>> hits(1000);
    sweep::parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
    for (const auto &h : hits)
        CHECK(h.load() == 1);
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
    ThreadGuard guard;
    sweep::set_threads(8);
    try {
        sweep::parallel_for(200, [](std::size_t i) {
            if (i % 37 == 5)
                throw std::runtime_error(std::to_string(i));
        });
        FAIL("no exception");
    } catch (const std::runtime_error &e) {
        CHECK(std::string(e.what()) == "5");
    }
}

TEST_CASE("thread count honours the environment cap") {
    ThreadGuard guard;
    sweep::set_threads(16);
    setenv("CAVITY_SQUEEZE_THREADS", "2", 1);
    CHECK(sweep::thread_count() == 2);
    unsetenv("CAVITY_SQUEEZE_THREADS");
    CHECK(sweep::thread_count() == 16);
}

TEST_CASE("scans do not depend on the number of threads") {
    ThreadGuard guard;
    const auto grid = sweep::make_grid(-150, 150, 301, sweep::Scale::linear);
    sweep::set_threads(1);
    const auto serial = sweep::wineland_scan(resonant(), sweep::ScanVariable::x_a, grid);
    sweep::set_threads(7);
    const auto parallel = sweep::wineland_scan(resonant(), sweep::ScanVariable::x_a, grid);
    CHECK(serial.rows == parallel.rows);
    CHECK(serial.columns == parallel.columns);
}

TEST_CASE("power-law fit recovers an exact power law") {
    std::vector<std::pair<double, double>> pts;
    for (double n : {100.0, 200.0, 400.0, 800.0, 1600.0})
        pts.emplace_back(n, 3.0 * std::pow(n, 0.73));
    const auto f = sweep::scaling_fit(pts);
    CHECK(f.exponent == doctest::Approx(0.73).epsilon(1e-12));
    CHECK(f.prefactor == doctest::Approx(3.0).epsilon(1e-10));
    CHECK(f.stderr_ <= 1e-10);
}

TEST_CASE("squeeze with no photons is trivial") {
    sweep::Setup s = resonant();
    s.budget = 0;
    const auto t = sweep::squeeze(s, 10.0);
    for (const char *k : {"Q", "F", "delta_phi_rad", "n_sc"})
        CHECK(t.rows[0][t.column(k)] == 0.0);
    CHECK(t.rows[0][t.column("contrast")] == 1.0);
    CHECK(t.rows[0][t.column("xi2")] == 1.0);
}

TEST_CASE("optimal gain grows with photons optimized") {
    sweep::Setup s = resonant();
    const auto at = sweep::optimize_photons(s, 30.0);
    CHECK(at.gain > 1.0);
    CHECK(at.n_sc == doctest::Approx(at.p * s.n_atoms));
    const auto best = sweep::optimize_gain(s);
    CHECK(best.gain >= at.gain * (1 - 1e-9));
}

TEST_CASE("detection scan has one minimum and unit slopes") {
    sweep::Setup s;
    s.cav = test::yb_cavity();
    s.atoms = test::yb_atoms(1.0 / 3.0);
    s.offset = -two_pi * 0.34e6;
    s.budget_kind = Budget::n_in;
    s.budget = 1000;
    s.detection.q_eff = 0.15;
    const auto t = sweep::detection_scan(s, sweep::make_grid(1, 1e5, 81, sweep::Scale::log));
    CHECK(*t.get("local_minima") == 1.0);
    CHECK(*t.get("slope_last") == doctest::Approx(1.0).epsilon(0.05));
    CHECK(*t.get("slope_measurement_asymptote") == doctest::Approx(-1.0).epsilon(0.05));
}
