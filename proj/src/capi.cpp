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

#include "cavsq/cavsq.h"

#include "cavsq/cavity.hpp"
#include "cavsq/fourlevel.hpp"
#include "cavsq/sweep.hpp"
#include "cavsq/validation.hpp"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

using namespace cavsq;

struct cavsq_model {
    sweep::Setup setup;
    std::vector<std::string> warnings;
};

struct cavsq_table {
    sweep::Table table;
};

namespace {

thread_local std::string g_error;

cavsq_status code_of(ErrorCode c) {
    switch (c) {
    case ErrorCode::invalid_argument:
        return CAVSQ_ERR_INVALID_ARGUMENT;
    case ErrorCode::config:
        return CAVSQ_ERR_CONFIG;
    case ErrorCode::no_solution:
        return CAVSQ_ERR_NO_SOLUTION;
    case ErrorCode::validation:
        return CAVSQ_ERR_VALIDATION;
    }
    return CAVSQ_ERR_INTERNAL;
}

template <class F> cavsq_status guard(F &&f) {
    try {
        g_error.clear();
        return f();
    } catch (const Error &e) {
        g_error = e.what();
        return code_of(e.code());
    } catch (const std::bad_alloc &) {
        g_error = "out of memory";
        return CAVSQ_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_error = e.what();
        return CAVSQ_ERR_INTERNAL;
    } catch (...) {
        g_error = "unknown error";
        return CAVSQ_ERR_INTERNAL;
    }
}

void need(const void *p, const char *what) {
    if (!p)
        fail(std::string(what) + " is null");
}

CavityParams to_cavity(const cavsq_cavity &c) {
    CavityParams p;
    p.T1 = c.T1;
    p.T2 = c.T2;
    p.L1 = c.L1;
    p.L2 = c.L2;
    p.finesse = c.finesse;
    p.kappa = c.kappa;
    p.fsr = c.fsr;
    p.waist = c.waist;
    p.wavelength = c.wavelength;
    return p;
}

cavsq_status emit(sweep::Table t, cavsq_table **out) {
    *out = new cavsq_table{std::move(t)};
    return CAVSQ_OK;
}

std::vector<double> span(const double *v, size_t n) {
    if (n > 0)
        need(v, "grid");
    return std::vector<double>(v, v + n);
}

} // namespace

extern "C" {

const char *cavsq_version(void) { return "1.0.0"; }

const char *cavsq_last_error(void) { return g_error.c_str(); }

void cavsq_set_threads(int n) { sweep::set_threads(n); }

cavsq_status cavsq_model_create(const cavsq_cavity *cavity,
                                const cavsq_atoms *atoms,
                                const cavsq_probe *probe, cavsq_model **out) {
    return guard([&] {
        need(cavity, "cavity");
        need(atoms, "atoms");
        need(probe, "probe");
        need(out, "out");
        auto m = std::make_unique<cavsq_model>();
        sweep::Setup &s = m->setup;
        s.cav = to_cavity(*cavity);
        m->warnings = s.cav.check();
        s.atoms = atoms->eta_down_ratio > 0.0
                      ? AtomParams::four_level(atoms->gamma, atoms->eta,
                                               atoms->eta_down_ratio, atoms->b)
                      : AtomParams::three_level(atoms->gamma, atoms->eta);
        if (atoms->eta_down_ratio == 0.0)
            s.atoms.b = atoms->b;
        s.atoms.check();
        if (!(atoms->branching >= 0.0 && atoms->branching <= 1.0))
            fail("atoms: branching ratio must lie in [0,1]");
        s.branching = atoms->branching;
        if (!(probe->n_atoms >= 1.0))
            fail("probe: n_atoms must be at least 1");
        s.n_atoms = probe->n_atoms;
        s.offset = probe->cavity_offset;
        switch (probe->budget_kind) {
        case CAVSQ_BUDGET_N_IN:
            s.budget_kind = Budget::n_in;
            break;
        case CAVSQ_BUDGET_N_T:
            s.budget_kind = Budget::n_t;
            break;
        case CAVSQ_BUDGET_N_SC:
            s.budget_kind = Budget::n_sc;
            break;
        case CAVSQ_BUDGET_N_C:
            s.budget_kind = Budget::n_c;
            break;
        default:
            fail("probe: unknown photon budget kind");
        }
        if (!(probe->budget >= 0.0))
            fail("probe: photon budget must be non-negative");
        s.budget = probe->budget;
        s.tau = probe->tau;
        s.curvature = probe->curvature != 0;
        if (!(probe->q_eff > 0.0 && probe->q_eff <= 1.0))
            fail("probe: q_eff must lie in (0,1]");
        s.detection.q_eff = probe->q_eff;
        s.detection.mode = probe->t_tot == CAVSQ_TOT_BOTH ? qfi::TotMode::both
                                                          : qfi::TotMode::transmission;
        if (probe->omega_m > 0.0)
            s.detection.omega_m = probe->omega_m;
        if (!s.cav.lossless())
            (void)cavity::map_lossless(s.cav);
        *out = m.release();
        return CAVSQ_OK;
    });
}

void cavsq_model_destroy(cavsq_model *model) { delete model; }

size_t cavsq_model_warning_count(const cavsq_model *model) {
    return model ? model->warnings.size() : 0;
}

const char *cavsq_model_warning(const cavsq_model *model, size_t i) {
    if (!model || i >= model->warnings.size())
        return nullptr;
    return model->warnings[i].c_str();
}

cavsq_status cavsq_spectrum(const cavsq_model *model, const double *x_a,
                            size_t n, cavsq_table **out) {
    return guard([&] {
        need(model, "model");
        need(out, "out");
        return emit(sweep::spectrum(model->setup, span(x_a, n)), out);
    });
}

cavsq_status cavsq_squeeze(const cavsq_model *model, double x_a,
                           cavsq_table **out) {
    return guard([&] {
        need(model, "model");
        need(out, "out");
        return emit(sweep::squeeze(model->setup, x_a), out);
    });
}

cavsq_status cavsq_wineland_scan(const cavsq_model *model,
                                 cavsq_scan_variable variable,
                                 const double *grid, size_t n, double x_a,
                                 cavsq_table **out) {
    return guard([&] {
        need(model, "model");
        need(out, "out");
        sweep::ScanVariable v;
        switch (variable) {
        case CAVSQ_SCAN_X_A:
            v = sweep::ScanVariable::x_a;
            break;
        case CAVSQ_SCAN_N_SC:
            v = sweep::ScanVariable::n_sc;
            break;
        case CAVSQ_SCAN_N_ATOMS:
            v = sweep::ScanVariable::n_atoms;
            break;
        default:
            fail("wineland_scan: unknown scan variable");
        }
        return emit(sweep::wineland_scan(model->setup, v, span(grid, n), x_a), out);
    });
}

cavsq_status cavsq_optimize(const cavsq_model *model, cavsq_table **out) {
    return guard([&] {
        need(model, "model");
        need(out, "out");
        const auto o = sweep::optimize_gain(model->setup);
        sweep::Table t;
        t.columns = {"n_atoms", "x_a_opt", "n_sc_opt", "p_opt", "xi2", "gain",
                     "gain_db"};
        t.rows.push_back({model->setup.n_atoms, o.x_a, o.n_sc, o.p, o.xi2,
                          o.gain, -10.0 * std::log10(o.xi2)});
        return emit(std::move(t), out);
    });
}

cavsq_status cavsq_scaling(const cavsq_model *model, const double *n_atoms,
                           size_t n, cavsq_table **out) {
    return guard([&] {
        need(model, "model");
        need(out, "out");
        return emit(sweep::scaling(model->setup, span(n_atoms, n)), out);
    });
}

cavsq_status cavsq_detection_scan(const cavsq_model *model, const double *n_d,
                                  size_t n, cavsq_table **out) {
    return guard([&] {
        need(model, "model");
        need(out, "out");
        return emit(sweep::detection_scan(model->setup, span(n_d, n)), out);
    });
}

cavsq_status cavsq_chirp_shift(const cavsq_model *model, double shift,
                               cavsq_table **out) {
    return guard([&] {
        need(model, "model");
        need(out, "out");
        return emit(sweep::chirp_shift(model->setup, shift), out);
    });
}

cavsq_status cavsq_two_color(const cavsq_model *model,
                             const cavsq_two_color_opts *opts,
                             cavsq_table **out) {
    return guard([&] {
        need(model, "model");
        need(opts, "opts");
        need(out, "out");
        sweep::TwoColorRequest r;
        r.omega_l1 = opts->omega_l1;
        if (opts->has_window)
            r.window = fourlevel::Window{opts->window_lo, opts->window_hi};
        r.convention = opts->convention == CAVSQ_PHASE_DIRECT
                           ? fourlevel::PhaseConvention::direct
                           : fourlevel::PhaseConvention::echo;
        r.optimize = opts->optimize != 0;
        if (opts->has_window_l1)
            r.window_l1 = fourlevel::Window{opts->window_l1_lo, opts->window_l1_hi};
        return emit(sweep::two_color(model->setup, r), out);
    });
}

cavsq_status cavsq_map_lossless(const cavsq_cavity *cavity, cavsq_table **out) {
    return guard([&] {
        need(cavity, "cavity");
        need(out, "out");
        const auto m = cavity::map_lossless(to_cavity(*cavity));
        sweep::Table t;
        t.columns = {"element", "t", "T"};
        const double ts[] = {m.t1s, m.t2s, m.t3s, m.t4s, m.t5s};
        for (int i = 0; i < 5; ++i) {
            t.rows.push_back({i + 1.0, ts[i], ts[i] * ts[i]});
            t.summary.emplace_back("T" + std::to_string(i + 1) + "*", ts[i] * ts[i]);
        }
        t.summary.emplace_back("r1*", m.r1s);
        t.summary.emplace_back("r2*", m.r2s);
        return emit(std::move(t), out);
    });
}

cavsq_status cavsq_compensation(const cavsq_model *model, cavsq_table **out) {
    return guard([&] {
        need(model, "model");
        need(out, "out");
        const auto &s = model->setup;
        const CavityParams cav = s.physics_cavity();
        const double nd = 0.5 * s.n_atoms;
        const double dc = fourlevel::compensation_detuning(cav, s.atoms, nd);
        sweep::Table t;
        t.summary = {{"delta_c_hz", dc / two_pi},
                     {"x_c_shift", 2.0 * dc / cav.kappa},
                     {"cavity_pull_hz", fourlevel::cavity_pull(cav, s.atoms, nd) / two_pi},
                     {"n_down_eta_down", nd * s.atoms.eta_down}};
        return emit(std::move(t), out);
    });
}

cavsq_status cavsq_dressed(const cavsq_model *model, cavsq_table **out) {
    return guard([&] {
        need(model, "model");
        need(out, "out");
        const auto &s = model->setup;
        const CavityParams cav = s.physics_cavity();
        const double n_up = 0.5 * s.n_atoms;
        const auto r = cavity::dressed_resonances(cav, s.atoms, n_up);
        sweep::Table t;
        t.columns = {"x_a", "detuning_hz"};
        for (double x : r.x_a)
            t.rows.push_back({x, 0.5 * x * s.atoms.gamma / two_pi});
        t.summary = {{"n_up_eta", n_up * s.atoms.eta_up},
                     {"vacuum_rabi_hz", r.vacuum_rabi / two_pi},
                     {"g_hz", r.g / two_pi},
                     {"resolved", r.x_a.empty() ? 0.0 : 1.0}};
        return emit(std::move(t), out);
    });
}

cavsq_status cavsq_validate(cavsq_table **out) {
    return guard([&] {
        need(out, "out");
        const auto checks = validation::run_all();
        sweep::Table t;
        t.columns = {"pass", "value", "tolerance"};
        int failed = 0;
        for (const auto &c : checks) {
            t.rows.push_back({c.pass ? 1.0 : 0.0, c.value, c.tolerance});
            t.notes.push_back(c.name);
            failed += c.pass ? 0 : 1;
        }
        t.summary = {{"checks", static_cast<double>(checks.size())},
                     {"failed", static_cast<double>(failed)}};
        *out = new cavsq_table{std::move(t)};
        if (failed) {
            g_error = std::to_string(failed) + " reference check(s) failed";
            return CAVSQ_ERR_VALIDATION;
        }
        return CAVSQ_OK;
    });
}

void cavsq_table_destroy(cavsq_table *table) { delete table; }

size_t cavsq_table_columns(const cavsq_table *t) {
    return t ? t->table.columns.size() : 0;
}

size_t cavsq_table_rows(const cavsq_table *t) {
    return t ? t->table.rows.size() : 0;
}

const char *cavsq_table_column_name(const cavsq_table *t, size_t col) {
    if (!t || col >= t->table.columns.size())
        return nullptr;
    return t->table.columns[col].c_str();
}

double cavsq_table_value(const cavsq_table *t, size_t row, size_t col) {
    if (!t || row >= t->table.rows.size() || col >= t->table.rows[row].size())
        return std::nan("");
    return t->table.rows[row][col];
}

size_t cavsq_table_summary_count(const cavsq_table *t) {
    return t ? t->table.summary.size() : 0;
}

const char *cavsq_table_summary_key(const cavsq_table *t, size_t i) {
    if (!t || i >= t->table.summary.size())
        return nullptr;
    return t->table.summary[i].first.c_str();
}

double cavsq_table_summary_value(const cavsq_table *t, size_t i) {
    if (!t || i >= t->table.summary.size())
        return std::nan("");
    return t->table.summary[i].second;
}

size_t cavsq_table_note_count(const cavsq_table *t) {
    return t ? t->table.notes.size() : 0;
}

const char *cavsq_table_note(const cavsq_table *t, size_t i) {
    if (!t || i >= t->table.notes.size())
        return nullptr;
    return t->table.notes[i].c_str();
}

} // extern "C"
