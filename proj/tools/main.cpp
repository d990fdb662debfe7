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

// cavsq command-line tool. Talks to the library through the C API only.

#include "cavsq/cavsq.h"
#include "config.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using namespace cavsq_cli;

namespace {

enum Exit { ok = 0, internal = 1, config = 2, no_solution = 3, validation = 4 };

struct Failure {
    int code;
    std::string message;
};

int exit_for(cavsq_status s) {
    switch (s) {
    case CAVSQ_OK:
        return ok;
    case CAVSQ_ERR_INVALID_ARGUMENT:
    case CAVSQ_ERR_CONFIG:
        return config;
    case CAVSQ_ERR_NO_SOLUTION:
        return no_solution;
    case CAVSQ_ERR_VALIDATION:
        return validation;
    default:
        return internal;
    }
}

void check(cavsq_status s) {
    if (s != CAVSQ_OK)
        throw Failure{exit_for(s), cavsq_last_error()};
}

struct ModelDeleter {
    void operator()(cavsq_model *m) const { cavsq_model_destroy(m); }
};
struct TableDeleter {
    void operator()(cavsq_table *t) const { cavsq_table_destroy(t); }
};
using ModelPtr = std::unique_ptr<cavsq_model, ModelDeleter>;
using TablePtr = std::unique_ptr<cavsq_table, TableDeleter>;

std::string fmt(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (v == 0.0)
        v = 0.0;
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, r.ptr);
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"')
            q += '"';
        q += ch;
    }
    return q + "\"";
}

struct Options {
    std::string config_path;
    std::vector<std::string> overrides;
    bool json_out = false;
    std::string out;
    int threads = -1;
    double x_a = NAN;
    double omega_l1_mhz = NAN;
    std::string convention;
    bool optimize = false;
    std::vector<double> window_mhz;
    double shift_kappa = NAN;
};

json table_json(const cavsq_table *t) {
    json j;
    j["columns"] = json::array();
    for (size_t c = 0; c < cavsq_table_columns(t); ++c)
        j["columns"].push_back(cavsq_table_column_name(t, c));
    j["rows"] = json::array();
    for (size_t r = 0; r < cavsq_table_rows(t); ++r) {
        json row = json::array();
        for (size_t c = 0; c < cavsq_table_columns(t); ++c) {
            const double v = cavsq_table_value(t, r, c);
            row.push_back(std::isfinite(v) ? json(v) : json(nullptr));
        }
        j["rows"].push_back(row);
    }
    j["summary"] = json::object();
    for (size_t i = 0; i < cavsq_table_summary_count(t); ++i) {
        const double v = cavsq_table_summary_value(t, i);
        j["summary"][cavsq_table_summary_key(t, i)] =
            std::isfinite(v) ? json(v) : json(nullptr);
    }
    j["notes"] = json::array();
    for (size_t i = 0; i < cavsq_table_note_count(t); ++i)
        j["notes"].push_back(cavsq_table_note(t, i));
    return j;
}

std::string table_csv(const cavsq_table *t, bool named_rows) {
    std::ostringstream os;
    const size_t ncol = cavsq_table_columns(t);
    if (ncol == 0) {
        os << "key,value\n";
        for (size_t i = 0; i < cavsq_table_summary_count(t); ++i)
            os << cavsq_table_summary_key(t, i) << ','
               << fmt(cavsq_table_summary_value(t, i)) << '\n';
    } else {
        if (named_rows)
            os << "name,";
        for (size_t c = 0; c < ncol; ++c)
            os << (c ? "," : "") << cavsq_table_column_name(t, c);
        os << '\n';
        for (size_t r = 0; r < cavsq_table_rows(t); ++r) {
            if (named_rows)
                os << csv_field(cavsq_table_note(t, r)) << ',';
            for (size_t c = 0; c < ncol; ++c)
                os << (c ? "," : "") << fmt(cavsq_table_value(t, r, c));
            os << '\n';
        }
        for (size_t i = 0; i < cavsq_table_summary_count(t); ++i)
            os << "# " << cavsq_table_summary_key(t, i) << " = "
               << fmt(cavsq_table_summary_value(t, i)) << '\n';
    }
    if (!named_rows)
        for (size_t i = 0; i < cavsq_table_note_count(t); ++i)
            os << "# " << cavsq_table_note(t, i) << '\n';
    return os.str();
}

void emit(const std::string &text, const std::string &out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f)
        throw Failure{config, "cannot write " + out};
    f << text;
}

void need_atoms(const RunConfig &c) {
    if (!c.has_atoms)
        throw ConfigError("atoms", "section required");
}

void need_scan(const RunConfig &c, std::initializer_list<const char *> vars) {
    if (!c.scan.present)
        throw ConfigError("scan", "section required");
    for (const char *v : vars)
        if (c.scan.variable == v)
            return;
    std::string list;
    for (const char *v : vars)
        list += (list.empty() ? "" : ", ") + std::string("\"") + v + "\"";
    throw ConfigError("scan.variable", "expected one of " + list);
}

double probe_x_a(const RunConfig &c) {
    if (!c.x_a)
        throw ConfigError("probe.x_a", "required (or probe.detuning_hz)");
    return *c.x_a;
}

// Folds command-line parameters into the tree so that the echoed config
// reproduces the run.
void fold_flags(const std::string &cmd, const Options &o, json &tree) {
    if (!std::isnan(o.x_a)) {
        if (tree.contains("probe"))
            tree["probe"].erase("detuning_hz");
        tree["probe"]["x_a"] = o.x_a;
    }
    if (cmd == "two-color") {
        if (!std::isnan(o.omega_l1_mhz))
            tree["two_color"]["omega_l1_hz"] = o.omega_l1_mhz * 1e6;
        if (o.optimize)
            tree["two_color"]["optimize"] = true;
        if (!o.convention.empty())
            tree["probe"]["phase_convention"] = o.convention;
        if (o.window_mhz.size() == 2) {
            tree["two_color"]["window_lo_hz"] = o.window_mhz[0] * 1e6;
            tree["two_color"]["window_hi_hz"] = o.window_mhz[1] * 1e6;
        }
    }
    if (cmd == "chirp-shift" && !std::isnan(o.shift_kappa))
        tree["chirp"]["shift_kappa"] = o.shift_kappa;
}

int run(const std::string &cmd, const Options &o) {
    if (o.threads >= 0)
        cavsq_set_threads(o.threads);

    cavsq_table *raw = nullptr;
    json tree = json::object();
    std::vector<std::string> warnings;
    cavsq_status status = CAVSQ_OK;

    if (cmd == "validate") {
        status = cavsq_validate(&raw);
        if (!raw)
            check(status);
    } else {
        tree = load_tree(o.config_path);
        for (const auto &s : o.overrides)
            apply_override(tree, s);
        fold_flags(cmd, o, tree);
        const RunConfig c = resolve(tree);

        if (cmd == "map-lossless") {
            check(cavsq_map_lossless(&c.cavity, &raw));
        } else {
            need_atoms(c);
            cavsq_model *m = nullptr;
            check(cavsq_model_create(&c.cavity, &c.atoms, &c.probe, &m));
            ModelPtr model(m);
            for (size_t i = 0; i < cavsq_model_warning_count(m); ++i)
                warnings.emplace_back(cavsq_model_warning(m, i));
            for (const auto &w : warnings)
                std::cerr << "warning: " << w << '\n';

            if (cmd == "spectrum") {
                const auto x = x_a_grid(c);
                check(cavsq_spectrum(m, x.data(), x.size(), &raw));
            } else if (cmd == "squeeze") {
                check(cavsq_squeeze(m, probe_x_a(c), &raw));
            } else if (cmd == "wineland-scan") {
                need_scan(c, {"x_a", "detuning_hz", "n_sc", "n_atoms"});
                if (c.scan.variable == "n_sc" || c.scan.variable == "n_atoms") {
                    const auto var = c.scan.variable == "n_sc" ? CAVSQ_SCAN_N_SC
                                                               : CAVSQ_SCAN_N_ATOMS;
                    check(cavsq_wineland_scan(m, var, c.scan.values.data(),
                                              c.scan.values.size(), probe_x_a(c),
                                              &raw));
                } else {
                    const auto x = x_a_grid(c);
                    check(cavsq_wineland_scan(m, CAVSQ_SCAN_X_A, x.data(), x.size(),
                                              0.0, &raw));
                }
            } else if (cmd == "optimize") {
                check(cavsq_optimize(m, &raw));
            } else if (cmd == "scaling") {
                need_scan(c, {"n_atoms"});
                check(cavsq_scaling(m, c.scan.values.data(), c.scan.values.size(),
                                    &raw));
            } else if (cmd == "detection-scan") {
                need_scan(c, {"n_d"});
                check(cavsq_detection_scan(m, c.scan.values.data(),
                                           c.scan.values.size(), &raw));
            } else if (cmd == "chirp-shift") {
                check(cavsq_chirp_shift(m, c.shift_kappa * c.cavity.kappa, &raw));
            } else if (cmd == "two-color") {
                cavsq_two_color_opts t{};
                if (!c.two_color.omega_l1 && !c.two_color.optimize)
                    throw ConfigError("two_color.omega_l1_hz",
                                      "required unless optimizing");
                t.omega_l1 = c.two_color.omega_l1.value_or(0.0);
                if (c.two_color.window) {
                    t.has_window = 1;
                    t.window_lo = c.two_color.window->first;
                    t.window_hi = c.two_color.window->second;
                }
                if (c.two_color.window_l1) {
                    t.has_window_l1 = 1;
                    t.window_l1_lo = c.two_color.window_l1->first;
                    t.window_l1_hi = c.two_color.window_l1->second;
                }
                t.convention = c.two_color.convention;
                t.optimize = c.two_color.optimize ? 1 : 0;
                check(cavsq_two_color(m, &t, &raw));
            } else if (cmd == "compensation") {
                check(cavsq_compensation(m, &raw));
            } else if (cmd == "dressed") {
                check(cavsq_dressed(m, &raw));
            } else {
                throw Failure{config, "unknown subcommand " + cmd};
            }
        }
    }

    TablePtr table(raw);
    std::string text;
    if (o.json_out) {
        json doc;
        doc["command"] = cmd;
        doc["version"] = cavsq_version();
        doc["config"] = tree;
        const json body = table_json(raw);
        for (const auto &[k, v] : body.items())
            doc[k] = v;
        doc["warnings"] = warnings;
        text = doc.dump(2) + "\n";
    } else {
        text = table_csv(raw, cmd == "validate");
    }
    emit(text, o.out);
    if (status != CAVSQ_OK) {
        std::cerr << "error: " << cavsq_last_error() << '\n';
        return exit_for(status);
    }
    return ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Cavity spin-squeezing model"};
    app.require_subcommand(1);
    app.set_version_flag("--version", cavsq_version());
    Options o;

    auto common = [&](CLI::App *sub, bool needs_config) {
        auto *opt = sub->add_option("-c,--config", o.config_path,
                                    "TOML or JSON config file");
        if (needs_config)
            opt->required()->check(CLI::ExistingFile);
        sub->add_option("--set", o.overrides,
                        "override a config value, section.key=value");
        sub->add_flag("--json", o.json_out, "emit one JSON document");
        sub->add_option("-o,--out", o.out, "output file (default stdout)");
        sub->add_option("--threads", o.threads,
                        "worker threads, 0 = hardware concurrency")
            ->check(CLI::NonNegativeNumber);
    };

    struct Entry {
        const char *name;
        const char *help;
    };
    const Entry entries[] = {
        {"spectrum", "cavity transmission vs detuning"},
        {"squeeze", "single-pulse squeezing outcome"},
        {"wineland-scan", "squeezing parameter along a scan"},
        {"optimize", "maximal metrological gain"},
        {"scaling", "optimal gain vs atom number with power-law fits"},
        {"detection-scan", "detection variance vs detected photons"},
        {"chirp-shift", "chirp information loss for a shifted cavity"},
        {"two-color", "two-color pulse compensating atom-number noise"},
        {"compensation", "cavity compensation for the second transition"},
        {"dressed", "dressed-cavity resonances"},
        {"map-lossless", "lossless equivalent of a lossy cavity"},
        {"validate", "reference checks against exact models"},
    };
    for (const auto &e : entries) {
        CLI::App *sub = app.add_subcommand(e.name, e.help);
        common(sub, std::string(e.name) != "validate");
        const std::string name = e.name;
        if (name == "squeeze" || name == "wineland-scan")
            sub->add_option("--x-a", o.x_a, "normalized atomic detuning");
        if (name == "two-color") {
            sub->add_option("--omega-l1-mhz", o.omega_l1_mhz,
                            "blue pulse detuning from the |up> line, MHz");
            sub->add_option("--convention", o.convention, "echo or direct")
                ->check(CLI::IsMember({"echo", "direct"}));
            sub->add_flag("--optimize", o.optimize,
                          "also optimize the blue pulse detuning");
            sub->add_option("--window-mhz", o.window_mhz,
                            "red pulse search window, MHz")
                ->expected(2);
        }
        if (name == "chirp-shift")
            sub->add_option("--shift-kappa", o.shift_kappa,
                            "cavity shift in units of kappa");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : config;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        return run(cmd, o);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return config;
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return internal;
    }
}
