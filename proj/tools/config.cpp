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

#include "config.hpp"

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace cavsq_cli {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

enum class Kind { number, integer, boolean, string, number_array };

const std::map<std::string, std::map<std::string, Kind>> &schema() {
    static const std::map<std::string, std::map<std::string, Kind>> s = {
        {"cavity",
         {{"T1", Kind::number},
          {"T2", Kind::number},
          {"L1", Kind::number},
          {"L2", Kind::number},
          {"finesse", Kind::number},
          {"kappa_hz", Kind::number},
          {"fsr_hz", Kind::number},
          {"waist_m", Kind::number},
          {"wavelength_m", Kind::number}}},
        {"atoms",
         {{"gamma_hz", Kind::number},
          {"eta", Kind::number},
          {"eta_down_ratio", Kind::number},
          {"delta_z_hz", Kind::number},
          {"b", Kind::number},
          {"branching", Kind::number}}},
        {"probe",
         {{"model", Kind::string},
          {"n_atoms", Kind::number},
          {"cavity_offset_hz", Kind::number},
          {"x_a", Kind::number},
          {"detuning_hz", Kind::number},
          {"n_in", Kind::number},
          {"n_t", Kind::number},
          {"n_sc", Kind::number},
          {"n_c", Kind::number},
          {"tau_s", Kind::number},
          {"curvature", Kind::boolean},
          {"q_eff", Kind::number},
          {"t_tot", Kind::string},
          {"omega_m_hz", Kind::number},
          {"phase_convention", Kind::string}}},
        {"scan",
         {{"variable", Kind::string},
          {"start", Kind::number},
          {"stop", Kind::number},
          {"points", Kind::integer},
          {"scale", Kind::string},
          {"values", Kind::number_array}}},
        {"two_color",
         {{"omega_l1_hz", Kind::number},
          {"window_lo_hz", Kind::number},
          {"window_hi_hz", Kind::number},
          {"window_l1_lo_hz", Kind::number},
          {"window_l1_hi_hz", Kind::number},
          {"optimize", Kind::boolean}}},
        {"chirp", {{"shift_kappa", Kind::number}}},
    };
    return s;
}

json from_toml(const toml::node &n, const std::string &path) {
    if (auto t = n.as_table()) {
        json j = json::object();
        for (const auto &[k, v] : *t) {
            const std::string key(k.str());
            j[key] = from_toml(v, path.empty() ? key : path + "." + key);
        }
        return j;
    }
    if (auto a = n.as_array()) {
        json j = json::array();
        for (const auto &v : *a)
            j.push_back(from_toml(v, path));
        return j;
    }
    if (auto v = n.as_integer())
        return v->get();
    if (auto v = n.as_floating_point())
        return v->get();
    if (auto v = n.as_boolean())
        return v->get();
    if (auto v = n.as_string())
        return v->get();
    throw ConfigError(path, "unsupported TOML value type");
}

bool ends_with(const std::string &s, const std::string &suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

void check_kind(const json &v, Kind kind, const std::string &path) {
    switch (kind) {
    case Kind::number:
        if (!v.is_number())
            throw ConfigError(path, "expected a number");
        if (!std::isfinite(v.get<double>()))
            throw ConfigError(path, "must be finite");
        return;
    case Kind::integer:
        if (!v.is_number_integer())
            throw ConfigError(path, "expected an integer");
        return;
    case Kind::boolean:
        if (!v.is_boolean())
            throw ConfigError(path, "expected true or false");
        return;
    case Kind::string:
        if (!v.is_string())
            throw ConfigError(path, "expected a string");
        return;
    case Kind::number_array:
        if (!v.is_array() || v.empty())
            throw ConfigError(path, "expected a non-empty array of numbers");
        for (const auto &x : v)
            if (!x.is_number() || !std::isfinite(x.get<double>()))
                throw ConfigError(path, "expected a non-empty array of numbers");
        return;
    }
}

void validate(const json &tree) {
    if (!tree.is_object())
        throw ConfigError("<root>", "expected a table of sections");
    for (const auto &[section, body] : tree.items()) {
        const auto it = schema().find(section);
        if (it == schema().end())
            throw ConfigError(section, "unknown section");
        if (!body.is_object())
            throw ConfigError(section, "expected a table");
        for (const auto &[key, value] : body.items()) {
            const std::string path = section + "." + key;
            const auto k = it->second.find(key);
            if (k == it->second.end())
                throw ConfigError(path, "unknown key");
            check_kind(value, k->second, path);
        }
    }
}

struct Reader {
    const json &tree;

    const json *find(const std::string &section, const std::string &key) const {
        auto s = tree.find(section);
        if (s == tree.end())
            return nullptr;
        auto k = s->find(key);
        return k == s->end() ? nullptr : &*k;
    }
    bool has(const std::string &section, const std::string &key) const {
        return find(section, key) != nullptr;
    }
    std::optional<double> num(const std::string &section,
                              const std::string &key) const {
        const json *v = find(section, key);
        if (!v)
            return std::nullopt;
        return v->get<double>();
    }
    double num(const std::string &section, const std::string &key,
               double fallback) const {
        return num(section, key).value_or(fallback);
    }
    double required(const std::string &section, const std::string &key) const {
        auto v = num(section, key);
        if (!v)
            throw ConfigError(section + "." + key, "required");
        return *v;
    }
    std::optional<std::string> str(const std::string &section,
                                   const std::string &key) const {
        const json *v = find(section, key);
        if (!v)
            return std::nullopt;
        return v->get<std::string>();
    }
    bool flag(const std::string &section, const std::string &key) const {
        const json *v = find(section, key);
        return v && v->get<bool>();
    }
};

void require_range(double v, double lo, double hi, const std::string &path,
                   const char *what) {
    if (!(v >= lo && v <= hi))
        throw ConfigError(path, what);
}

void require_positive(double v, const std::string &path) {
    if (!(v > 0.0))
        throw ConfigError(path, "must be positive");
}

std::vector<double> grid(double start, double stop, int points, bool log) {
    std::vector<double> g(points);
    if (log) {
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

void resolve_cavity(const Reader &r, RunConfig &c) {
    cavsq_cavity &cv = c.cavity;
    cv.T1 = r.num("cavity", "T1", 0.0);
    cv.T2 = r.num("cavity", "T2", 0.0);
    cv.L1 = r.num("cavity", "L1", 0.0);
    cv.L2 = r.num("cavity", "L2", 0.0);
    for (const char *k : {"T1", "T2", "L1", "L2"})
        require_range(r.num("cavity", k, 0.0), 0.0, 1.0,
                      std::string("cavity.") + k, "must lie in [0,1]");
    if (!(cv.T1 > 0.0))
        throw ConfigError("cavity.T1", "input mirror transmission required");
    if (!(cv.T2 > 0.0))
        throw ConfigError("cavity.T2", "output mirror transmission required");
    const double loss = cv.T1 + cv.T2 + cv.L1 + cv.L2;
    cv.finesse = r.num("cavity", "finesse", two_pi / loss);
    require_positive(cv.finesse, "cavity.finesse");
    cv.fsr = two_pi * r.num("cavity", "fsr_hz", 0.0);
    if (auto k = r.num("cavity", "kappa_hz")) {
        require_positive(*k, "cavity.kappa_hz");
        cv.kappa = two_pi * *k;
    } else if (cv.fsr > 0.0) {
        cv.kappa = cv.fsr / cv.finesse;
    } else {
        throw ConfigError("cavity.kappa_hz", "required unless fsr_hz is given");
    }
    cv.waist = r.num("cavity", "waist_m", 0.0);
    cv.wavelength = r.num("cavity", "wavelength_m", 0.0);
    if (cv.fsr < 0.0)
        throw ConfigError("cavity.fsr_hz", "must be non-negative");
    if (cv.waist < 0.0)
        throw ConfigError("cavity.waist_m", "must be non-negative");
    if (cv.wavelength < 0.0)
        throw ConfigError("cavity.wavelength_m", "must be non-negative");
}

void resolve_atoms(const Reader &r, RunConfig &c) {
    c.has_atoms = r.tree.contains("atoms");
    if (!c.has_atoms)
        return;
    cavsq_atoms &a = c.atoms;
    const double gamma_hz = r.required("atoms", "gamma_hz");
    require_positive(gamma_hz, "atoms.gamma_hz");
    a.gamma = two_pi * gamma_hz;
    a.eta = r.required("atoms", "eta");
    if (!(a.eta >= 0.0))
        throw ConfigError("atoms.eta", "must be non-negative");
    const std::string model = r.str("probe", "model").value_or(
        r.num("atoms", "eta_down_ratio", 0.0) > 0.0 ? "four-level" : "three-level");
    if (model != "three-level" && model != "four-level")
        throw ConfigError("probe.model", "expected \"three-level\" or \"four-level\"");
    a.eta_down_ratio = r.num("atoms", "eta_down_ratio", 0.0);
    if (model == "four-level") {
        if (!(a.eta_down_ratio > 0.0))
            throw ConfigError("atoms.eta_down_ratio",
                              "four-level model needs a positive ratio");
    } else if (a.eta_down_ratio != 0.0) {
        throw ConfigError("atoms.eta_down_ratio",
                          "must be 0 for the three-level model");
    }
    if (r.has("atoms", "b") && r.has("atoms", "delta_z_hz"))
        throw ConfigError("atoms.b", "give either b or delta_z_hz, not both");
    if (auto dz = r.num("atoms", "delta_z_hz"))
        a.b = 2.0 * two_pi * *dz / a.gamma;
    else
        a.b = r.num("atoms", "b", 0.0);
    if (model == "four-level" && a.b == 0.0)
        throw ConfigError("atoms.delta_z_hz",
                          "four-level model needs a Zeeman splitting");
    a.branching = r.num("atoms", "branching", 2.0 / 3.0);
    require_range(a.branching, 0.0, 1.0, "atoms.branching", "must lie in [0,1]");
}

void resolve_probe(const Reader &r, RunConfig &c) {
    cavsq_probe &p = c.probe;
    p.n_atoms = r.num("probe", "n_atoms", 1000.0);
    if (!(p.n_atoms >= 1.0))
        throw ConfigError("probe.n_atoms", "must be at least 1");
    p.cavity_offset = two_pi * r.num("probe", "cavity_offset_hz", 0.0);

    int budgets = 0;
    p.budget_kind = CAVSQ_BUDGET_N_SC;
    p.budget = 0.0;
    const std::pair<const char *, cavsq_budget> kinds[] = {
        {"n_in", CAVSQ_BUDGET_N_IN},
        {"n_t", CAVSQ_BUDGET_N_T},
        {"n_sc", CAVSQ_BUDGET_N_SC},
        {"n_c", CAVSQ_BUDGET_N_C}};
    for (const auto &[key, kind] : kinds) {
        if (auto v = r.num("probe", key)) {
            if (++budgets > 1)
                throw ConfigError(std::string("probe.") + key,
                                  "only one of n_in, n_t, n_sc, n_c may be set");
            if (!(*v >= 0.0))
                throw ConfigError(std::string("probe.") + key,
                                  "must be non-negative");
            p.budget_kind = kind;
            p.budget = *v;
        }
    }
    p.tau = r.num("probe", "tau_s", 1e-6);
    require_positive(p.tau, "probe.tau_s");
    p.curvature = r.flag("probe", "curvature") ? 1 : 0;
    p.q_eff = r.num("probe", "q_eff", 1.0);
    if (!(p.q_eff > 0.0 && p.q_eff <= 1.0))
        throw ConfigError("probe.q_eff", "must lie in (0,1]");
    const std::string tot = r.str("probe", "t_tot").value_or("transmission");
    if (tot == "transmission")
        p.t_tot = CAVSQ_TOT_TRANSMISSION;
    else if (tot == "both")
        p.t_tot = CAVSQ_TOT_BOTH;
    else
        throw ConfigError("probe.t_tot", "expected \"transmission\" or \"both\"");
    p.omega_m = two_pi * r.num("probe", "omega_m_hz", 0.0);
    if (p.omega_m < 0.0)
        throw ConfigError("probe.omega_m_hz", "must be non-negative");

    if (r.has("probe", "x_a") && r.has("probe", "detuning_hz"))
        throw ConfigError("probe.x_a", "give either x_a or detuning_hz, not both");
    if (auto x = r.num("probe", "x_a"))
        c.x_a = *x;
    if (auto d = r.num("probe", "detuning_hz")) {
        if (!c.has_atoms)
            throw ConfigError("probe.detuning_hz", "needs the [atoms] section");
        c.x_a = 2.0 * two_pi * *d / c.atoms.gamma;
    }

    const std::string conv = r.str("probe", "phase_convention").value_or("echo");
    if (conv == "echo")
        c.two_color.convention = CAVSQ_PHASE_ECHO;
    else if (conv == "direct")
        c.two_color.convention = CAVSQ_PHASE_DIRECT;
    else
        throw ConfigError("probe.phase_convention", "expected \"echo\" or \"direct\"");
}

void resolve_scan(const Reader &r, RunConfig &c) {
    if (!r.tree.contains("scan"))
        return;
    Scan &s = c.scan;
    s.present = true;
    s.variable = r.str("scan", "variable").value_or("");
    if (s.variable.empty())
        throw ConfigError("scan.variable", "required");
    if (r.has("scan", "values")) {
        for (const char *k : {"start", "stop", "points", "scale"})
            if (r.has("scan", k))
                throw ConfigError(std::string("scan.") + k,
                                  "not allowed together with scan.values");
        for (const auto &v : *r.find("scan", "values"))
            s.values.push_back(v.get<double>());
        return;
    }
    const double start = r.required("scan", "start");
    const double stop = r.required("scan", "stop");
    const json *pts = r.find("scan", "points");
    if (!pts)
        throw ConfigError("scan.points", "required");
    const auto points = pts->get<long long>();
    if (points < 2 || points > 10000000)
        throw ConfigError("scan.points", "must lie in [2, 1e7]");
    if (!(start != stop))
        throw ConfigError("scan.stop", "must differ from scan.start");
    const std::string scale = r.str("scan", "scale").value_or("linear");
    if (scale != "linear" && scale != "log")
        throw ConfigError("scan.scale", "expected \"linear\" or \"log\"");
    if (scale == "log" && !(start > 0.0 && stop > 0.0))
        throw ConfigError("scan.start", "log scale needs positive bounds");
    s.values = grid(start, stop, static_cast<int>(points), scale == "log");
}

void resolve_two_color(const Reader &r, RunConfig &c) {
    TwoColor &t = c.two_color;
    if (auto w = r.num("two_color", "omega_l1_hz"))
        t.omega_l1 = two_pi * *w;
    t.optimize = r.flag("two_color", "optimize");
    auto pair = [&](const char *lo, const char *hi)
        -> std::optional<std::pair<double, double>> {
        const auto a = r.num("two_color", lo);
        const auto b = r.num("two_color", hi);
        if (!a && !b)
            return std::nullopt;
        if (!a || !b)
            throw ConfigError(std::string("two_color.") + (a ? hi : lo),
                              "window needs both bounds");
        if (!(*a < *b))
            throw ConfigError(std::string("two_color.") + hi,
                              "must exceed the lower bound");
        return std::make_pair(two_pi * *a, two_pi * *b);
    };
    t.window = pair("window_lo_hz", "window_hi_hz");
    t.window_l1 = pair("window_l1_lo_hz", "window_l1_hi_hz");
    c.shift_kappa = r.num("chirp", "shift_kappa", 0.1);
}

} // namespace

json load_tree(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError(path, "cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    if (ends_with(path, ".json")) {
        json doc;
        try {
            doc = json::parse(text);
        } catch (const json::parse_error &e) {
            throw ConfigError(path, e.what());
        }
        if (doc.is_object() && doc.contains("config")) {
            static const std::set<std::string> result_keys = {
                "command", "version", "config", "columns", "rows",
                "summary", "notes", "warnings"};
            for (const auto &[k, v] : doc.items())
                if (!result_keys.count(k))
                    throw ConfigError(k, "unknown key in result document");
            return doc["config"];
        }
        return doc;
    }
    try {
        return from_toml(toml::parse(text, path), "");
    } catch (const toml::parse_error &e) {
        std::ostringstream os;
        os << e.description() << " (line " << e.source().begin.line << ")";
        throw ConfigError(path, os.str());
    }
}

void apply_override(json &tree, const std::string &assignment) {
    const auto eq = assignment.find('=');
    const auto dot = assignment.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq)
        throw ConfigError(assignment, "override must look like section.key=value");
    const std::string section = assignment.substr(0, dot);
    const std::string key = assignment.substr(dot + 1, eq - dot - 1);
    const std::string text = assignment.substr(eq + 1);
    json value = json::parse(text, nullptr, false);
    if (value.is_discarded())
        value = text;
    tree[section][key] = value;
}

RunConfig resolve(const json &tree) {
    validate(tree);
    RunConfig c;
    c.tree = tree;
    const Reader r{tree};
    if (!tree.contains("cavity"))
        throw ConfigError("cavity", "section required");
    resolve_cavity(r, c);
    resolve_atoms(r, c);
    resolve_probe(r, c);
    resolve_scan(r, c);
    resolve_two_color(r, c);
    return c;
}

std::vector<double> x_a_grid(const RunConfig &c) {
    if (!c.scan.present)
        throw ConfigError("scan", "section required");
    if (c.scan.variable == "x_a")
        return c.scan.values;
    if (c.scan.variable == "detuning_hz") {
        std::vector<double> x;
        for (double f : c.scan.values)
            x.push_back(2.0 * two_pi * f / c.atoms.gamma);
        return x;
    }
    throw ConfigError("scan.variable", "expected \"x_a\" or \"detuning_hz\"");
}

} // namespace cavsq_cli
