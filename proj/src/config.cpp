#include "pcns/config.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <sstream>

namespace pcns {

SolverOptions RunConfig::solver_options() const
{
    SolverOptions o;
    o.dt = dt;
    o.t_final = t_final;
    o.picard_tol = picard_tol;
    o.picard_max_iter = picard_max_iter;
    o.snapshot_stride = snapshot_stride;
    o.newton.tol = newton_tol;
    return o;
}

const std::vector<std::string>& presets()
{
    static const std::vector<std::string> names{"steady_wave",     "convergence_order", "stability_sweep",
                                                "coercivity_suite", "trace_suite",       "bootstrap_check",
                                                "appendix_lemmas"};
    return names;
}

bool is_preset(const std::string& name)
{
    const auto& p = presets();
    return std::find(p.begin(), p.end(), name) != p.end();
}

RunConfig preset_defaults(const std::string& name)
{
    if (!is_preset(name)) throw ConfigError("preset: unknown preset '" + name + "'");
    RunConfig c;
    c.preset = name;
    if (name == "convergence_order") {
        c.n = 513;
        c.dt = 1.0 / 64.0;
        c.snapshot_stride = 1;
    } else if (name == "stability_sweep") {
        c.t_final = 2.0;
        c.perturbation.family = PerturbationFamily::GaussianBump;
    } else if (name == "coercivity_suite") {
        c.R = 20.0;
        c.n = 4096;
    } else if (name == "trace_suite") {
        c.t_final = 3.0;
        c.perturbation.family = PerturbationFamily::W0Tilt;
        c.perturbation.amplitude = 1e-2;
    } else if (name == "bootstrap_check") {
        c.t_final = 20.0;
        c.snapshot_stride = 50;
        c.perturbation.family = PerturbationFamily::GaussianBump;
        c.perturbation.amplitude = 1.0; // upper bound; scaled down to meet c0 delta^2
    } else if (name == "appendix_lemmas") {
        c.n = 1025;
        c.dt = 4e-3;
        c.perturbation.family = PerturbationFamily::GaussianBump;
        c.perturbation.amplitude = 1e-3;
    }
    return c;
}

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

double to_double(const std::string& key, const std::string& v)
{
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (trim(v.substr(pos)).empty()) return d;
    } catch (const std::exception&) {
    }
    throw ConfigError(key + ": expected a number, got '" + v + "'");
}

long long to_int(const std::string& key, const std::string& v)
{
    try {
        std::size_t pos = 0;
        const long long d = std::stoll(v, &pos);
        if (trim(v.substr(pos)).empty()) return d;
    } catch (const std::exception&) {
    }
    throw ConfigError(key + ": expected an integer, got '" + v + "'");
}

std::vector<double> to_list(const std::string& key, std::string v)
{
    v.erase(std::remove_if(v.begin(), v.end(), [](char c) { return c == '[' || c == ']'; }), v.end());
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty()) out.push_back(to_double(key, trim(item)));
    if (out.empty()) throw ConfigError(key + ": expected a non-empty list");
    return out;
}

} // namespace

std::vector<ConfigEntry> parse_config_text(std::istream& in, const std::string& source)
{
    std::vector<ConfigEntry> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(source + ":" + std::to_string(no) + ": expected 'key = value'");
        ConfigEntry e{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), no};
        if (e.key.empty())
            throw ConfigError(source + ":" + std::to_string(no) + ": empty key");
        out.push_back(std::move(e));
    }
    return out;
}

void apply_setting(RunConfig& c, const std::string& key, const std::string& v)
{
    PhysicalParams& p = c.params;
    if (key == "params.mu") p.mu = to_double(key, v);
    else if (key == "params.v_plus") p.v_plus = to_double(key, v);
    else if (key == "params.u_minus") p.u_minus = to_double(key, v);
    else if (key == "params.u_plus") p.u_plus = to_double(key, v);
    else if (key == "grid.R") c.R = to_double(key, v);
    else if (key == "grid.n") {
        const long long n = to_int(key, v);
        if (n < 16) throw ConfigError("grid.n: must be at least 16");
        c.n = static_cast<std::size_t>(n);
    } else if (key == "time.T_final") c.t_final = to_double(key, v);
    else if (key == "time.dt") c.dt = to_double(key, v);
    else if (key == "time.snapshot_stride") c.snapshot_stride = static_cast<int>(to_int(key, v));
    else if (key == "perturbation.family") {
        try {
            c.perturbation.family = perturbation_family_from_string(v);
        } catch (const ValidationError&) {
            throw ConfigError("perturbation.family: unknown family '" + v + "'");
        }
    } else if (key == "perturbation.amplitude") c.perturbation.amplitude = to_double(key, v);
    else if (key == "perturbation.width") c.perturbation.width = to_double(key, v);
    else if (key == "perturbation.center") c.perturbation.center = to_double(key, v);
    else if (key == "tolerances.newton_tol") c.newton_tol = to_double(key, v);
    else if (key == "tolerances.picard_tol") c.picard_tol = to_double(key, v);
    else if (key == "tolerances.picard_max_iter") c.picard_max_iter = static_cast<int>(to_int(key, v));
    else if (key == "tolerances.delta") c.delta = to_double(key, v);
    else if (key == "preset") {
        if (!is_preset(v)) throw ConfigError("preset: unknown preset '" + v + "'");
        c.preset = v;
    } else if (key == "output.dir") c.out_dir = v;
    else if (key == "sweep.amplitudes") c.sweep_amplitudes = to_list(key, v);
    else if (key == "bootstrap.c0") c.c0 = to_double(key, v);
    else if (key == "suite.samples") c.samples = static_cast<int>(to_int(key, v));
    else if (key == "suite.seed") c.seed = static_cast<std::uint64_t>(to_int(key, v));
    else if (key == "convergence.levels") c.levels = static_cast<int>(to_int(key, v));
    else throw ConfigError(key + ": unknown key");
}

void validate_config(const RunConfig& c)
{
    auto need = [](bool ok, const std::string& msg) {
        if (!ok) throw ConfigError(msg);
    };
    need(c.perturbation.amplitude >= 0.0, "perturbation.amplitude: must be nonnegative");
    need(c.perturbation.width > 0.0, "perturbation.width: must be positive");
    need(c.newton_tol > 0.0, "tolerances.newton_tol: must be positive");
    need(c.picard_tol > 0.0, "tolerances.picard_tol: must be positive");
    need(c.delta > 0.0, "tolerances.delta: must be positive");
    need(c.picard_max_iter > 0, "tolerances.picard_max_iter: must be positive");
    need(c.dt > 0.0, "time.dt: must be positive");
    need(c.t_final > 0.0, "time.T_final: must be positive");
    need(c.snapshot_stride > 0, "time.snapshot_stride: must be positive");
    need(c.R > 0.0, "grid.R: must be positive");
    need(c.samples > 0, "suite.samples: must be positive");
    need(c.levels >= 2, "convergence.levels: need at least 2");
    need(c.c0 > 0.0, "bootstrap.c0: must be positive");
    for (double a : c.sweep_amplitudes) need(a >= 0.0, "sweep.amplitudes: must be nonnegative");
    need(is_preset(c.preset), "preset: unknown preset '" + c.preset + "'");
}

RunConfig build_config(const std::vector<ConfigEntry>* file_entries, const std::string& preset_flag,
                       const std::vector<std::string>& overrides, const std::string& out_dir_flag)
{
    std::vector<ConfigEntry> ov;
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ConfigError("--override: expected key=value, got '" + o + "'");
        ov.push_back({trim(o.substr(0, eq)), trim(o.substr(eq + 1)), 0});
    }
    std::string preset = "steady_wave";
    if (file_entries)
        for (const auto& e : *file_entries)
            if (e.key == "preset") preset = e.value;
    for (const auto& e : ov)
        if (e.key == "preset") preset = e.value;
    if (!preset_flag.empty()) preset = preset_flag;

    RunConfig c = preset_defaults(preset);
    if (file_entries) {
        static const char* required[] = {"params.mu", "params.v_plus", "params.u_minus", "params.u_plus"};
        for (const char* r : required) {
            const bool found = std::any_of(file_entries->begin(), file_entries->end(),
                                           [&](const ConfigEntry& e) { return e.key == r; });
            if (!found) throw ConfigError(std::string("missing required field '") + r + "'");
        }
        for (const auto& e : *file_entries) {
            try {
                apply_setting(c, e.key, e.value);
            } catch (ConfigError& err) {
                err.add_context("line " + std::to_string(e.line));
                throw;
            }
        }
    }
    for (const auto& e : ov) apply_setting(c, e.key, e.value);
    c.preset = preset;
    if (!out_dir_flag.empty()) c.out_dir = out_dir_flag;
    try {
        c.params = PhysicalParams::make(c.params.mu, c.params.v_plus, c.params.u_minus, c.params.u_plus);
    } catch (const ValidationError& e) {
        throw ConfigError(std::string("params: ") + e.what());
    }
    validate_config(c);
    return c;
}

} // namespace pcns
