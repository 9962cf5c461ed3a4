#pragma once

#include "pcns/core.hpp"
#include "pcns/freeboundary.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pcns {

struct RunConfig {
    PhysicalParams params = PhysicalParams::make(1.0, 2.0, 1.0, 0.0);
    double R = 50.0;
    std::size_t n = 2049;
    double t_final = 1.0;
    double dt = 1e-3;
    int snapshot_stride = 10;
    PerturbationSpec perturbation;
    double newton_tol = 1e-10;
    double picard_tol = 1e-8;
    int picard_max_iter = 30;
    double delta = 0.05;
    std::string preset = "steady_wave";
    std::string out_dir = "out";

    // Preset-specific knobs.
    std::vector<double> sweep_amplitudes{1e-4, 1e-3, 1e-2};
    double c0 = 0.4;
    int samples = 100;
    std::uint64_t seed = 20240611;
    int levels = 3;

    SolverOptions solver_options() const;
};

const std::vector<std::string>& presets();
bool is_preset(const std::string& name);
RunConfig preset_defaults(const std::string& name);

struct ConfigEntry {
    std::string key;
    std::string value;
    int line = 0;
};

// Parses `key = value` lines; `#` starts a comment. Errors name the line.
std::vector<ConfigEntry> parse_config_text(std::istream& in, const std::string& source);

// Sets one dotted key; throws ConfigError naming the key on bad input.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// Builds a configuration: preset defaults, then file entries, then overrides.
// A config file must define params.mu, params.v_plus, params.u_minus and params.u_plus.
RunConfig build_config(const std::vector<ConfigEntry>* file_entries, const std::string& preset_flag,
                       const std::vector<std::string>& overrides, const std::string& out_dir_flag);

void validate_config(const RunConfig& cfg);

} // namespace pcns
