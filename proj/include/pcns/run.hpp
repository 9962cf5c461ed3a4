#pragma once

#include "pcns/config.hpp"
#include "pcns/diagnostics.hpp"

#include <json.hpp>

#include <iosfwd>

namespace pcns {

using json = nlohmann::json;

// Wave plus the configured perturbation, validated.
InitialData make_initial(const RunConfig& cfg, const Grid& g);

// Largest amplitude in [0, cap] whose initial energy stays below c0 delta^2.
double scale_amplitude_to_energy(const RunConfig& cfg, const Grid& g, double target, double cap);

// Scalar summaries of a finished run.
json trajectory_metrics(const Trajectory& tr, const InitialData& init, const Grid& g, const PhysicalParams& p,
                        double dt);

// Runs the preset, writes its files into cfg.out_dir and returns the summary
// (also written to summary.json).
json run_preset(const RunConfig& cfg);

// run_preset wrapped for the command line: returns the process exit status and
// writes failure.json on error.
int run(const RunConfig& cfg, std::ostream& log);

} // namespace pcns
