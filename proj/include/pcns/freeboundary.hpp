#pragma once

#include "pcns/core.hpp"
#include "pcns/discrete_ops.hpp"
#include "pcns/parabolic.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pcns {

struct BoundaryPath {
    double dt = 0.0;
    Field t;
    Field y;
    Field ydot;

    std::size_t size() const { return t.size(); }
    // y recovered by cumulative trapezoid from ydot.
    static BoundaryPath from_speed(Field ydot, double dt, double t0 = 0.0, double y0 = 0.0);
    static BoundaryPath line(double speed, double dt, std::size_t steps);
};

struct HypothesisItem {
    std::string name;
    bool pass = true;
    double residual = 0.0;
};

struct InitialData {
    Field v0, u0, w0, V0, W0, dw0;
    Tabulated w0_tab;  // asymptote u_plus
    Tabulated dw0_tab; // asymptote 0
    double compat_speed = 0.0; // -u0'(0)/v0'(0)
    double h3_residual = 0.0;
    std::vector<HypothesisItem> hypothesis_report;

    bool all_pass() const;
};

struct HypothesisOptions {
    double endpoint_tol = 1e-10;
    double decay_tol = 1e-6;
    double h3_rel_tol = -1.0; // negative: 10 dx^2
    bool throw_on_failure = true;
};

InitialData validate_hypotheses(const Field& v0, const Field& u0, const Grid& g, const PhysicalParams& p,
                                const HypothesisOptions& opt = {});

enum class PerturbationFamily { None, GaussianBump, W0Tilt };

PerturbationFamily perturbation_family_from_string(const std::string& s);
const char* to_string(PerturbationFamily f);

struct PerturbationSpec {
    PerturbationFamily family = PerturbationFamily::None;
    double amplitude = 0.0;
    double width = 1.0;
    double center = 5.0;
};

// Bump exp(-(x-c)^2/(2w^2)) (1 - exp(-(x/w)^4)) and its derivative.
// It vanishes to third order at 0 so endpoint values and the compatibility
// bracket of the wave are untouched.
double bump(double x, double center, double width, double* deriv = nullptr);

struct DataPair {
    Field v0, u0;
};

// Wave plus the requested perturbation, mollified towards the wave near R.
DataPair perturbed_data(const PhysicalParams& p, const Grid& g, const PerturbationSpec& spec);

double boundary_velocity(const Field& u, double w0_at_y, const Grid& g, const PhysicalParams& p,
                         double denom_floor = 1e-8);

struct SolverOptions {
    double dt = 1e-3;
    double t_final = 1.0;
    double picard_tol = 1e-8;
    int picard_max_iter = 30;
    double window = 0.0; // 0: 0.25/s
    int snapshot_stride = 10;
    double denom_floor = 1e-8;
    double bar_C = 0.0; // 0: 2 sup v0
    NewtonOptions newton;
};

RegularizedLog regularization_for(const InitialData& init, const SolverOptions& opt);

struct PicardWindowLog {
    double t0 = 0.0, t1 = 0.0;
    int iterations = 0;
    std::vector<double> distances;
    std::vector<double> distances_h2;
    std::vector<double> ratios;
};

struct Trajectory {
    BoundaryPath path;
    Field p_s;         // -mu du/dx(0) per path node
    Field p_s_formula; // ydot (u_minus - w0(y)) per path node
    std::vector<std::size_t> stored; // path node of each snapshot
    std::vector<Field> v, u;
    std::vector<PicardWindowLog> windows;
    RegularizedLog reg;

    double time(std::size_t j) const { return path.t[stored[j]]; }
    std::size_t snapshots() const { return stored.size(); }
};

struct WindowState {
    double t0 = 0.0;
    double y0 = 0.0;
    Field v, u;
};

struct WindowRun {
    BoundaryPath out;
    Field v_end, u_end;
    std::vector<std::size_t> snap_steps; // local step indices
    std::vector<Field> v_snap, u_snap;
    Field p_s;
};

// Solves v then u along path_in from the given state and integrates the
// boundary speed; snapshots every `stride` steps counted from global_step0.
WindowRun run_window(const BoundaryPath& path_in, const WindowState& start, const InitialData& init, const Grid& g,
                     const PhysicalParams& p, const RegularizedLog& reg, const NewtonOptions& newton,
                     double denom_floor, int stride, std::size_t global_step0);

BoundaryPath apply_T(const BoundaryPath& path_in, const InitialData& init, const Grid& g, const PhysicalParams& p,
                     double dt, const RegularizedLog& reg, const NewtonOptions& newton = {},
                     double denom_floor = 1e-8);

Trajectory picard_solve(const InitialData& init, const Grid& g, const PhysicalParams& p, const SolverOptions& opt);

double h1_distance(const Field& a, const Field& b, double dt);
double h2_distance(const Field& a, const Field& b, double dt);
// ||ydot - s||_{H1} over the first `nodes` entries (all when 0).
double beta_h1(const BoundaryPath& path, double s, std::size_t nodes = 0);

struct InvariantReport {
    double min_ydot = 0.0, max_ydot = 0.0, beta_h1 = 0.0;
    bool lower_ok = false, upper_ok = false, h1_ok = false;
    bool pass() const { return lower_ok && upper_ok && h1_ok; }
};

InvariantReport invariant_set_check(const BoundaryPath& path, double M, const PhysicalParams& p);

struct FullSnapshot {
    double t = 0.0, xtilde = 0.0;
    std::vector<double> x;
    Field v, u, w, p;
};

// Two-sided solution in original coordinates at snapshot j; the congested
// side is sampled on [xtilde - left_length, xtilde).
FullSnapshot assemble_solution(const Trajectory& tr, const Grid& g, const PhysicalParams& p, std::size_t j,
                               double left_length = 5.0);

struct TimeSeriesPoint {
    double t;
    double value;
};

std::vector<TimeSeriesPoint> w_reconstruction_check(const Trajectory& tr, const InitialData& init, const Grid& g,
                                                    const PhysicalParams& p);

void write_trajectory_csv(std::ostream& os, const Trajectory& tr, const Grid& g, const PhysicalParams& p);

} // namespace pcns
