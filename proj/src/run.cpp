#include "pcns/run.hpp"

#include "pcns/discrete_ops.hpp"
#include "pcns/profiles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>

namespace fs = std::filesystem;

namespace pcns {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::ofstream open_out(const RunConfig& cfg, const std::string& name)
{
    std::ofstream os(fs::path(cfg.out_dir) / name);
    if (!os) throw Error("cannot open output file " + (fs::path(cfg.out_dir) / name).string());
    return os;
}

void write_json(const RunConfig& cfg, const std::string& name, const json& j)
{
    auto os = open_out(cfg, name);
    os << j.dump(2) << '\n';
}

json params_json(const PhysicalParams& p)
{
    return {{"mu", p.mu}, {"v_plus", p.v_plus}, {"u_minus", p.u_minus}, {"u_plus", p.u_plus},
            {"s", p.s},   {"p_minus", p.p_minus}};
}

json energy_json(const EnergyReport& e)
{
    return {{"t", e.t},   {"E0", e.E0}, {"E1", e.E1}, {"E2", e.E2}, {"E3", e.E3},
            {"E4", e.E4}, {"E5", e.E5}, {"script_E0", e.script_E0}, {"script_ET", e.script_ET},
            {"beta_H1", e.beta_H1}};
}

void write_snapshot_file(const RunConfig& cfg, const std::string& name, const Trajectory& tr, const Grid& g,
                         const PhysicalParams& p, std::size_t j)
{
    const FullSnapshot s = assemble_solution(tr, g, p, j);
    auto os = open_out(cfg, name);
    write_snapshot(os, s.x, s.v, s.u, s.w, &s.p);
}

void write_trajectory_outputs(const RunConfig& cfg, const std::string& tag, const Trajectory& tr, const Grid& g,
                              const PhysicalParams& p)
{
    {
        auto os = open_out(cfg, "trajectory" + tag + ".csv");
        write_trajectory_csv(os, tr, g, p);
    }
    write_snapshot_file(cfg, "snapshot" + tag + "_initial.txt", tr, g, p, 0);
    write_snapshot_file(cfg, "snapshot" + tag + "_final.txt", tr, g, p, tr.snapshots() - 1);
}

Grid grid_of(const RunConfig& cfg) { return make_grid(cfg.R, cfg.n); }

// Records shared by every trajectory preset.
void trajectory_records(std::vector<DiagRecord>& out, const Trajectory& tr, const InitialData& init, const Grid& g,
                        const PhysicalParams& p, double dt)
{
    const double ptol = 10.0 * (g.dx * g.dx + dt);
    for (std::size_t j = 0; j < tr.snapshots(); ++j) {
        const std::size_t k = tr.stored[j];
        const double a = tr.p_s[k], b = tr.p_s_formula[k];
        out.push_back({tr.time(j), "pressure_identity", a, b, a - b, std::abs(a - b) <= ptol});
    }
    for (const auto& w : w_reconstruction_check(tr, init, g, p))
        out.push_back({w.t, "w_reconstruction", w.value, 0.0, w.value, true});
}

json run_steady_wave(const RunConfig& cfg)
{
    const Grid g = grid_of(cfg);
    const PhysicalParams& p = cfg.params;
    const InitialData init = make_initial(cfg, g);
    const auto t0 = std::chrono::steady_clock::now();
    const Trajectory tr = picard_solve(init, g, p, cfg.solver_options());
    const double elapsed = seconds_since(t0);
    write_trajectory_outputs(cfg, "", tr, g, p);
    {
        const Profiles pr = traveling_wave(p, g);
        const Field w = effective_velocity(pr.u_bar, pr.v_bar, g, p.mu);
        auto os = open_out(cfg, "profile.txt");
        write_snapshot(os, g.x, pr.v_bar, pr.u_bar, w);
    }
    std::vector<DiagRecord> recs;
    trajectory_records(recs, tr, init, g, p, cfg.dt);
    json m = trajectory_metrics(tr, init, g, p, cfg.dt);
    const InvariantReport inv = invariant_set_check(tr.path, 2.0, p);
    recs.push_back({cfg.t_final, "invariant_set_M2", inv.beta_h1, 2.0, 2.0 - inv.beta_h1, inv.pass()});
    {
        auto os = open_out(cfg, "diagnostics.jsonl");
        write_jsonl(os, recs);
    }
    const double drift = m["max_drift_v_linf"], ydev = m["max_abs_ydot_minus_s"], pdev = m["max_abs_ps_minus_pminus"];
    json s = {{"runtime_s", elapsed},
              {"metrics", m},
              {"energy", energy_json(energy_report(tr, init, g, p, cfg.t_final))},
              {"invariant_set", {{"M", 2.0}, {"min_ydot", inv.min_ydot}, {"max_ydot", inv.max_ydot},
                                 {"beta_h1", inv.beta_h1}, {"pass", inv.pass()}}},
              {"tolerances", {{"drift_v", 5e-4}, {"ydot", 5e-4}, {"p_s", 5e-3}}},
              {"pass", drift <= 5e-4 && ydev <= 5e-4 && pdev <= 5e-3}};
    return s;
}

json run_convergence_order(const RunConfig& cfg)
{
    const PhysicalParams& p = cfg.params;
    json levels = json::array();
    std::vector<double> drift;
    std::size_t n = cfg.n;
    double dt = cfg.dt;
    for (int l = 0; l < cfg.levels; ++l) {
        RunConfig c = cfg;
        c.n = n;
        c.dt = dt;
        c.perturbation.family = PerturbationFamily::None;
        const Grid g = grid_of(c);
        const InitialData init = make_initial(c, g);
        const Trajectory tr = picard_solve(init, g, p, c.solver_options());
        json m = trajectory_metrics(tr, init, g, p, dt);
        drift.push_back(m["max_drift_v_linf"]);
        {
            auto os = open_out(cfg, "trajectory_level" + std::to_string(l) + ".csv");
            write_trajectory_csv(os, tr, g, p);
        }
        levels.push_back({{"n", n}, {"dx", g.dx}, {"dt", dt}, {"max_drift_v_linf", drift.back()},
                          {"max_abs_ydot_minus_s", m["max_abs_ydot_minus_s"]}});
        n = 2 * (n - 1) + 1;
        dt /= 4.0;
    }
    json ratios = json::array();
    bool ok = true;
    for (std::size_t l = 1; l < drift.size(); ++l) {
        const double r = drift[l - 1] / drift[l];
        ratios.push_back(r);
        ok = ok && r >= 3.5;
    }
    return {{"levels", levels}, {"ratios", ratios}, {"min_ratio_required", 3.5}, {"pass", ok}};
}

json run_stability_sweep(const RunConfig& cfg)
{
    const PhysicalParams& p = cfg.params;
    const Grid g = grid_of(cfg);
    std::vector<std::future<json>> jobs;
    for (std::size_t i = 0; i < cfg.sweep_amplitudes.size(); ++i) {
        jobs.push_back(std::async(std::launch::async, [&, i]() {
            RunConfig c = cfg;
            c.perturbation.amplitude = cfg.sweep_amplitudes[i];
            const InitialData init = make_initial(c, g);
            const Trajectory tr = picard_solve(init, g, p, c.solver_options());
            {
                auto os = open_out(cfg, "trajectory_" + std::to_string(i) + ".csv");
                write_trajectory_csv(os, tr, g, p);
            }
            json m = trajectory_metrics(tr, init, g, p, c.dt);
            m["amplitude"] = c.perturbation.amplitude;
            m["script_E0"] = initial_energy(init, g, p);
            m["bar_C"] = tr.reg.bar_C;
            m["file"] = "trajectory_" + std::to_string(i) + ".csv";
            return m;
        }));
    }
    json runs = json::array();
    bool mp_ok = true;
    for (auto& f : jobs) {
        json m = f.get();
        const double vmin = m["min_interior_v"], vmax = m["max_v"], C = m["bar_C"];
        const bool ok = vmin > 1.0 - 1e-9 && vmax <= C + 1e-9;
        m["max_principle_ok"] = ok;
        mp_ok = mp_ok && ok;
        runs.push_back(m);
    }
    return {{"runs", runs}, {"pass", mp_ok}};
}

json run_coercivity_suite(const RunConfig& cfg)
{
    const PhysicalParams& p = cfg.params;
    const Grid g = grid_of(cfg);
    const Profiles pr = traveling_wave(p, g);
    const Field rho = weight_rho(g, p);
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> normal;
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<DiagRecord> recs;
    double max_rel = 0.0, max_C = 0.0;
    for (int k = 0; k < cfg.samples; ++k) {
        Field phi(g.n, 0.0);
        for (int j = 0; j < 3; ++j) {
            const double a = normal(rng), b = 0.75 + 1.25 * unif(rng), c = 3.0 * unif(rng),
                         d = 2.0 * M_PI * unif(rng);
            for (std::size_t i = 0; i < g.n; ++i) phi[i] += a * std::exp(-b * g.x[i]) * std::cos(c * g.x[i] + d);
        }
        const CoercivityResult r = coercivity_check(phi, pr, g, p);
        max_rel = std::max(max_rel, r.rel_gap);
        recs.push_back({static_cast<double>(k), "coercivity_A_dx", r.lhs, r.rhs, r.gap, r.rel_gap <= 1e-6});
        const CoercivityResult w = coercivity_check(phi, pr, g, p, &rho);
        max_C = std::max(max_C, w.constant);
        recs.push_back({static_cast<double>(k), "coercivity_dx_A_weighted", w.lhs, w.rhs, w.gap, true});
    }
    const double kern = kernel_residual(pr, g, p);
    recs.push_back({0.0, "kernel_A_dvbar", kern, 1e-5, 1e-5 - kern, kern <= 1e-5});
    {
        auto os = open_out(cfg, "diagnostics.jsonl");
        write_jsonl(os, recs);
    }
    return {{"samples", cfg.samples},
            {"max_rel_gap", max_rel},
            {"kernel_residual", kern},
            {"weighted_max_constant", max_C},
            {"tolerances", {{"rel_gap", 1e-6}, {"kernel", 1e-5}}},
            {"pass", max_rel <= 1e-6 && kern <= 1e-5}};
}

json run_trace_suite(const RunConfig& cfg)
{
    const PhysicalParams& p = cfg.params;
    const Grid g = grid_of(cfg);
    const InitialData init = make_initial(cfg, g);
    const Trajectory tr = picard_solve(init, g, p, cfg.solver_options());
    write_trajectory_outputs(cfg, "", tr, g, p);
    std::vector<DiagRecord> recs;
    double m0 = 0.0, m1 = 0.0, m2 = 0.0, t2min = INFINITY;
    for (std::size_t j = 0; j < tr.snapshots(); ++j) {
        const TraceReport r = trace_identities(tr, init, g, p, j);
        m0 = std::max(m0, std::abs(r.res_g1_x0));
        m1 = std::max(m1, std::abs(r.res_g1_R1));
        m2 = std::max(m2, std::abs(r.res_px2g1));
        t2min = std::min(t2min, r.T2);
        recs.push_back({r.t, "trace_g1_x0", r.g1_at0, r.w0_shift, r.res_g1_x0, std::abs(r.res_g1_x0) <= 5e-4});
        recs.push_back({r.t, "trace_g1_R1", r.dx_g1_at0, r.dx_g1_at0 - r.res_g1_R1, r.res_g1_R1, true});
        recs.push_back({r.t, "trace_px2g1", r.px2g1, r.px2g1 - r.res_px2g1, r.res_px2g1, true});
    }
    trajectory_records(recs, tr, init, g, p, cfg.dt);
    {
        auto os = open_out(cfg, "diagnostics.jsonl");
        write_jsonl(os, recs);
    }
    return {{"metrics", trajectory_metrics(tr, init, g, p, cfg.dt)},
            {"max_res_g1_x0", m0},
            {"max_res_g1_R1", m1},
            {"max_res_px2g1", m2},
            {"min_T2", t2min},
            {"tolerances", {{"g1_x0", 5e-4}}},
            {"pass", m0 <= 5e-4}};
}

json run_bootstrap_check(const RunConfig& cfg)
{
    const PhysicalParams& p = cfg.params;
    const Grid g = grid_of(cfg);
    const double target = cfg.c0 * cfg.delta * cfg.delta;
    RunConfig c = cfg;
    c.perturbation.amplitude = scale_amplitude_to_energy(cfg, g, target, cfg.perturbation.amplitude);
    const InitialData init = make_initial(c, g);
    const double E0 = initial_energy(init, g, p);
    const Trajectory tr = picard_solve(init, g, p, c.solver_options());
    write_trajectory_outputs(cfg, "", tr, g, p);
    const BootstrapStatus bs = bootstrap_monitor(tr.path, p, cfg.delta);
    json m = trajectory_metrics(tr, init, g, p, cfg.dt);
    std::vector<DiagRecord> recs;
    trajectory_records(recs, tr, init, g, p, cfg.dt);
    for (std::size_t j = 0; j < tr.snapshots(); ++j) {
        const std::size_t k = tr.stored[j];
        recs.push_back({tr.time(j), "bootstrap_half_delta", bs.running[k], 0.5 * cfg.delta,
                        0.5 * cfg.delta - bs.running[k], bs.running[k] <= 0.5 * cfg.delta});
    }
    const L1Report l1 = l1_diagnostic(tr, init, g, p);
    const GeneriqueReport gg = generique_g_check(tr, init, g, p);
    {
        auto os = open_out(cfg, "diagnostics.jsonl");
        write_jsonl(os, recs);
    }
    const double decay = static_cast<double>(m["sup_dev_final"]) / static_cast<double>(m["sup_dev_initial"]);
    const double wmax = m["w_reconstruction_max"];
    return {{"c0", cfg.c0},
            {"delta", cfg.delta},
            {"amplitude", c.perturbation.amplitude},
            {"script_E0", E0},
            {"script_E0_bound", target},
            {"bootstrap", {{"max_running", bs.max_running}, {"pass_half", bs.pass_half}, {"pass_full", bs.pass_full}}},
            {"decay_ratio", decay},
            {"metrics", m},
            {"energy", energy_json(energy_report(tr, init, g, p, cfg.t_final))},
            {"l1", {{"base", l1.base}, {"fitted_C", l1.fitted_C}}},
            {"generique", {{"lhs", gg.lhs}, {"base", gg.base}, {"fitted_C", gg.fitted_C}, {"ratio", gg.ratio}}},
            {"tolerances", {{"decay_ratio", 0.1}, {"w_reconstruction", 1e-3}}},
            {"pass", bs.pass_half && decay <= 0.1 && wmax <= 1e-3 && E0 <= target}};
}

json run_appendix_lemmas(const RunConfig& cfg)
{
    const PhysicalParams& p = cfg.params;
    const Grid g = grid_of(cfg);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto U = [&](double a, double b) { return a + (b - a) * unif(rng); };
    auto random_speed = [&](double M, double T, std::size_t steps) {
        const double om = U(0.0, 3.0), ph = U(0.0, 2.0 * M_PI), lo = U(0.1, 0.5), hi = U(0.5, 0.9);
        Field yd(steps + 1);
        for (std::size_t k = 0; k <= steps; ++k) {
            const double t = T * static_cast<double>(k) / static_cast<double>(steps);
            const double r = lo + (hi - lo) * 0.5 * (1.0 + std::sin(om * t + ph));
            yd[k] = 1.0 / M + (M - 1.0 / M) * r;
        }
        return BoundaryPath::from_speed(std::move(yd), T / static_cast<double>(steps));
    };
    auto random_bumps = [&](bool signed_amp) {
        Field f(g.n, 0.0);
        for (int j = 0; j < 3; ++j) {
            const double a = signed_amp ? U(-1.0, 1.0) : U(0.0, 1.0), c = U(0.0, 8.0), w = U(0.3, 2.0);
            for (std::size_t i = 0; i < g.n; ++i) {
                const double z = (g.x[i] - c) / w;
                f[i] += a * std::exp(-0.5 * z * z);
            }
        }
        return f;
    };
    std::vector<DiagRecord> recs;
    int xy_fail = 0, taylor_fail = 0;
    double xy_max_ratio = 0.0, taylor_max_ratio = 0.0;
    const std::size_t steps = 200;
    for (int k = 0; k < cfg.samples; ++k) {
        const double M = U(1.5, 4.0), T = U(0.5, 6.0);
        const Field F = random_bumps(false);
        const BoundaryPath path = random_speed(M, T, steps);
        const LemmaCheck c = lemma_xy_check(F, path, M, g);
        xy_fail += !c.holds();
        xy_max_ratio = std::max(xy_max_ratio, c.lhs / c.rhs);
        recs.push_back({static_cast<double>(k), "lemma_xy", c.lhs, c.rhs, c.rhs - c.lhs, c.holds()});
    }
    for (int k = 0; k < cfg.samples; ++k) {
        const double M = U(1.5, 4.0), T = U(0.5, 6.0);
        Field w0 = random_bumps(true);
        for (double& v : w0) v += p.u_plus;
        const BoundaryPath a = random_speed(M, T, steps), b = random_speed(M, T, steps);
        const LemmaCheck c = lemma_taylor_check(w0, a, b, M, g);
        taylor_fail += !c.holds();
        taylor_max_ratio = std::max(taylor_max_ratio, c.lhs / c.rhs);
        recs.push_back({static_cast<double>(k), "lemma_taylor", c.lhs, c.rhs, c.rhs - c.lhs, c.holds()});
    }
    const InitialData init = make_initial(cfg, g);
    const Trajectory tr = picard_solve(init, g, p, cfg.solver_options());
    const GeneriqueReport gg = generique_g_check(tr, init, g, p);
    recs.push_back({cfg.t_final, "generique_g", gg.lhs, gg.C_ref * gg.base, gg.C_ref * gg.base - gg.lhs,
                    gg.ratio <= 1.0});
    {
        auto os = open_out(cfg, "diagnostics.jsonl");
        write_jsonl(os, recs);
    }
    return {{"samples", cfg.samples},
            {"lemma_xy", {{"counterexamples", xy_fail}, {"max_lhs_over_rhs", xy_max_ratio}}},
            {"lemma_taylor", {{"counterexamples", taylor_fail}, {"max_lhs_over_rhs", taylor_max_ratio}}},
            {"generique", {{"lhs", gg.lhs}, {"base", gg.base}, {"fitted_C", gg.fitted_C}, {"C_ref", gg.C_ref},
                           {"ratio", gg.ratio}, {"exp_ratio", gg.exp_ratio}}},
            {"pass", xy_fail == 0 && taylor_fail == 0 && gg.ratio <= 1.0}};
}

} // namespace

InitialData make_initial(const RunConfig& cfg, const Grid& g)
{
    const DataPair d = perturbed_data(cfg.params, g, cfg.perturbation);
    return validate_hypotheses(d.v0, d.u0, g, cfg.params);
}

double scale_amplitude_to_energy(const RunConfig& cfg, const Grid& g, double target, double cap)
{
    auto energy = [&](double A) {
        RunConfig c = cfg;
        c.perturbation.amplitude = A;
        const DataPair d = perturbed_data(c.params, g, c.perturbation);
        HypothesisOptions ho;
        ho.throw_on_failure = false;
        return initial_energy(validate_hypotheses(d.v0, d.u0, g, c.params, ho), g, c.params);
    };
    if (energy(0.0) > target)
        throw ValidationError("initial energy of the unperturbed wave already exceeds c0 delta^2");
    if (energy(cap) <= target) return cap;
    double lo = 0.0, hi = cap;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (energy(mid) <= target ? lo : hi) = mid;
    }
    return lo;
}

json trajectory_metrics(const Trajectory& tr, const InitialData& init, const Grid& g, const PhysicalParams& p,
                        double dt)
{
    const Profiles pr = traveling_wave(p, g);
    double drift = 0.0, vmin = INFINITY, vmax = 0.0;
    std::vector<double> sup;
    for (std::size_t j = 0; j < tr.snapshots(); ++j) {
        double m = 0.0;
        for (std::size_t i = 0; i < g.n; ++i) {
            m = std::max(m, std::abs(tr.v[j][i] - pr.v_bar[i]));
            if (i > 0 && i + 1 < g.n) vmin = std::min(vmin, tr.v[j][i]);
            vmax = std::max(vmax, tr.v[j][i]);
        }
        sup.push_back(m);
        drift = std::max(drift, m);
    }
    double ydev = 0.0, pdev = 0.0, pgap = 0.0, ymin = INFINITY;
    for (std::size_t k = 0; k < tr.path.size(); ++k) {
        ydev = std::max(ydev, std::abs(tr.path.ydot[k] - p.s));
        pdev = std::max(pdev, std::abs(tr.p_s[k] - p.p_minus));
        pgap = std::max(pgap, std::abs(tr.p_s[k] - tr.p_s_formula[k]));
        ymin = std::min(ymin, tr.path.ydot[k]);
    }
    double wmax = 0.0;
    for (const auto& w : w_reconstruction_check(tr, init, g, p)) wmax = std::max(wmax, w.value);
    int iters = 0;
    json first_ratios = json::array();
    for (const auto& w : tr.windows) iters = std::max(iters, w.iterations);
    if (!tr.windows.empty())
        for (double r : tr.windows.front().ratios) first_ratios.push_back(r);
    const double compat_tol = 10.0 * (g.dx * g.dx + dt);
    return {{"converged", true},
            {"windows", tr.windows.size()},
            {"picard_iterations_max", iters},
            {"first_window_ratios", first_ratios},
            {"max_drift_v_linf", drift},
            {"sup_dev_initial", sup.front()},
            {"sup_dev_final", sup.back()},
            {"max_abs_ydot_minus_s", ydev},
            {"min_ydot", ymin},
            {"max_abs_ps_minus_pminus", pdev},
            {"pressure_identity_max_gap", pgap},
            {"w_reconstruction_max", wmax},
            {"beta_h1", beta_h1(tr.path, p.s)},
            {"min_interior_v", vmin},
            {"max_v", vmax},
            {"bar_C", tr.reg.bar_C},
            {"ydot0", tr.path.ydot.front()},
            {"compat_speed", init.compat_speed},
            {"compat_ok", std::abs(tr.path.ydot.front() - init.compat_speed) <= compat_tol},
            {"final_xtilde", tr.path.y.back()}};
}

json run_preset(const RunConfig& cfg)
{
    fs::create_directories(cfg.out_dir);
    const auto t0 = std::chrono::steady_clock::now();
    json s;
    const std::string& n = cfg.preset;
    if (n == "steady_wave") s = run_steady_wave(cfg);
    else if (n == "convergence_order") s = run_convergence_order(cfg);
    else if (n == "stability_sweep") s = run_stability_sweep(cfg);
    else if (n == "coercivity_suite") s = run_coercivity_suite(cfg);
    else if (n == "trace_suite") s = run_trace_suite(cfg);
    else if (n == "bootstrap_check") s = run_bootstrap_check(cfg);
    else if (n == "appendix_lemmas") s = run_appendix_lemmas(cfg);
    else throw ConfigError("preset: unknown preset '" + n + "'");
    s["preset"] = n;
    s["status"] = "ok";
    s["params"] = params_json(cfg.params);
    s["grid"] = {{"R", cfg.R}, {"n", cfg.n}};
    s["time"] = {{"T_final", cfg.t_final}, {"dt", cfg.dt}, {"snapshot_stride", cfg.snapshot_stride}};
    s["perturbation"] = {{"family", to_string(cfg.perturbation.family)},
                         {"amplitude", cfg.perturbation.amplitude},
                         {"width", cfg.perturbation.width},
                         {"center", cfg.perturbation.center}};
    s["wall_time_s"] = seconds_since(t0);
    write_json(cfg, "summary.json", s);
    return s;
}

int run(const RunConfig& cfg, std::ostream& log)
{
    try {
        const json s = run_preset(cfg);
        log << "preset " << cfg.preset << ": " << (s.value("pass", false) ? "checks passed" : "checks FAILED")
            << " (summary in " << (fs::path(cfg.out_dir) / "summary.json").string() << ")\n";
        return 0;
    } catch (const Error& e) {
        json f = {{"status", "error"}, {"preset", cfg.preset}, {"kind", e.kind()}, {"message", e.what()}};
        try {
            fs::create_directories(cfg.out_dir);
            write_json(cfg, "failure.json", f);
        } catch (...) {
        }
        log << "error (" << e.kind() << "): " << e.what() << '\n';
        return dynamic_cast<const ConfigError*>(&e) ? 2 : 1;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace pcns
