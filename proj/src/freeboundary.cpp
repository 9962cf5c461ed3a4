#include "pcns/freeboundary.hpp"
#include "pcns/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace pcns {

BoundaryPath BoundaryPath::from_speed(Field ydot, double dt, double t0, double y0)
{
    BoundaryPath b;
    b.dt = dt;
    b.t.resize(ydot.size());
    for (std::size_t k = 0; k < ydot.size(); ++k)
        b.t[k] = t0 + static_cast<double>(k) * dt;
    b.y = cumulative_trapz(ydot, dt, y0);
    b.ydot = std::move(ydot);
    return b;
}

BoundaryPath BoundaryPath::line(double speed, double dt, std::size_t steps)
{
    return from_speed(Field(steps + 1, speed), dt);
}

double boundary_velocity(const Field& u, double w0_at_y, const Grid& g, const PhysicalParams& p, double denom_floor)
{
    const double denom = p.u_minus - w0_at_y;
    if (!(denom >= denom_floor)) {
        std::ostringstream os;
        os << "u_minus - w0(y) = " << denom << " is below the floor " << denom_floor;
        throw DenominatorTooSmall(os.str());
    }
    return -p.mu * trace0(u, g, 1) / denom;
}

RegularizedLog regularization_for(const InitialData& init, const SolverOptions& opt)
{
    const double C = opt.bar_C > 0.0 ? opt.bar_C : 2.0 * *std::max_element(init.v0.begin(), init.v0.end());
    return RegularizedLog::make(C);
}

// w(0) = u_minus - mu dv/dx(0) from the current state. It equals w0(y) for the
// exact solution; the discrete states do not keep that relation, and feeding the
// transported value into the boundary law leaves a neutral direction (a family
// of steady waves with any speed) along which truncation error accumulates.
namespace {
double interface_w(const Field& v, const Grid& g, const PhysicalParams& p)
{
    return p.u_minus - p.mu * trace0(v, g, 1);
}
} // namespace

WindowRun run_window(const BoundaryPath& path_in, const WindowState& start, const InitialData& init, const Grid& g,
                     const PhysicalParams& p, const RegularizedLog& reg, const NewtonOptions& newton,
                     double denom_floor, int stride, std::size_t global_step0)
{
    const std::size_t steps = path_in.size() - 1;
    const double dt = path_in.dt;
    for (double yd : path_in.ydot)
        if (!(yd > 0.0)) throw ValidationError("input path must have positive speed");

    Field chi(g.n);
    for (std::size_t i = 0; i < g.n; ++i) chi[i] = chi_R(g.x[i], g.R);

    WindowRun w;
    Field v = start.v, u = start.u;
    Field ydot_out(steps + 1);
    w.p_s.resize(steps + 1);
    ydot_out[0] = boundary_velocity(u, interface_w(v, g, p), g, p, denom_floor);
    w.p_s[0] = -p.mu * trace0(u, g, 1);
    auto keep = [&](std::size_t k) {
        if (stride > 0 && ((global_step0 + k) % static_cast<std::size_t>(stride) == 0 || k == steps)) {
            w.snap_steps.push_back(k);
            w.v_snap.push_back(v);
            w.u_snap.push_back(u);
        }
    };
    keep(0);
    double y = start.y0;
    Field src(g.n);
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = start.t0 + static_cast<double>(k + 1) * dt;
        try {
            const double yd = path_in.ydot[k + 1];
            y += 0.5 * dt * (path_in.ydot[k] + path_in.ydot[k + 1]);
            for (std::size_t i = 0; i < g.n; ++i)
                src[i] = chi[i] == 0.0 ? 0.0 : chi[i] * init.dw0_tab(g.x[i] + y);
            v = step_v(v, yd, src, g, dt, reg, p, newton);
            u = step_u(u, v, yd, g, dt, p);
            ydot_out[k + 1] = boundary_velocity(u, interface_w(v, g, p), g, p, denom_floor);
            w.p_s[k + 1] = -p.mu * trace0(u, g, 1);
        } catch (Error& e) {
            std::ostringstream os;
            os.precision(17);
            os << "t=" << t;
            e.add_context(os.str());
            throw;
        }
        keep(k + 1);
    }
    w.out = BoundaryPath::from_speed(std::move(ydot_out), dt, start.t0, start.y0);
    w.v_end = std::move(v);
    w.u_end = std::move(u);
    return w;
}

BoundaryPath apply_T(const BoundaryPath& path_in, const InitialData& init, const Grid& g, const PhysicalParams& p,
                     double dt, const RegularizedLog& reg, const NewtonOptions& newton, double denom_floor)
{
    if (path_in.size() < 2 || std::abs(path_in.y[0]) > 0.0)
        throw ValidationError("apply_T: input path must start at y(0) = 0");
    BoundaryPath in = path_in;
    in.dt = dt;
    WindowState st{0.0, 0.0, init.v0, init.u0};
    WindowRun r = run_window(in, st, init, g, p, reg, newton, denom_floor, 0, 0);
    return r.out;
}

double h1_distance(const Field& a, const Field& b, double dt)
{
    const std::size_t n = std::min(a.size(), b.size());
    Field d2(n);
    double jumps = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double d = a[k] - b[k];
        d2[k] = d * d;
        if (k > 0) {
            const double j = d - (a[k - 1] - b[k - 1]);
            jumps += j * j;
        }
    }
    return std::sqrt(trapz(d2, dt) + jumps / dt);
}

double h2_distance(const Field& a, const Field& b, double dt)
{
    const std::size_t n = std::min(a.size(), b.size());
    const double h1 = h1_distance(a, b, dt);
    double acc = 0.0;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        const double c = (a[k + 1] - b[k + 1]) - 2.0 * (a[k] - b[k]) + (a[k - 1] - b[k - 1]);
        acc += c * c;
    }
    return std::sqrt(h1 * h1 + acc / (dt * dt * dt));
}

double beta_h1(const BoundaryPath& path, double s, std::size_t nodes)
{
    const std::size_t n = nodes == 0 ? path.size() : std::min(nodes, path.size());
    Field a(path.ydot.begin(), path.ydot.begin() + static_cast<std::ptrdiff_t>(n));
    return h1_distance(a, Field(n, s), path.dt);
}

Trajectory picard_solve(const InitialData& init, const Grid& g, const PhysicalParams& p, const SolverOptions& opt)
{
    if (!(opt.dt > 0.0) || !(opt.t_final > 0.0))
        throw ValidationError("picard_solve: dt and t_final must be positive");
    if (!(opt.picard_tol > 0.0) || opt.picard_max_iter < 1)
        throw ValidationError("picard_solve: tolerance and iteration cap must be positive");
    const std::size_t N = static_cast<std::size_t>(std::llround(opt.t_final / opt.dt));
    const double window = opt.window > 0.0 ? opt.window : 0.25 / p.s;
    const std::size_t nw = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(window / opt.dt)));
    const int stride = std::max(1, opt.snapshot_stride);

    Trajectory tr;
    tr.reg = regularization_for(init, opt);
    Field ydot_all{init.compat_speed}, p_s_all;
    WindowState st{0.0, 0.0, init.v0, init.u0};
    double speed = init.compat_speed;

    for (std::size_t k0 = 0; k0 < N; k0 += nw) {
        const std::size_t steps = std::min(nw, N - k0);
        BoundaryPath guess = BoundaryPath::from_speed(Field(steps + 1, speed), opt.dt, st.t0, st.y0);
        PicardWindowLog log;
        log.t0 = st.t0;
        log.t1 = st.t0 + static_cast<double>(steps) * opt.dt;
        WindowRun run;
        bool converged = false;
        for (int it = 0; it < opt.picard_max_iter; ++it) {
            run = run_window(guess, st, init, g, p, tr.reg, opt.newton, opt.denom_floor, stride, k0);
            const double d = h1_distance(run.out.ydot, guess.ydot, opt.dt);
            log.distances.push_back(d);
            log.distances_h2.push_back(h2_distance(run.out.ydot, guess.ydot, opt.dt));
            if (log.distances.size() > 1)
                log.ratios.push_back(d / log.distances[log.distances.size() - 2]);
            log.iterations = it + 1;
            guess = run.out;
            if (d <= opt.picard_tol) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            std::ostringstream os;
            os << "Picard iteration stalled on window [" << log.t0 << ", " << log.t1 << "] after "
               << opt.picard_max_iter << " iterations; last distance " << log.distances.back()
               << ", last contraction ratio " << (log.ratios.empty() ? NAN : log.ratios.back());
            throw PicardStalled(os.str());
        }
        tr.windows.push_back(log);

        const BoundaryPath& acc = run.out;
        if (k0 == 0) {
            ydot_all[0] = acc.ydot[0];
            p_s_all.push_back(run.p_s[0]);
        }
        for (std::size_t k = 1; k <= steps; ++k) {
            ydot_all.push_back(acc.ydot[k]);
            p_s_all.push_back(run.p_s[k]);
        }
        for (std::size_t j = 0; j < run.snap_steps.size(); ++j) {
            const std::size_t gk = k0 + run.snap_steps[j];
            if (!tr.stored.empty() && tr.stored.back() == gk) continue;
            tr.stored.push_back(gk);
            tr.v.push_back(run.v_snap[j]);
            tr.u.push_back(run.u_snap[j]);
        }
        st.t0 = acc.t.back();
        st.y0 = acc.y.back();
        st.v = run.v_end;
        st.u = run.u_end;
        speed = acc.ydot.back();
    }

    tr.path = BoundaryPath::from_speed(std::move(ydot_all), opt.dt);
    tr.p_s = std::move(p_s_all);
    tr.p_s_formula.resize(tr.path.size());
    for (std::size_t k = 0; k < tr.path.size(); ++k)
        tr.p_s_formula[k] = tr.path.ydot[k] * (p.u_minus - init.w0_tab(tr.path.y[k]));
    return tr;
}

InvariantReport invariant_set_check(const BoundaryPath& path, double M, const PhysicalParams& p)
{
    InvariantReport r;
    r.min_ydot = *std::min_element(path.ydot.begin(), path.ydot.end());
    r.max_ydot = *std::max_element(path.ydot.begin(), path.ydot.end());
    r.beta_h1 = beta_h1(path, p.s);
    r.lower_ok = r.min_ydot >= 1.0 / M;
    r.upper_ok = r.max_ydot <= M;
    r.h1_ok = r.beta_h1 <= M;
    return r;
}

FullSnapshot assemble_solution(const Trajectory& tr, const Grid& g, const PhysicalParams& p, std::size_t j,
                               double left_length)
{
    if (j >= tr.snapshots())
        throw ValidationError("assemble_solution: snapshot index out of range");
    FullSnapshot s;
    const std::size_t k = tr.stored[j];
    s.t = tr.path.t[k];
    s.xtilde = tr.path.y[k];
    const double ps = tr.p_s[k];
    const std::size_t m = static_cast<std::size_t>(std::floor(left_length / g.dx));
    for (std::size_t i = m; i >= 1; --i) {
        s.x.push_back(s.xtilde - static_cast<double>(i) * g.dx);
        s.v.push_back(1.0);
        s.u.push_back(p.u_minus);
        s.w.push_back(p.u_minus);
        s.p.push_back(ps);
    }
    const Field w = effective_velocity(tr.u[j], tr.v[j], g, p.mu);
    for (std::size_t i = 0; i < g.n; ++i) {
        s.x.push_back(s.xtilde + g.x[i]);
        s.v.push_back(tr.v[j][i]);
        s.u.push_back(tr.u[j][i]);
        s.w.push_back(w[i]);
        s.p.push_back(0.0);
    }
    return s;
}

std::vector<TimeSeriesPoint> w_reconstruction_check(const Trajectory& tr, const InitialData& init, const Grid& g,
                                                    const PhysicalParams& p)
{
    std::vector<TimeSeriesPoint> out;
    for (std::size_t j = 0; j < tr.snapshots(); ++j) {
        const Field ws = effective_velocity(tr.u[j], tr.v[j], g, p.mu);
        const Field ref = shift_sample(init.w0_tab, tr.path.y[tr.stored[j]], g);
        Field d(g.n);
        for (std::size_t i = 0; i < g.n; ++i) d[i] = ws[i] - ref[i];
        out.push_back({tr.time(j), norm(d, g, NormKind::L2)});
    }
    return out;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& tr, const Grid& g, const PhysicalParams& p)
{
    const Profiles pr = traveling_wave(p, g);
    os << "t,xtilde,xtilde_dot,p_s,l2_v_err,h1_v_err,l2_u_err,beta_h1_running\n";
    os << std::setprecision(17);
    Field dv(g.n), du(g.n);
    for (std::size_t j = 0; j < tr.snapshots(); ++j) {
        const std::size_t k = tr.stored[j];
        for (std::size_t i = 0; i < g.n; ++i) {
            dv[i] = tr.v[j][i] - pr.v_bar[i];
            du[i] = tr.u[j][i] - pr.u_bar[i];
        }
        os << tr.path.t[k] << ',' << tr.path.y[k] << ',' << tr.path.ydot[k] << ',' << tr.p_s[k] << ','
           << norm(dv, g, NormKind::L2) << ',' << norm(dv, g, NormKind::H1) << ',' << norm(du, g, NormKind::L2)
           << ',' << beta_h1(tr.path, p.s, k + 1) << '\n';
    }
}

} // namespace pcns
