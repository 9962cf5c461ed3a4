#include "pcns/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pcns {

RegularizedLog RegularizedLog::make(double bar_C) { return make(bar_C, 0.5 / bar_C); }

RegularizedLog RegularizedLog::make(double bar_C, double nu)
{
    if (!(bar_C >= 1.0))
        throw ValidationError("RegularizedLog: bar_C must be at least 1");
    if (!(nu > 0.0) || nu > 1.0 / bar_C || 1.0 / nu < 2.0)
        throw ValidationError("RegularizedLog: nu must lie in (0, 1/bar_C] with 1/nu >= 2");
    return RegularizedLog{bar_C, nu};
}

AValue regularized_a(double x, const RegularizedLog& reg)
{
    const double C = reg.bar_C, nu = reg.nu;
    if (x >= 0.5 && x <= C)
        return {std::log(x), 1.0 / x};
    if (x < 0.5) {
        const double k = 2.0 * (1.0 / nu - 2.0);
        auto val = [&](double tau) { return -std::log(2.0) - 2.0 * tau - 0.5 * k * tau * tau; };
        if (x >= 0.0) {
            const double tau = 0.5 - x;
            return {val(tau), 2.0 + k * tau};
        }
        return {val(0.5) + x / nu, 1.0 / nu};
    }
    const double m = (nu - 1.0 / C) / C;
    auto val = [&](double d) { return std::log(C) + d / C + 0.5 * m * d * d; };
    if (x <= 2.0 * C) {
        const double d = x - C;
        return {val(d), 1.0 / C + m * d};
    }
    return {val(C) + nu * (x - 2.0 * C), nu};
}

void solve_tridiagonal(const Field& lower, Field diag, Field upper, Field& d)
{
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0) {
            const double m = lower[i] / diag[i - 1];
            diag[i] -= m * upper[i - 1];
            d[i] -= m * d[i - 1];
        }
        if (!(std::abs(diag[i]) > 1e-300) || !std::isfinite(diag[i])) {
            std::ostringstream os;
            os << "zero pivot in tridiagonal solve at row " << i;
            throw SolverError(os.str());
        }
    }
    d[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;)
        d[i] = (d[i] - upper[i] * d[i + 1]) / diag[i];
}

namespace {
double harmonic(double a, double b) { return a + b > 0.0 ? 2.0 * a * b / (a + b) : 0.0; }
} // namespace

Field linear_parabolic_step(const Field& state, const LinearParabolicCoeffs& co, const Grid& g, double dt,
                            double left_bc, double right_bc)
{
    const std::size_t n = g.n;
    if (!(dt > 0.0))
        throw ValidationError("linear_parabolic_step: dt must be positive");
    if (state.size() != n || co.a.size() != n || (!co.f.empty() && co.f.size() != n))
        throw ValidationError("linear_parabolic_step: field sizes do not match the grid");
    const double h = g.dx;
    const double ih2 = dt / (h * h), i2h = dt / (2.0 * h);
    Field lo(n, 0.0), di(n, 1.0), up(n, 0.0), rhs(n);
    double amin = co.a[0];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double al = harmonic(co.a[i - 1], co.a[i]);
        const double ar = harmonic(co.a[i], co.a[i + 1]);
        amin = std::min(amin, co.a[i]);
        lo[i] = -co.b[i - 1] * i2h - al * ih2;
        up[i] = co.b[i + 1] * i2h - ar * ih2;
        di[i] = 1.0 + dt * co.c[i] + (al + ar) * ih2;
        rhs[i] = state[i] + (co.f.empty() ? 0.0 : dt * co.f[i]);
    }
    rhs[0] = left_bc;
    rhs[n - 1] = right_bc;
    try {
        solve_tridiagonal(lo, di, up, rhs);
    } catch (SolverError& e) {
        std::ostringstream os;
        os << "dt=" << dt << ", min diffusion=" << amin;
        e.add_context(os.str());
        throw;
    }
    return rhs;
}

Field step_v(const Field& v, double ydot, const Field& source, const Grid& g, double dt, const RegularizedLog& reg,
             const PhysicalParams& p, const NewtonOptions& opt, int* newton_iters)
{
    const std::size_t n = g.n;
    const double h = g.dx, mu = p.mu;
    const double cd = mu / (h * h), ct = ydot / (2.0 * h);
    const double vR = v[n - 1];

    auto attempt = [&](const Field& vold, double tau, Field& out, int& iters, double& last_res) -> bool {
        Field w = vold;
        w[0] = 1.0;
        w[n - 1] = vR;
        Field a(n), ap(n), r(n, 0.0);
        auto residual = [&](const Field& z) {
            for (std::size_t i = 0; i < n; ++i) {
                const AValue av = regularized_a(z[i], reg);
                a[i] = av.value;
                ap[i] = av.derivative;
            }
            double m = 0.0;
            for (std::size_t i = 1; i + 1 < n; ++i) {
                const double src = source.empty() ? 0.0 : source[i];
                r[i] = z[i] - vold[i] -
                       tau * (ct * (z[i + 1] - z[i - 1]) + cd * (a[i + 1] - 2.0 * a[i] + a[i - 1]) + src);
                m = std::max(m, std::abs(r[i]));
            }
            return m;
        };
        double res = residual(w);
        Field lo(n, 0.0), di(n, 1.0), up(n, 0.0), dlt(n, 0.0);
        for (iters = 0; iters < opt.max_iter && res > opt.tol; ++iters) {
            for (std::size_t i = 1; i + 1 < n; ++i) {
                di[i] = 1.0 + 2.0 * tau * cd * ap[i];
                lo[i] = -tau * (cd * ap[i - 1] - ct);
                up[i] = -tau * (cd * ap[i + 1] + ct);
                dlt[i] = -r[i];
            }
            lo[n - 1] = 0.0;
            up[0] = 0.0;
            dlt[0] = 0.0;
            dlt[n - 1] = 0.0;
            solve_tridiagonal(lo, di, up, dlt);
            double lambda = 1.0;
            Field trial(n);
            double new_res = res;
            for (int k = 0; k < 20; ++k) {
                for (std::size_t i = 0; i < n; ++i)
                    trial[i] = w[i] + lambda * dlt[i];
                new_res = residual(trial);
                if (std::isfinite(new_res) && new_res < res) break;
                lambda *= 0.5;
            }
            if (!std::isfinite(new_res)) break;
            w.swap(trial);
            res = new_res;
        }
        last_res = res;
        if (!(res <= opt.tol)) return false;
        out.swap(w);
        return true;
    };

    Field out;
    int iters = 0;
    double last = 0.0;
    if (!attempt(v, dt, out, iters, last)) {
        Field half;
        int i1 = 0, i2 = 0;
        double l1 = 0.0;
        if (!attempt(v, 0.5 * dt, half, i1, l1) || !attempt(half, 0.5 * dt, out, i2, last)) {
            std::ostringstream os;
            os << "Newton did not converge (last residual " << (l1 > opt.tol ? l1 : last) << ", dt=" << dt << ")";
            throw NewtonDiverged(os.str());
        }
        iters += i1 + i2;
    }
    if (newton_iters) *newton_iters = iters;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (!(out[i] > 1.0 - opt.eps_mp) || !(out[i] <= reg.bar_C + opt.eps_mp)) {
            std::ostringstream os;
            os.precision(17);
            os << "v=" << out[i] << " at x=" << g.x[i] << " leaves (1, " << reg.bar_C << "]";
            throw MaximumPrincipleViolated(os.str());
        }
    }
    return out;
}

Field step_u(const Field& u, const Field& v, double ydot, const Grid& g, double dt, const PhysicalParams& p)
{
    LinearParabolicCoeffs co;
    co.a.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i)
        co.a[i] = p.mu / v[i];
    co.b = -ydot;
    return linear_parabolic_step(u, co, g, dt, p.u_minus, u[g.n - 1]);
}

double chi_R(double x, double R)
{
    const double t = x - (R - 2.0);
    if (t <= 0.0) return 1.0;
    if (t >= 1.0) return 0.0;
    return 1.0 - t * t * t * (10.0 - 15.0 * t + 6.0 * t * t);
}

Field mollify(const Field& f, const Field& target, const Grid& g)
{
    Field out(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        const double c = chi_R(g.x[i], g.R);
        out[i] = c * f[i] + (1.0 - c) * target[i];
    }
    return out;
}

} // namespace pcns
