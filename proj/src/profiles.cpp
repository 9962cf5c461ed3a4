#include "pcns/profiles.hpp"

#include "pcns/discrete_ops.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

namespace pcns {

namespace {
double rate(const PhysicalParams& p) { return p.s * p.v_plus / p.mu; }
} // namespace

double v_bar_at(double x, const PhysicalParams& p)
{
    if (x <= 0.0) return 1.0;
    return p.v_plus / (1.0 + (p.v_plus - 1.0) * std::exp(-rate(p) * x));
}

double ln_v_bar_at(double x, const PhysicalParams& p)
{
    if (x <= 0.0) return 0.0;
    return std::log(p.v_plus) - std::log1p((p.v_plus - 1.0) * std::exp(-rate(p) * x));
}

double dv_bar_at(double x, const PhysicalParams& p)
{
    if (x < 0.0) return 0.0;
    const double v = v_bar_at(x, p);
    return rate(p) * v * (1.0 - v / p.v_plus);
}

double d2v_bar_at(double x, const PhysicalParams& p)
{
    if (x < 0.0) return 0.0;
    const double v = v_bar_at(x, p);
    const double dv = rate(p) * v * (1.0 - v / p.v_plus);
    return rate(p) * dv * (1.0 - 2.0 * v / p.v_plus);
}

double u_bar_at(double x, const PhysicalParams& p)
{
    return p.u_plus + p.s * p.v_plus - p.s * v_bar_at(x, p);
}

Profiles traveling_wave(const PhysicalParams& p, const Grid& g)
{
    Profiles pr;
    pr.v_bar.resize(g.n);
    pr.u_bar.resize(g.n);
    pr.ln_v_bar.resize(g.n);
    pr.dv_bar.resize(g.n);
    for (std::size_t i = 0; i < g.n; ++i) {
        const double x = g.x[i];
        pr.v_bar[i] = v_bar_at(x, p);
        pr.u_bar[i] = p.u_plus + p.s * p.v_plus - p.s * pr.v_bar[i];
        pr.ln_v_bar[i] = ln_v_bar_at(x, p);
        pr.dv_bar[i] = dv_bar_at(x, p);
    }
    pr.v_bar[0] = 1.0;
    pr.u_bar[0] = p.u_minus;
    pr.w_bar_right = p.u_plus;
    pr.p_bar_left = p.p_minus;
    return pr;
}

ProfileResidual profile_residual(const Profiles& pr, const PhysicalParams& p, const Grid& g)
{
    ProfileResidual r;
    const Field dv = derivative(pr.v_bar, g, 1);
    const Field d2l = derivative(pr.ln_v_bar, g, 2);
    double acc = 0.0;
    for (std::size_t i = 1; i + 1 < g.n; ++i) {
        const double e = p.s * dv[i] + p.mu * d2l[i];
        acc += e * e;
    }
    r.ode_residual_norm = std::sqrt(acc * g.dx);
    double m = 0.0;
    for (std::size_t i = 0; i < g.n; ++i)
        m = std::max(m, std::abs(pr.u_bar[i] - (p.u_plus + p.s * p.v_plus - p.s * pr.v_bar[i])));
    r.algebraic_residual_norm = m;
    r.slope0 = trace0(pr.v_bar, g, 1);
    return r;
}

Field effective_velocity(const Field& u, const Field& v, const Grid& g, double mu)
{
    Field lv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0))
            throw ValidationError("effective_velocity: non-positive v at node " + std::to_string(i));
        lv[i] = std::log(v[i]);
    }
    const Field d = derivative(lv, g, 1);
    Field w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        w[i] = u[i] - mu * d[i];
    return w;
}

void write_snapshot(std::ostream& os, const std::vector<double>& x, const Field& v, const Field& u,
                    const Field& w, const Field* p)
{
    os << (p ? "x v u w p\n" : "x v u w\n");
    os << std::setprecision(17);
    for (std::size_t i = 0; i < x.size(); ++i) {
        os << x[i] << ' ' << v[i] << ' ' << u[i] << ' ' << w[i];
        if (p) os << ' ' << (*p)[i];
        os << '\n';
    }
}

} // namespace pcns
