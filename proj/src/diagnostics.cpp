#include "pcns/diagnostics.hpp"

#include "pcns/discrete_ops.hpp"
#include "pcns/parabolic.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <ostream>

namespace pcns {

namespace {

Field sub(const Field& a, const Field& b)
{
    Field d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

double sq(const Field& f, const Grid& g) { return trapz_product(f, f, g.dx); }

// Nonuniform three-point time derivative of a sequence of fields.
std::vector<Field> time_derivative(const std::vector<Field>& f, const std::vector<double>& t)
{
    const std::size_t m = f.size();
    std::vector<Field> d(m, Field(m ? f[0].size() : 0, 0.0));
    if (m < 2) return d;
    const std::size_t n = f[0].size();
    for (std::size_t j = 0; j < m; ++j) {
        if (j == 0 || j + 1 == m) {
            const std::size_t a = j == 0 ? 0 : m - 2;
            const double h = t[a + 1] - t[a];
            for (std::size_t i = 0; i < n; ++i) d[j][i] = (f[a + 1][i] - f[a][i]) / h;
            continue;
        }
        const double hm = t[j] - t[j - 1], hp = t[j + 1] - t[j];
        const double den = hm * hp * (hm + hp);
        for (std::size_t i = 0; i < n; ++i)
            d[j][i] = (hm * hm * f[j + 1][i] - hp * hp * f[j - 1][i] + (hp * hp - hm * hm) * f[j][i]) / den;
    }
    return d;
}

double time_integral(const std::vector<double>& q, const std::vector<double>& t)
{
    double s = 0.0;
    for (std::size_t j = 1; j < q.size(); ++j) s += 0.5 * (t[j] - t[j - 1]) * (q[j] + q[j - 1]);
    return s;
}

std::size_t snapshots_until(const Trajectory& tr, double t)
{
    std::size_t m = 0;
    while (m < tr.snapshots() && tr.time(m) <= t + 1e-12) ++m;
    return m;
}

} // namespace

Field integrated_V(const Field& v, const Field& v_bar, const Grid& g) { return tail_integral(sub(v, v_bar), g); }

double initial_energy(const InitialData& init, const Grid& g, const PhysicalParams& p)
{
    const Profiles pr = traveling_wave(p, g);
    const Field dv = sub(init.v0, pr.v_bar), du = sub(init.u0, pr.u_bar);
    Field dw(g.n);
    for (std::size_t i = 0; i < g.n; ++i) dw[i] = init.w0[i] - p.u_plus;
    const Field d2w = derivative(init.dw0, g, 1);
    auto n2 = [&](const Field& f, NormKind k) {
        const double a = norm(f, g, k);
        return a * a;
    };
    return n2(dv, NormKind::H3) + n2(du, NormKind::H3) + n2(dw, NormKind::L2) + n2(init.V0, NormKind::L2) +
           n2(init.W0, NormKind::WeightedOnePlusSqrtX) + n2(init.dw0, NormKind::WeightedOnePlusSqrtX) +
           n2(d2w, NormKind::WeightedOnePlusSqrtX);
}

EnergyReport energy_report(const Trajectory& tr, const InitialData& init, const Grid& g, const PhysicalParams& p,
                           double t)
{
    const Profiles pr = traveling_wave(p, g);
    const std::size_t m = snapshots_until(tr, t);
    EnergyReport r;
    r.script_E0 = initial_energy(init, g, p);
    if (m == 0) {
        r.script_ET = r.script_E0;
        return r;
    }
    std::vector<double> times(m);
    std::vector<Field> G(m), H(m);
    for (std::size_t j = 0; j < m; ++j) {
        times[j] = tr.time(j);
        G[j] = sub(tr.v[j], pr.v_bar);
        H[j] = sub(tr.u[j], pr.u_bar);
    }
    const auto Gt = time_derivative(G, times), Ht = time_derivative(H, times);
    const auto Gtt = time_derivative(Gt, times), Htt = time_derivative(Ht, times);

    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0;
    std::vector<double> i_g(m), i_gx(m), i_gt(m), i_gxt(m), i_gtt(m), i_gxxt(m), i_hx(m), i_ht(m), i_htt(m),
        i_hxxt(m);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t k = tr.stored[j];
        const Field V = tail_integral(G[j], g);
        s0 = std::max(s0, sq(V, g) + tr.path.ydot[k] * V[0] * V[0]);
        const Field gx = derivative(G[j], g, 1), gxx = derivative(G[j], g, 2);
        const Field gxxx = derivative(gxx, g, 1);
        const Field gxt = derivative(Gt[j], g, 1), gxxt = derivative(Gt[j], g, 2);
        const Field hx = derivative(H[j], g, 1), hxx = derivative(H[j], g, 2);
        const Field hxt = derivative(Ht[j], g, 1), hxxt = derivative(Ht[j], g, 2);
        i_g[j] = sq(G[j], g);
        i_gx[j] = sq(gx, g);
        i_gt[j] = sq(Gt[j], g);
        i_gxt[j] = sq(gxt, g);
        i_gtt[j] = sq(Gtt[j], g);
        i_gxxt[j] = sq(gxxt, g);
        i_hx[j] = sq(hx, g) + sq(hxx, g);
        i_ht[j] = sq(Ht[j], g);
        i_htt[j] = sq(Htt[j], g);
        i_hxxt[j] = sq(hxxt, g);
        s1 = std::max(s1, i_g[j] + i_gx[j]);
        s2 = std::max(s2, i_gt[j] + sq(gxx, g));
        s3 = std::max(s3, i_gxt[j] + sq(gxxx, g));
        s4 = std::max(s4, sq(H[j], g) + sq(hx, g));
        s5 = std::max(s5, sq(hxt, g));
    }
    r.t = times.back();
    r.E0 = s0 + time_integral(i_g, times);
    r.E1 = s1 + time_integral(i_gx, times) + time_integral(i_gt, times);
    r.E2 = s2 + time_integral(i_gxt, times);
    r.E3 = s3 + time_integral(i_gtt, times) + time_integral(i_gxxt, times);
    r.E4 = s4 + time_integral(i_hx, times) + time_integral(i_ht, times);
    r.E5 = s5 + time_integral(i_htt, times) + time_integral(i_hxxt, times);
    r.beta_H1 = beta_h1(tr.path, p.s, tr.stored[m - 1] + 1);
    r.script_ET = r.script_E0 + r.beta_H1 * r.beta_H1;
    return r;
}

Field operator_A(const Field& g, const Profiles& pr, const Grid& gr, const PhysicalParams& p)
{
    Field q(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) q[i] = g[i] / pr.v_bar[i];
    const Field d = derivative(q, gr, 1);
    Field out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) out[i] = -p.s * g[i] - p.mu * d[i];
    return out;
}

Field weight_rho(const Grid& g, const PhysicalParams& p)
{
    Field r(g.n);
    for (std::size_t i = 0; i < g.n; ++i) r[i] = 1.0 + std::exp(-4.0 * p.s * g.x[i] / p.mu);
    return r;
}

double kernel_residual(const Profiles& pr, const Grid& g, const PhysicalParams& p)
{
    return norm(operator_A(pr.dv_bar, pr, g, p), g, NormKind::L2);
}

CoercivityResult coercivity_check(const Field& phi, const Profiles& pr, const Grid& g, const PhysicalParams& p,
                                  const Field* rho)
{
    const double mu = p.mu, s = p.s, h = g.dx;
    const std::size_t n = g.n;
    CoercivityResult r;
    if (!rho) {
        const Field d = sbp_derivative(phi, g);
        Field q(n), qv(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = d[i] / pr.v_bar[i];
        const Field dq = sbp_derivative(q, g);
        Field Ad(n);
        for (std::size_t i = 0; i < n; ++i) Ad[i] = -s * d[i] - mu * dq[i];
        r.lhs = trapz_product(Ad, phi, h);
        r.rhs = mu * trapz_product(d, q, h) + 0.5 * s * phi[0] * phi[0] + mu * d[0] * phi[0];
    } else {
        const Field& w = *rho;
        Field q(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = phi[i] / pr.v_bar[i];
        const Field dq = sbp_derivative(q, g);
        Field A(n);
        for (std::size_t i = 0; i < n; ++i) A[i] = -s * phi[i] - mu * dq[i];
        const Field dA = sbp_derivative(A, g);
        Field qw(n), dqw(n);
        for (std::size_t i = 0; i < n; ++i) {
            qw[i] = q[i] * w[i];
            dqw[i] = dq[i] * w[i];
        }
        const double drho0 = trace0(w, g, 1);
        r.lhs = trapz_product(dA, qw, h);
        r.rhs = mu * trapz_product(dq, dqw, h) + phi[0] * phi[0] * (0.5 * s * w[0] - 0.5 * mu * drho0) +
                mu * dq[0] * phi[0] * w[0];
        double wmax = 0.0;
        const Field dw = derivative(w, g, 1), d2w = derivative(w, g, 2);
        double m0 = 0, m1 = 0, m2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            m0 = std::max(m0, std::abs(w[i]));
            m1 = std::max(m1, std::abs(dw[i]));
            m2 = std::max(m2, std::abs(d2w[i]));
        }
        wmax = m0 + m1 + m2;
        const double l2 = trapz_product(phi, phi, h);
        const double deficit = std::max(0.0, r.rhs - r.lhs);
        r.constant = l2 > 0.0 ? deficit / (wmax * l2) : 0.0;
    }
    r.gap = r.lhs - r.rhs;
    const double scale = std::max(std::abs(r.lhs), std::abs(r.rhs));
    r.rel_gap = scale > 0.0 ? std::abs(r.gap) / scale : 0.0;
    return r;
}

TraceReport trace_identities(const Trajectory& tr, const InitialData& init, const Grid& g, const PhysicalParams& p,
                             std::size_t snapshot)
{
    const Profiles pr = traveling_wave(p, g);
    const std::size_t k = tr.stored.at(snapshot);
    const double y = tr.path.y[k], yd = tr.path.ydot[k], beta = yd - p.s;
    const double mu = p.mu, s = p.s, vp = p.v_plus;

    TraceReport r;
    r.t = tr.path.t[k];
    const Field gdev = sub(tr.v[snapshot], pr.v_bar);
    const Field g1 = operator_A(gdev, pr, g, p);
    r.g1_at0 = g1[0];
    r.dx_g1_at0 = trace0(g1, g, 1);
    Field q = derivative(g1, g, 1);
    for (std::size_t i = 0; i < g.n; ++i) q[i] /= pr.v_bar[i];
    const double lhs_px2 = mu * trace0(q, g, 1);

    const Tabulated d2w0(derivative(init.dw0, g, 1), g, 0.0);
    const double w = init.w0_tab(y) - p.u_plus;
    const double dw = init.dw0_tab(y);
    const double d2w = d2w0(y);
    r.w0_shift = w;
    r.T2 = w * w / (mu * mu);
    r.R1 = beta * (-w) / mu + mu * r.T2 + dw;
    r.T3 = -3.0 * beta * s * (vp - 1.0) * w / (mu * mu) + 3.0 * (beta + s) * w * w / (mu * mu * mu) -
           3.0 / (mu * mu) * dw * w + w * w * w / (mu * mu * mu);
    r.R2 = s * (vp - 1.0) / mu * beta * w + (vp - 2.0) * s * mu * r.T2 - mu * mu * r.T3 + s * (vp - 2.0) * dw -
           mu * d2w - yd * dw;
    r.res_g1_x0 = r.g1_at0 - w;
    r.res_g1_R1 = r.dx_g1_at0 - (beta * s * (vp - 1.0) / mu + r.R1);
    r.px2g1 = lhs_px2;
    r.res_px2g1 = lhs_px2 - (-(s + beta) * r.dx_g1_at0 - r.R2);
    return r;
}

BootstrapStatus bootstrap_monitor(const BoundaryPath& path, const PhysicalParams& p, double delta)
{
    if (!(delta > 0.0)) throw ValidationError("bootstrap_monitor: delta must be positive");
    BootstrapStatus st;
    const double dt = path.dt;
    double l2 = 0.0, jumps = 0.0;
    for (std::size_t k = 0; k < path.size(); ++k) {
        const double b = path.ydot[k] - p.s;
        if (k > 0) {
            const double bp = path.ydot[k - 1] - p.s;
            l2 += 0.5 * dt * (b * b + bp * bp);
            jumps += (b - bp) * (b - bp);
        }
        // A single node carries no H1 mass from the integral; use |beta| there.
        const double val = k == 0 ? std::abs(b) : std::sqrt(l2 + jumps / dt);
        st.t.push_back(path.t[k]);
        st.running.push_back(val);
        st.max_running = std::max(st.max_running, val);
        if (val > 0.5 * delta) {
            if (st.pass_half) st.first_fail_t = path.t[k];
            st.pass_half = false;
        }
        if (val > delta) st.pass_full = false;
    }
    return st;
}

LemmaCheck lemma_xy_check(const Field& F, const BoundaryPath& path, double M, const Grid& g)
{
    check_field(F, g, "F");
    if (!(M >= 1.0)) throw ValidationError("lemma_xy_check: M must be at least 1");
    for (std::size_t k = 0; k < path.size(); ++k)
        if (path.y[k] < path.t[k] / M - 1e-12)
            throw ValidationError("lemma_xy_check: path violates y(t) >= t/M");
    const Tabulated tab(F, g, 0.0);
    Field inner(path.size());
    Field row(g.n);
    for (std::size_t k = 0; k < path.size(); ++k) {
        for (std::size_t i = 0; i < g.n; ++i) {
            const double f = tab(g.x[i] + path.y[k]);
            row[i] = f * f;
        }
        inner[k] = trapz(row, g.dx);
    }
    LemmaCheck c;
    c.lhs = trapz(inner, path.dt);
    const double w = norm(F, g, NormKind::WeightedSqrtX);
    c.rhs = M * w * w;
    return c;
}

LemmaCheck lemma_taylor_check(const Field& w0, const BoundaryPath& path1, const BoundaryPath& path2, double M,
                              const Grid& g)
{
    check_field(w0, g, "w0");
    if (path1.size() != path2.size() || path1.dt != path2.dt)
        throw ValidationError("lemma_taylor_check: paths must share time nodes");
    for (const BoundaryPath* pp : {&path1, &path2}) {
        if (std::abs(pp->y[0]) > 0.0) throw ValidationError("lemma_taylor_check: paths must start at 0");
        for (double v : pp->ydot)
            if (v < 1.0 / M - 1e-12 || v > M + 1e-12)
                throw ValidationError("lemma_taylor_check: path speed outside [1/M, M]");
    }
    const Tabulated tab(w0, g, w0.back());
    Field dw(path1.size()), dv(path1.size());
    for (std::size_t k = 0; k < path1.size(); ++k) {
        const double d = tab(path1.y[k]) - tab(path2.y[k]);
        dw[k] = d * d;
        const double e = path1.ydot[k] - path2.ydot[k];
        dv[k] = e * e;
    }
    LemmaCheck c;
    c.lhs = std::sqrt(trapz(dw, path1.dt));
    c.rhs = M * std::sqrt(trapz(dv, path1.dt)) * norm(derivative(w0, g, 1), g, NormKind::WeightedSqrtX);
    return c;
}

double generique_reference_constant(const PhysicalParams& p, double M, double vbar_w1inf)
{
    return 2.0 * M * (1.0 + 1.0 / p.mu) * (1.0 + vbar_w1inf);
}

GeneriqueReport generique_g_check(const Trajectory& tr, const InitialData& init, const Grid& g,
                                  const PhysicalParams& p, double C_ref)
{
    const Profiles pr = traveling_wave(p, g);
    const std::size_t m = tr.snapshots();
    std::vector<double> times(m);
    std::vector<Field> G(m), src(m);
    Field chi(g.n);
    for (std::size_t i = 0; i < g.n; ++i) chi[i] = chi_R(g.x[i], g.R);
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t k = tr.stored[j];
        times[j] = tr.path.t[k];
        G[j] = sub(tr.v[j], pr.v_bar);
        const double beta = tr.path.ydot[k] - p.s;
        src[j].resize(g.n);
        for (std::size_t i = 0; i < g.n; ++i)
            src[j][i] = chi[i] * init.dw0_tab(g.x[i] + tr.path.y[k]) + beta * pr.dv_bar[i];
    }
    const auto Gt = time_derivative(G, times);
    double sup_h1 = 0.0;
    std::vector<double> qt(m), qx(m), qg(m), qs(m);
    for (std::size_t j = 0; j < m; ++j) {
        sup_h1 = std::max(sup_h1, norm(G[j], g, NormKind::H1));
        qt[j] = sq(Gt[j], g);
        qx[j] = sq(derivative(G[j], g, 1), g);
        qg[j] = sq(G[j], g);
        qs[j] = sq(src[j], g);
    }
    GeneriqueReport r;
    r.lhs = sup_h1 + std::sqrt(time_integral(qt, times)) + std::sqrt(time_integral(qx, times));
    const double g0 = norm(G[0], g, NormKind::H1), Gn = std::sqrt(time_integral(qs, times));
    r.base = g0 + Gn + std::sqrt(time_integral(qg, times));
    double dvmax = 0.0, vmax = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) {
        dvmax = std::max(dvmax, std::abs(pr.dv_bar[i]));
        vmax = std::max(vmax, pr.v_bar[i]);
    }
    const double T = times.back() - times.front();
    r.exp_base = (g0 + Gn) * std::exp((1.0 + dvmax * dvmax) * T);
    const double ymin = *std::min_element(tr.path.ydot.begin(), tr.path.ydot.end());
    const double ymax = *std::max_element(tr.path.ydot.begin(), tr.path.ydot.end());
    const double M = std::max({1.0, ymax, 1.0 / ymin});
    r.C_ref = C_ref > 0.0 ? C_ref : generique_reference_constant(p, M, vmax + dvmax);
    r.fitted_C = r.base > 0.0 ? r.lhs / r.base : 0.0;
    r.ratio = r.base > 0.0 ? r.lhs / (r.C_ref * r.base) : 0.0;
    r.exp_ratio = r.exp_base > 0.0 ? r.lhs / (r.C_ref * r.exp_base) : 0.0;
    return r;
}

L1Report l1_diagnostic(const Trajectory& tr, const InitialData& init, const Grid& g, const PhysicalParams& p)
{
    const Profiles pr = traveling_wave(p, g);
    L1Report r;
    double sup = 0.0;
    for (std::size_t j = 0; j < tr.snapshots(); ++j) {
        r.t.push_back(tr.time(j));
        r.l1.push_back(norm(sub(tr.v[j], pr.v_bar), g, NormKind::L1));
        sup = std::max(sup, r.l1.back());
    }
    r.base = norm(sub(init.v0, pr.v_bar), g, NormKind::L1) + norm(init.dw0, g, NormKind::L1) +
             norm(pr.dv_bar, g, NormKind::L1);
    r.fitted_C = r.base > 0.0 ? sup / r.base : 0.0;
    return r;
}

void write_jsonl(std::ostream& os, const std::vector<DiagRecord>& recs)
{
    for (const auto& r : recs) {
        nlohmann::json j = {{"t", r.t}, {"check", r.check}, {"lhs", r.lhs},
                            {"rhs", r.rhs}, {"gap", r.gap}, {"pass", r.pass}};
        os << j.dump() << '\n';
    }
}

} // namespace pcns
