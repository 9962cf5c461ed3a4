#include "pcns/freeboundary.hpp"
#include "pcns/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pcns {

bool InitialData::all_pass() const
{
    return std::all_of(hypothesis_report.begin(), hypothesis_report.end(),
                       [](const HypothesisItem& h) { return h.pass; });
}

InitialData validate_hypotheses(const Field& v0, const Field& u0, const Grid& g, const PhysicalParams& p,
                                const HypothesisOptions& opt)
{
    check_field(v0, g, "v0");
    check_field(u0, g, "u0");
    const Profiles pr = traveling_wave(p, g);
    const std::size_t n = g.n;

    InitialData d;
    d.v0 = v0;
    d.u0 = u0;
    auto add = [&](std::string name, bool pass, double res) {
        d.hypothesis_report.push_back({std::move(name), pass, res});
    };

    add("H1: limits at R",
        std::max(std::abs(v0[n - 1] - pr.v_bar[n - 1]), std::abs(u0[n - 1] - pr.u_bar[n - 1])) <= opt.decay_tol,
        std::max(std::abs(v0[n - 1] - pr.v_bar[n - 1]), std::abs(u0[n - 1] - pr.u_bar[n - 1])));

    const double vmin = *std::min_element(v0.begin(), v0.end());
    if (!(vmin > 0.0)) {
        add("H1: positive specific volume", false, vmin);
        std::ostringstream os;
        os << "hypotheses violated: H1: positive specific volume (min v0 = " << vmin << ")";
        throw HypothesisViolated(os.str());
    }

    d.w0 = effective_velocity(u0, v0, g, p.mu);
    d.dw0 = derivative(d.w0, g, 1);
    Field dv(n), dw(n);
    for (std::size_t i = 0; i < n; ++i) {
        dv[i] = v0[i] - pr.v_bar[i];
        dw[i] = d.w0[i] - p.u_plus;
    }
    d.V0 = tail_integral(dv, g);
    d.W0 = tail_integral(dw, g);
    d.w0_tab = Tabulated(d.w0, g, p.u_plus);
    d.dw0_tab = Tabulated(d.dw0, g, 0.0);

    Field du(n);
    for (std::size_t i = 0; i < n; ++i) du[i] = u0[i] - pr.u_bar[i];
    const double e2 = norm(dv, g, NormKind::H3) + norm(du, g, NormKind::H3) +
                      norm(d.W0, g, NormKind::WeightedOnePlusSqrtX) + norm(d.V0, g, NormKind::L2);
    add("H2: finite energy", std::isfinite(e2), e2);

    add("H3: endpoint v0(0) = 1", std::abs(v0[0] - 1.0) <= opt.endpoint_tol, std::abs(v0[0] - 1.0));
    add("H3: endpoint u0(0) = u_minus", std::abs(u0[0] - p.u_minus) <= opt.endpoint_tol,
        std::abs(u0[0] - p.u_minus));

    const double v1 = trace0(v0, g, 1), u1 = trace0(u0, g, 1), u2 = trace0(u0, g, 2);
    add("H4: non-degeneracy v0'(0) > 0", v1 > 0.0, v1);
    add("H4: non-degeneracy u0'(0) < 0", u1 < 0.0, u1);
    add("H4: non-degeneracy v0 > 1 on x > 0", *std::min_element(v0.begin() + 1, v0.end()) > 1.0,
        *std::min_element(v0.begin() + 1, v0.end()) - 1.0);

    if (v1 != 0.0) {
        const double bracket = -u1 * u1 / v1 - p.mu * v1 * u1 + p.mu * u2;
        const double scale = std::abs(u1 * u1 / v1) + std::abs(p.mu * v1 * u1) + std::abs(p.mu * u2);
        const double tol = opt.h3_rel_tol >= 0.0 ? opt.h3_rel_tol : 10.0 * g.dx * g.dx;
        d.h3_residual = std::abs(bracket);
        add("H3: compatibility", std::abs(bracket) <= tol * scale, std::abs(bracket));
        d.compat_speed = -u1 / v1;
    } else {
        add("H3: compatibility", false, INFINITY);
    }

    double tail = 0.0;
    for (std::size_t i = n - n / 20 - 1; i < n; ++i)
        tail = std::max({tail, std::abs(dv[i]), std::abs(dw[i])});
    add("H5: decay", tail <= opt.decay_tol, tail);

    if (opt.throw_on_failure && !d.all_pass()) {
        std::ostringstream os;
        os << "hypotheses violated:";
        for (const auto& h : d.hypothesis_report)
            if (!h.pass) os << " [" << h.name << ", residual " << h.residual << "]";
        throw HypothesisViolated(os.str());
    }
    return d;
}

PerturbationFamily perturbation_family_from_string(const std::string& s)
{
    if (s == "none") return PerturbationFamily::None;
    if (s == "gaussian_bump") return PerturbationFamily::GaussianBump;
    if (s == "w0_tilt") return PerturbationFamily::W0Tilt;
    throw ValidationError("unknown perturbation family '" + s + "'");
}

const char* to_string(PerturbationFamily f)
{
    switch (f) {
    case PerturbationFamily::None: return "none";
    case PerturbationFamily::GaussianBump: return "gaussian_bump";
    case PerturbationFamily::W0Tilt: return "w0_tilt";
    }
    return "?";
}

double bump(double x, double center, double width, double* deriv)
{
    const double w2 = width * width;
    const double gs = std::exp(-(x - center) * (x - center) / (2.0 * w2));
    const double q = x / width;
    const double e4 = std::exp(-q * q * q * q);
    const double cut = x <= 0.0 ? 0.0 : -std::expm1(-q * q * q * q);
    if (deriv) {
        const double dg = -(x - center) / w2 * gs;
        const double dcut = x <= 0.0 ? 0.0 : 4.0 * x * x * x / (w2 * w2) * e4;
        *deriv = dg * cut + gs * dcut;
    }
    return gs * cut;
}

DataPair perturbed_data(const PhysicalParams& p, const Grid& g, const PerturbationSpec& spec)
{
    if (!(spec.amplitude >= 0.0))
        throw ValidationError("perturbation amplitude must be nonnegative");
    if (!(spec.width > 0.0))
        throw ValidationError("perturbation width must be positive");
    const Profiles pr = traveling_wave(p, g);
    DataPair d{pr.v_bar, pr.u_bar};
    const double A = spec.amplitude;
    if (spec.family == PerturbationFamily::GaussianBump && A > 0.0) {
        for (std::size_t i = 0; i < g.n; ++i) {
            double db = 0.0;
            const double b = bump(g.x[i], spec.center, spec.width, &db);
            const double v = pr.v_bar[i] + A * b;
            d.v0[i] = v;
            d.u0[i] = p.u_plus + p.mu * (pr.dv_bar[i] + A * db) / v;
        }
        d.u0[0] = p.u_minus;
    } else if (spec.family == PerturbationFamily::W0Tilt && A > 0.0) {
        for (std::size_t i = 0; i < g.n; ++i)
            d.u0[i] += A * bump(g.x[i], spec.center, spec.width);
    }
    d.v0 = mollify(d.v0, pr.v_bar, g);
    d.u0 = mollify(d.u0, pr.u_bar, g);
    d.v0[0] = 1.0;
    d.u0[0] = p.u_minus;
    return d;
}

} // namespace pcns
