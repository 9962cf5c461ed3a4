#include "pcns/core.hpp"

#include <cmath>

namespace pcns {

double derive_speed(double u_minus, double u_plus, double v_plus)
{
    if (!(v_plus > 1.0))
        throw ValidationError("v_plus must exceed 1");
    if (!(u_minus > u_plus))
        throw ValidationError("u_minus must exceed u_plus");
    return (u_minus - u_plus) / (v_plus - 1.0);
}

PhysicalParams PhysicalParams::make(double mu, double v_plus, double u_minus, double u_plus)
{
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw ValidationError("mu must be positive");
    if (!std::isfinite(v_plus) || !std::isfinite(u_minus) || !std::isfinite(u_plus))
        throw ValidationError("physical parameters must be finite");
    PhysicalParams p;
    p.mu = mu;
    p.v_plus = v_plus;
    p.u_minus = u_minus;
    p.u_plus = u_plus;
    p.s = derive_speed(u_minus, u_plus, v_plus);
    p.p_minus = p.s * p.s * (v_plus - 1.0);
    return p;
}

Grid make_grid(double R, std::size_t n)
{
    if (!(R > 0.0) || !std::isfinite(R))
        throw ValidationError("grid length R must be positive");
    if (n < 16)
        throw ValidationError("grid needs at least 16 nodes");
    Grid g;
    g.R = R;
    g.n = n;
    g.dx = R / static_cast<double>(n - 1);
    g.x.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        g.x[i] = static_cast<double>(i) * R / static_cast<double>(n - 1);
    g.x[n - 1] = R;
    return g;
}

void check_field(const Field& f, const Grid& g, const char* name)
{
    if (f.size() != g.n)
        throw ValidationError(std::string(name) + ": length " + std::to_string(f.size()) +
                              " does not match grid size " + std::to_string(g.n));
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!std::isfinite(f[i]))
            throw ValidationError(std::string(name) + ": non-finite value at node " +
                                  std::to_string(i));
}

} // namespace pcns
