#pragma once

#include "pcns/core.hpp"

#include <iosfwd>

namespace pcns {

// Closed forms of the traveling wave, anchored so that v_bar(0) = 1.
double v_bar_at(double x, const PhysicalParams& p);
double ln_v_bar_at(double x, const PhysicalParams& p);
double dv_bar_at(double x, const PhysicalParams& p);
double d2v_bar_at(double x, const PhysicalParams& p);
double u_bar_at(double x, const PhysicalParams& p);

struct Profiles {
    Field v_bar;
    Field u_bar;
    Field ln_v_bar;
    Field dv_bar;
    double w_bar_right = 0.0;
    double p_bar_left = 0.0;
};

Profiles traveling_wave(const PhysicalParams& p, const Grid& g);

struct ProfileResidual {
    double ode_residual_norm = 0.0;
    double algebraic_residual_norm = 0.0;
    double slope0 = 0.0;
};

ProfileResidual profile_residual(const Profiles& pr, const PhysicalParams& p, const Grid& g);

// u - mu * d/dx ln v.
Field effective_velocity(const Field& u, const Field& v, const Grid& g, double mu);

// Whitespace separated columns `x v u w`, plus `p` when given.
void write_snapshot(std::ostream& os, const std::vector<double>& x, const Field& v, const Field& u,
                    const Field& w, const Field* p = nullptr);

} // namespace pcns
