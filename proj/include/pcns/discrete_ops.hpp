#pragma once

#include "pcns/core.hpp"

#include <string>

namespace pcns {

enum class NormKind { L2, H1, H2, H3, Linf, L1, WeightedSqrtX, WeightedOnePlusSqrtX };

NormKind norm_kind_from_string(const std::string& s);
const char* to_string(NormKind k);

// Central differences inside, second-order one-sided stencils at both ends.
Field derivative(const Field& f, const Grid& g, int k);

// Central differences inside with first-order closures (f1-f0)/dx at the ends.
// Together with trapezoid weights it satisfies summation by parts exactly:
// sum_H(u Dw) + sum_H(w Du) = u_R w_R - u_0 w_0.
Field sbp_derivative(const Field& f, const Grid& g);

double trapz(const Field& f, double h);
double trapz_product(const Field& a, const Field& b, double h);

double norm(const Field& f, const Grid& g, NormKind kind);

// One-sided estimate of the k-th derivative at x = 0.
// k = 1 uses the four-point third-order stencil, k = 2 the four-point
// second-order stencil.
double trace0(const Field& f, const Grid& g, int k);

// Samples on a uniform grid, interpolated by monotone (Fritsch-Carlson) cubics.
// Beyond the last node the declared asymptote f_inf is returned.
class Tabulated {
public:
    Tabulated() = default;
    Tabulated(Field values, double h, double f_inf);
    Tabulated(const Field& values, const Grid& g, double f_inf) : Tabulated(values, g.dx, f_inf) {}

    double operator()(double x) const;
    double length() const { return h_ * static_cast<double>(f_.size() - 1); }
    double f_inf() const { return f_inf_; }
    const Field& values() const { return f_; }

private:
    Field f_;
    Field d_;
    double h_ = 1.0;
    double f_inf_ = 0.0;
};

// f0(x_i + y) at every node; y must be nonnegative.
Field shift_sample(const Tabulated& f0, double y, const Grid& g);

// T(x) = -int_x^R f, by reversed cumulative trapezoid, T(R) = 0.
Field tail_integral(const Field& f, const Grid& g);

// C(t_k) = int_0^{t_k} f, cumulative trapezoid on spacing h.
Field cumulative_trapz(const Field& f, double h, double c0 = 0.0);

} // namespace pcns
