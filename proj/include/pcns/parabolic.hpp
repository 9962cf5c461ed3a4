#pragma once

#include "pcns/core.hpp"

#include <variant>

namespace pcns {

// a(x) = ln x on [1/2, bar_C]; outside, a' moves linearly to 1/nu at x = 0
// (left) and to nu at x = 2 bar_C (right), and is held constant beyond.
struct RegularizedLog {
    double bar_C = 4.0;
    double nu = 0.125;

    static RegularizedLog make(double bar_C);
    static RegularizedLog make(double bar_C, double nu);
};

struct AValue {
    double value;
    double derivative;
};

AValue regularized_a(double x, const RegularizedLog& reg);

// Scalar or per-node coefficient.
class Coef {
public:
    Coef(double c = 0.0) : v_(c) {}
    Coef(Field f) : v_(std::move(f)) {}
    double operator[](std::size_t i) const
    {
        return std::holds_alternative<double>(v_) ? std::get<double>(v_) : std::get<Field>(v_)[i];
    }

private:
    std::variant<double, Field> v_;
};

// du/dt + d/dx(b u) + c u - d/dx(a du/dx) = f, Dirichlet at both ends.
struct LinearParabolicCoeffs {
    Field a;
    Coef b = 0.0;
    Coef c = 0.0;
    Field f; // empty means zero
};

Field linear_parabolic_step(const Field& state, const LinearParabolicCoeffs& co, const Grid& g, double dt,
                            double left_bc, double right_bc);

struct NewtonOptions {
    double tol = 1e-10;
    int max_iter = 50;
    double eps_mp = 1e-9;
};

// One implicit Euler step of dv/dt - ydot dv/dx - mu d2/dx2 a(v) = source,
// with v(0) = 1 and v(R) held at its input value.
Field step_v(const Field& v, double ydot, const Field& source, const Grid& g, double dt, const RegularizedLog& reg,
             const PhysicalParams& p, const NewtonOptions& opt = {}, int* newton_iters = nullptr);

// One implicit Euler step of du/dt - ydot du/dx - mu d/dx((1/v) du/dx) = 0,
// with u(0) = u_minus and u(R) held at its input value.
Field step_u(const Field& u, const Field& v, double ydot, const Grid& g, double dt, const PhysicalParams& p);

// Quintic smoothstep cutoff: 1 on x <= R-2, 0 on x >= R-1.
double chi_R(double x, double R);

// chi_R f + (1 - chi_R) target.
Field mollify(const Field& f, const Field& target, const Grid& g);

// Thomas algorithm; overwrites d with the solution.
void solve_tridiagonal(const Field& lower, Field diag, Field upper, Field& d);

} // namespace pcns
