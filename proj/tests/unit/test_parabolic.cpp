#include "pcns/discrete_ops.hpp"
#include "pcns/parabolic.hpp"
#include "pcns/profiles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace pcns;

namespace {
const PhysicalParams P = PhysicalParams::make(1.0, 2.0, 1.0, 0.0);

double sq_norm(const Field& f, double dx) { return trapz_product(f, f, dx); }
} // namespace

TEST_CASE("regularized log examples")
{
    const RegularizedLog r = RegularizedLog::make(4.0, 0.125);
    CHECK(regularized_a(1.0, r).value == 0.0);
    CHECK(regularized_a(1.0, r).derivative == 1.0);
    CHECK(regularized_a(2.0, r).value == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(regularized_a(0.5, r).value == doctest::Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(regularized_a(4.0, r).derivative == doctest::Approx(0.25));
    CHECK(regularized_a(0.0, r).derivative == doctest::Approx(8.0));
    CHECK(regularized_a(8.0, r).derivative == doctest::Approx(0.125));
    CHECK(regularized_a(100.0, r).derivative == doctest::Approx(0.125));
    CHECK(regularized_a(-3.0, r).derivative == doctest::Approx(8.0));
}

TEST_CASE("regularized log is C1 and its slope stays in [nu, 1/nu]")
{
    for (double C : {1.5, 4.0, 10.0}) {
        const RegularizedLog r = RegularizedLog::make(C);
        double prev_val = regularized_a(-1.0, r).value;
        for (int k = 1; k <= 40000; ++k) {
            const double x = -1.0 + k * (4.0 * C + 2.0) / 40000.0;
            const AValue a = regularized_a(x, r);
            CHECK(a.derivative >= r.nu * (1 - 1e-12));
            CHECK(a.derivative <= (1 + 1e-12) / r.nu);
            CHECK(a.value > prev_val);
            prev_val = a.value;
        }
        for (double j : {0.0, 0.5, C, 2.0 * C}) {
            const double e = 1e-9;
            const AValue lo = regularized_a(j - e, r), hi = regularized_a(j + e, r);
            CHECK(std::abs(hi.value - lo.value) <= 1e-7);
            CHECK(std::abs(hi.derivative - lo.derivative) <= 1e-6);
        }
    }
}

TEST_CASE("linear parabolic step examples")
{
    const Grid g = make_grid(1.0, 65);
    SUBCASE("constant state is preserved")
    {
        LinearParabolicCoeffs co{Field(g.n, 0.7)};
        const Field out = linear_parabolic_step(Field(g.n, 2.5), co, g, 0.01, 2.5, 2.5);
        for (double x : out) CHECK(x == doctest::Approx(2.5).epsilon(1e-13));
    }
    SUBCASE("sine mode decays at the implicit Euler rate")
    {
        const double dt = 1e-3;
        Field u(g.n);
        for (std::size_t i = 0; i < g.n; ++i) u[i] = std::sin(M_PI * g.x[i]);
        LinearParabolicCoeffs co{Field(g.n, 1.0)};
        const Field out = linear_parabolic_step(u, co, g, dt, 0.0, 0.0);
        // discrete eigenvalue of the 3-point Laplacian
        const double lam = 4.0 / (g.dx * g.dx) * std::pow(std::sin(M_PI * g.dx / 2.0), 2);
        for (std::size_t i = 1; i + 1 < g.n; ++i) CHECK(out[i] == doctest::Approx(u[i] / (1.0 + dt * lam)).epsilon(1e-10));
    }
    SUBCASE("reaction and source")
    {
        LinearParabolicCoeffs co{Field(g.n, 0.0), 0.0, 1.0, Field(g.n, 1.0)};
        const Field out = linear_parabolic_step(Field(g.n, 0.0), co, g, 0.1, 0.1 / 1.1, 0.1 / 1.1);
        for (std::size_t i = 1; i + 1 < g.n; ++i) CHECK(out[i] == doctest::Approx(0.1 / 1.1).epsilon(1e-14));
    }
    SUBCASE("zero pivot is reported with the step and minimum diffusion")
    {
        Field a(g.n, 0.0);
        LinearParabolicCoeffs co{a, 0.0, Coef(-1.0 / 0.5)};
        try {
            linear_parabolic_step(Field(g.n, 1.0), co, g, 0.5, 1.0, 1.0);
            FAIL("expected SolverError");
        } catch (const SolverError& e) {
            const std::string m = e.what();
            CHECK(m.find("dt=") != std::string::npos);
            CHECK(m.find("min diffusion=") != std::string::npos);
        }
    }
}

TEST_CASE("linear step: discrete mass balance and energy estimate")
{
    const Grid g = make_grid(2.0, 201);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(0.5, 2.0), V(-1.0, 1.0);
    double worst_C = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        Field a(g.n), u(g.n), b(g.n);
        for (std::size_t i = 0; i < g.n; ++i) {
            a[i] = U(rng);
            b[i] = 0.3 * std::sin(3.0 * g.x[i] + trial);
        }
        for (std::size_t i = 1; i + 1 < g.n; ++i) u[i] = V(rng);
        u[0] = u[g.n - 1] = 0.0;
        const double dt = 1e-3;
        // pure diffusion: mass change equals the boundary flux
        LinearParabolicCoeffs co{a};
        const Field out = linear_parabolic_step(u, co, g, dt, 0.0, 0.0);
        double mass_in = 0.0, mass_out = 0.0;
        for (std::size_t i = 1; i + 1 < g.n; ++i) {
            mass_in += u[i];
            mass_out += out[i];
        }
        const double am0 = 2.0 * a[0] * a[1] / (a[0] + a[1]);
        const double am1 = 2.0 * a[g.n - 2] * a[g.n - 1] / (a[g.n - 2] + a[g.n - 1]);
        const double flux = am0 * (out[1] - out[0]) / g.dx - am1 * (out[g.n - 1] - out[g.n - 2]) / g.dx;
        // sum (out - u) dx = -dt * flux (boundary fluxes leaving)
        CHECK(std::abs((mass_out - mass_in) * g.dx + dt * flux) <= 1e-11 * (1.0 + std::abs(mass_in)));

        // with drift: ||u^{n+1}||^2 <= (1 + C dt) ||u^n||^2
        LinearParabolicCoeffs cd{a, Coef(b)};
        const Field o2 = linear_parabolic_step(u, cd, g, dt, 0.0, 0.0);
        const double r = sq_norm(o2, g.dx) / sq_norm(u, g.dx);
        worst_C = std::max(worst_C, (r - 1.0) / dt);
    }
    MESSAGE("energy estimate constant " << worst_C);
    CHECK(worst_C <= 2.0);
}

TEST_CASE("step_v examples")
{
    const Grid g = make_grid(20.0, 1025);
    const Profiles pr = traveling_wave(P, g);
    const RegularizedLog reg = RegularizedLog::make(4.0);
    const Field zero(g.n, 0.0);

    SUBCASE("wave is preserved at discretization level")
    {
        Field v = pr.v_bar;
        for (int k = 0; k < 50; ++k) v = step_v(v, P.s, zero, g, 1e-2, reg, P);
        double err = 0.0;
        for (std::size_t i = 0; i < g.n; ++i) err = std::max(err, std::abs(v[i] - pr.v_bar[i]));
        CHECK(err <= 10.0 * g.dx * g.dx);
    }
    SUBCASE("v = 1 with zero speed is a fixed point")
    {
        const Field out = step_v(Field(g.n, 1.0), 0.0, zero, g, 1e-2, reg, P);
        for (double x : out) CHECK(x == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("small perturbation relaxes toward the wave")
    {
        Field v = pr.v_bar;
        for (std::size_t i = 0; i < g.n; ++i) v[i] += 1e-2 * std::exp(-(g.x[i] - 5.0) * (g.x[i] - 5.0)) * (1.0 - std::exp(-std::pow(g.x[i], 4)));
        double d0 = 0.0, d1 = 0.0;
        for (std::size_t i = 0; i < g.n; ++i) d0 += std::pow(v[i] - pr.v_bar[i], 2);
        for (int k = 0; k < 20; ++k) v = step_v(v, P.s, zero, g, 1e-2, reg, P);
        for (std::size_t i = 0; i < g.n; ++i) d1 += std::pow(v[i] - pr.v_bar[i], 2);
        CHECK(d1 < d0);
        for (std::size_t i = 1; i < g.n; ++i) CHECK(v[i] > 1.0);
    }
    SUBCASE("Newton failure and maximum principle violation are reported")
    {
        NewtonOptions tight;
        tight.max_iter = 0;
        Field v = pr.v_bar;
        v[100] += 0.1;
        CHECK_THROWS_AS(step_v(v, P.s, zero, g, 1e-2, reg, P, tight), NewtonDiverged);
        Field sink(g.n, -50.0);
        CHECK_THROWS_AS(step_v(pr.v_bar, P.s, sink, g, 1e-1, reg, P), MaximumPrincipleViolated);
    }
}

TEST_CASE("step_u examples")
{
    const Grid g = make_grid(20.0, 1025);
    const Profiles pr = traveling_wave(P, g);
    Field u = pr.u_bar;
    for (int k = 0; k < 50; ++k) u = step_u(u, pr.v_bar, P.s, g, 1e-2, P);
    double err = 0.0;
    for (std::size_t i = 0; i < g.n; ++i) err = std::max(err, std::abs(u[i] - pr.u_bar[i]));
    CHECK(err <= 10.0 * g.dx * g.dx);

    const PhysicalParams q = PhysicalParams::make(1.0, 2.0, 0.4, 0.0);
    const Field c = step_u(Field(g.n, 0.4), Field(g.n, 1.7), 0.3, g, 0.05, q);
    for (double x : c) CHECK(x == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("chi_R cutoff")
{
    CHECK(chi_R(10.0, 20.0) == 1.0);
    CHECK(chi_R(18.0, 20.0) == 1.0);
    CHECK(chi_R(19.0, 20.0) == 0.0);
    CHECK(chi_R(18.5, 20.0) == doctest::Approx(0.5));
    for (double x = 17.9; x <= 19.1; x += 0.01) {
        CHECK(chi_R(x, 20.0) >= 0.0);
        CHECK(chi_R(x, 20.0) <= 1.0);
        CHECK(chi_R(x + 0.01, 20.0) <= chi_R(x, 20.0) + 1e-15);
    }
    const double h = 1e-6;
    CHECK(std::abs(chi_R(18.0 + h, 20.0) - 1.0) <= 1e-15);
    CHECK(std::abs(chi_R(19.0 - h, 20.0)) <= 1e-15);
}
