#include "pcns/core.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>

using namespace pcns;

TEST_CASE("derive_speed examples")
{
    CHECK(derive_speed(1.0, 0.0, 2.0) == 1.0);
    CHECK(derive_speed(2.0, 0.0, 2.0) == 2.0);
    try {
        derive_speed(1.0, 1.0, 2.0);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()) == "u_minus must exceed u_plus");
    }
    CHECK_THROWS_AS(derive_speed(1.0, 0.0, 1.0), ValidationError);
    CHECK_THROWS_WITH(derive_speed(1.0, 0.0, 0.5), "v_plus must exceed 1");
}

TEST_CASE("PhysicalParams derived constants")
{
    const auto p = PhysicalParams::make(0.7, 3.5, 1.3, -0.4);
    CHECK(p.s == doctest::Approx(1.7 / 2.5).epsilon(1e-15));
    CHECK(std::abs(p.p_minus - p.s * p.s * 2.5) <= 4 * std::numeric_limits<double>::epsilon() * p.p_minus);
    CHECK_THROWS_AS(PhysicalParams::make(0.0, 2.0, 1.0, 0.0), ValidationError);
    CHECK_THROWS_AS(PhysicalParams::make(1.0, 2.0, 0.0, 1.0), ValidationError);
}

TEST_CASE("make_grid examples")
{
    CHECK_THROWS_AS(make_grid(1.0, 2), ValidationError);
    const Grid g = make_grid(1.0, 17);
    CHECK(g.dx == 1.0 / 16.0);
    const Grid h = make_grid(50.0, 2049);
    CHECK(h.x[1024] == 25.0);
    CHECK(h.x.front() == 0.0);
    CHECK(h.x.back() == 50.0);
    CHECK(h.dx == 50.0 / 2048.0);
    for (std::size_t i = 1; i < h.n; ++i) {
        CHECK(h.x[i] > h.x[i - 1]);
        const double exact = static_cast<double>(i) * 50.0 / 2048.0;
        CHECK(std::abs(h.x[i] - exact) <= 2 * std::numeric_limits<double>::epsilon() * exact);
    }
    CHECK_THROWS_AS(make_grid(0.0, 100), ValidationError);
    CHECK_THROWS_AS(make_grid(1.0, 15), ValidationError);
}

TEST_CASE("check_field rejects mismatched or non-finite fields")
{
    const Grid g = make_grid(1.0, 17);
    CHECK_NOTHROW(check_field(Field(17, 1.0), g, "f"));
    CHECK_THROWS_AS(check_field(Field(16, 1.0), g, "f"), ValidationError);
    Field bad(17, 0.0);
    bad[3] = std::nan("");
    CHECK_THROWS_AS(check_field(bad, g, "f"), ValidationError);
}

TEST_CASE("error context is prepended and type is kept")
{
    try {
        try {
            throw NewtonDiverged("residual 1");
        } catch (Error& e) {
            e.add_context("t=0.5");
            throw;
        }
    } catch (const NewtonDiverged& e) {
        CHECK(std::string(e.what()) == "t=0.5: residual 1");
        CHECK(std::string(e.kind()) == "NewtonDiverged");
    }
}
