#include "doctest.h"

#include <cmath>

#include "henon/errors.hpp"
#include "henon/radial_solver.hpp"
#include "henon/transforms.hpp"

using namespace henon;

TEST_CASE("rescale map constants")
{
    const RescaleMap map = make_rescale_map(10.0, 3.0);
    CHECK(map.factor == doctest::Approx(1.0 / 6.0));
    CHECK(map.exponent == doctest::Approx(6.0));
    const RescaleMap m5 = make_rescale_map(2.0, 5.0);
    CHECK(m5.factor == doctest::Approx(std::sqrt(0.5)));
    CHECK(m5.exponent == doctest::Approx(2.0));
}

TEST_CASE("u and v are related pointwise by the change of variables")
{
    const SolverConfig cfg;
    const ProblemParams params{3.0, 3, 6.0, 2};
    const RescaleMap map = make_rescale_map(params.alpha, params.p);
    const RadialProfile v = solve_henon_transformed(params, cfg);
    const RadialProfile u = rescale_v_to_u(v, map, params.N);
    for (double r : {0.05, 0.3, 0.71, 0.9, 0.999}) {
        const double t = std::pow(r, map.exponent);
        const auto su = u.evaluate(r);
        const auto sv = v.evaluate(t);
        CHECK(map.factor * su.value == doctest::Approx(sv.value).epsilon(1e-9));
        // v'(t) dt/dr = factor u'(r)
        CHECK(map.factor * su.deriv
              == doctest::Approx(sv.deriv * map.exponent * std::pow(r, map.exponent - 1.0)).epsilon(1e-8));
    }
}

TEST_CASE("round trip v -> u -> v")
{
    const SolverConfig cfg;
    for (double alpha : {0.5, 4.0, 30.0}) {
        const ProblemParams params{3.0, 3, alpha, 2};
        const RescaleMap map = make_rescale_map(alpha, 3.0);
        const RadialProfile v = solve_henon_transformed(params, cfg);
        const RadialProfile back = rescale_u_to_v(rescale_v_to_u(v, map, 3), map);
        CHECK(sup_distance(v, back) < 1e-9 * v.amplitude());
        CHECK(back.equation().dim == doctest::Approx(params.M_alpha()));
    }
}

TEST_CASE("variable tags are enforced")
{
    const SolverConfig cfg;
    const ProblemParams params{3.0, 3, 4.0, 1};
    const RescaleMap map = make_rescale_map(4.0, 3.0);
    const RadialProfile v = solve_henon_transformed(params, cfg);
    const RadialProfile u = rescale_v_to_u(v, map, 3);
    CHECK_THROWS_AS(rescale_u_to_v(v, map), VariableMismatch);
    CHECK_THROWS_AS(rescale_v_to_u(u, map, 3), VariableMismatch);
    CHECK_THROWS_AS(rescale_v_to_u(v, map, 4), InvalidArgs);  // M_alpha differs for N = 4
}

TEST_CASE("zero map")
{
    const std::vector<double> r = {0.5, 0.9, 1.0};
    const auto t = map_zeros(r, 2.0);
    CHECK(t[0] == doctest::Approx(0.25));
    CHECK(t[1] == doctest::Approx(0.81));
    CHECK(t[2] == 1.0);
    CHECK_THROWS_AS(map_zeros(std::vector<double>{0.0}, 2.0), DomainError);
    CHECK_THROWS_AS(map_zeros(std::vector<double>{1.2}, 2.0), DomainError);

    const SolverConfig cfg;
    const ProblemParams params{3.0, 3, 12.0, 3};
    const RadialProfile u = solve_henon_radial(params, cfg);
    const RadialProfile v = solve_henon_transformed(params, cfg);
    const auto mapped = map_zeros(u.zeros(), 12.0);
    for (std::size_t i = 0; i < mapped.size(); ++i)
        CHECK(mapped[i] == doctest::Approx(v.zeros()[i]).epsilon(1e-12));
}

TEST_CASE("scaled extrema are the extrema of v")
{
    const SolverConfig cfg;
    const ProblemParams params{3.0, 3, 25.0, 3};
    const RescaleMap map = make_rescale_map(25.0, 3.0);
    const RadialProfile v = solve_henon_transformed(params, cfg);
    const auto scaled = scaled_extrema(rescale_v_to_u(v, map, 3), map);
    REQUIRE(scaled.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(scaled[i] == doctest::Approx(std::abs(v.extrema_vals()[i])).epsilon(1e-12));
    CHECK(scaled[0] > scaled[1]);
    CHECK(scaled[1] > scaled[2]);
}

TEST_CASE("gradient identity holds for solved pairs")
{
    const SolverConfig cfg;
    for (double alpha : {0.5, 3.0, 20.0, 150.0}) {
        for (int m : {1, 2}) {
            const ProblemParams params{3.0, 3, alpha, m};
            const RescaleMap map = make_rescale_map(alpha, 3.0);
            const RadialProfile v = solve_henon_transformed(params, cfg);
            const RadialProfile u = rescale_v_to_u(v, map, 3);
            CHECK(gradient_identity_residual(u, v, map) < 1e-8);
        }
    }
}

TEST_CASE("r-variable profile solves the Henon ODE")
{
    const SolverConfig cfg;
    const RadialProfile u = solve_henon_radial({3.0, 3, 2.0, 2}, cfg);
    CHECK(ode_residual(u, 1e-3, true) < 1e-6 * u.amplitude());
}
