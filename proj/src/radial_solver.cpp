#include "henon/radial_solver.hpp"

#include <cmath>
#include <string>

#include "henon/errors.hpp"
#include "henon/transforms.hpp"

namespace henon {

namespace {

RadialProfile profile_from_ivp(const IvpResult& ivp, Variable variable, int m,
                               std::optional<ProblemParams> params, const SolverConfig& config)
{
    const auto& eq = ivp.trajectory.equation();
    const double T = ivp.zeros[static_cast<std::size_t>(m - 1)];
    const double k = eq.scaling_exponent();
    const double amp = std::pow(T, k);
    const double amp_d = amp * T;

    if (static_cast<int>(ivp.critical_points.size()) != m - 1) {
        throw NotConverged("expected " + std::to_string(m - 1)
                           + " interior extrema, found "
                           + std::to_string(ivp.critical_points.size()));
    }

    std::vector<double> nodes =
        graded_unit_grid(config.dense_nodes, config.grading_ratio, config.t_seed);
    std::vector<double> values(nodes.size());
    std::vector<double> derivs(nodes.size());
    values[0] = amp;
    derivs[0] = 0.0;
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const State y = ivp.trajectory.evaluate(T * nodes[i]);
        values[i] = amp * y[0];
        derivs[i] = amp_d * y[1];
    }

    std::vector<double> zeros;
    for (int i = 0; i < m - 1; ++i)
        zeros.push_back(ivp.zeros[static_cast<std::size_t>(i)] / T);
    zeros.push_back(1.0);

    std::vector<double> ext_locs{0.0};
    std::vector<double> ext_vals{amp};
    for (double c : ivp.critical_points) {
        ext_locs.push_back(c / T);
        ext_vals.push_back(amp * ivp.trajectory.evaluate(c)[0]);
    }
    return RadialProfile(variable, eq, m, params, std::move(nodes), std::move(values),
                         std::move(derivs), std::move(zeros), std::move(ext_locs),
                         std::move(ext_vals));
}

} // namespace

IvpResult integrate_unit_ivp(double M, double p, int zero_target, const SolverConfig& config)
{
    if (!(p > 1.0))
        throw InvalidArgs("exponent p must exceed 1");
    if (!(M >= 2.0))
        throw InvalidArgs("dimension M must be >= 2, got " + std::to_string(M));
    if (!is_subcritical_M(M, p))
        throw Subcritical("p(M-2) < M+2 violated for M = " + std::to_string(M)
                          + ", p = " + std::to_string(p));
    return integrate_radial_ivp(RadialEquation{M, 0.0, p}, zero_target, config);
}

RadialProfile solve_transformed(double M, double p, int m, const SolverConfig& config,
                                std::optional<ProblemParams> params)
{
    const IvpResult ivp = integrate_unit_ivp(M, p, m, config);
    return profile_from_ivp(ivp, Variable::t_variable, m, params, config);
}

RadialProfile solve_lane_emden(double p, int m, const SolverConfig& config)
{
    return solve_transformed(2.0, p, m, config);
}

RadialProfile solve_henon_transformed(const ProblemParams& params, const SolverConfig& config)
{
    params.validate();
    return solve_transformed(params.M_alpha(), params.p, params.m, config, params);
}

RadialProfile solve_henon_direct(const ProblemParams& params, const SolverConfig& config)
{
    params.validate();
    const RadialEquation eq{static_cast<double>(params.N), params.alpha, params.p};
    const IvpResult ivp = integrate_radial_ivp(eq, params.m, config);
    return profile_from_ivp(ivp, Variable::r_variable, params.m, params, config);
}

RadialProfile solve_henon_radial(const ProblemParams& params, const SolverConfig& config)
{
    const RadialProfile v = solve_henon_transformed(params, config);
    const RescaleMap map = make_rescale_map(params.alpha, params.p);
    RadialProfile u = rescale_v_to_u(v, map, params.N);

    if (params.alpha <= kDirectCrossCheckMaxAlpha) {
        const RadialProfile direct = solve_henon_direct(params, config);
        const double gap = sup_distance(u, direct);
        if (!(gap <= kCrossCheckTolerance)) {
            throw CrossCheckMismatch("direct and transformed routes differ by "
                                     + std::to_string(gap) + " in sup norm");
        }
    }
    return u;
}

} // namespace henon
