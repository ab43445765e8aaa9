#pragma once

#include <optional>

#include "henon/ode.hpp"
#include "henon/params.hpp"
#include "henon/profile.hpp"

namespace henon {

/// Unit-amplitude trajectory of  -V'' - ((M-1)/t) V' = |V|^{p-1} V, V(0) = 1,
/// integrated up to its zero_target-th zero.
IvpResult integrate_unit_ivp(double M, double p, int zero_target, const SolverConfig& config);

/// The m-nodal solution of the transformed problem on [0, 1] with v(1) = 0
/// and v(0) > 0, built from the unit trajectory by the scaling
/// v(t) = T_m^{2/(p-1)} V(T_m t).
RadialProfile solve_transformed(double M, double p, int m, const SolverConfig& config,
                                std::optional<ProblemParams> params = std::nullopt);

/// Two-dimensional Lane-Emden profile w (the transformed problem at M = 2).
RadialProfile solve_lane_emden(double p, int m, const SolverConfig& config);

/// v_alpha: the transformed profile at M = M_alpha, tagged with params.
RadialProfile solve_henon_transformed(const ProblemParams& params, const SolverConfig& config);

/// u_alpha integrated directly in r from  u'' + ((N-1)/r) u' + r^alpha |u|^{p-1} u = 0
/// and rescaled so that its m-th zero sits at r = 1.
RadialProfile solve_henon_direct(const ProblemParams& params, const SolverConfig& config);

/// Largest alpha for which solve_henon_radial also runs the direct route.
inline constexpr double kDirectCrossCheckMaxAlpha = 5.0;
/// Sup-norm agreement required between the two routes.
inline constexpr double kCrossCheckTolerance = 1e-5;

/// u_alpha in the r-variable, obtained from v_alpha by the inverse rescaling.
/// For alpha <= 5 the direct route is run as well; disagreement above 1e-5
/// throws CrossCheckMismatch.
RadialProfile solve_henon_radial(const ProblemParams& params, const SolverConfig& config);

} // namespace henon
