#pragma once

#include <array>
#include <vector>

#include "henon/params.hpp"

namespace henon {

using State = std::array<double, 2>;

/// Radial semilinear equation  y'' + ((d-1)/x) y' + x^a |y|^{p-1} y = 0.
/// The t-variable problem is (d, a) = (M, 0); the Henon profile in the
/// r-variable is (d, a) = (N, alpha).
struct RadialEquation {
    double dim = 2.0;
    double weight = 0.0;
    double p = 3.0;

    State rhs(double x, const State& y) const;
    /// Second derivative implied by the equation at (x, y, y'); the x -> 0 limit is used at 0.
    double curvature(double x, double y, double dy) const;
    /// Series start of the unit-amplitude solution, y(0) = 1, y'(0) = 0.
    State unit_seed(double x) const;
    /// Exponent k with y_c(x) = c^k y(c x) solving the same equation.
    double scaling_exponent() const { return (2.0 + weight) / (p - 1.0); }
};

/// Accepted-step record of an embedded Runge-Kutta 5(4) integration.
/// Values between steps are produced by a partial step from the
/// preceding accepted point, which keeps the fifth-order accuracy.
class Trajectory {
public:
    Trajectory() = default;
    Trajectory(RadialEquation eq, std::vector<double> x, std::vector<State> y);

    State evaluate(double x) const;
    double start() const { return x_.front(); }
    double end() const { return x_.back(); }
    std::size_t steps() const { return x_.size() - 1; }
    const RadialEquation& equation() const { return eq_; }
    const std::vector<double>& step_points() const { return x_; }
    const std::vector<State>& step_values() const { return y_; }

private:
    RadialEquation eq_;
    std::vector<double> x_;
    std::vector<State> y_;
};

struct IvpResult {
    Trajectory trajectory;
    std::vector<double> zeros;            // first zero_target sign changes of y
    std::vector<double> critical_points;  // interior zeros of y' before the last zero
    std::size_t rejected_steps = 0;
};

/// One Dormand-Prince step; returns the fifth-order solution and writes
/// the embedded error estimate.
State dormand_prince_step(const RadialEquation& eq, double x, const State& y, double h,
                          State* error = nullptr);

/// Integrates the unit-amplitude IVP from config.t_seed until the
/// zero_target-th zero of y, with sign-change events localized by bisection.
/// Throws HorizonExceeded when the zero is missing after two horizon doublings.
IvpResult integrate_radial_ivp(const RadialEquation& eq, int zero_target,
                               const SolverConfig& config);

} // namespace henon
