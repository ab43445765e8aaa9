#pragma once

#include <optional>
#include <vector>

#include "henon/ode.hpp"
#include "henon/params.hpp"

namespace henon {

enum class Variable { r_variable, t_variable };

const char* to_string(Variable v);

struct ProfileSample {
    double value;
    double deriv;
};

/// A solved radial profile on [0, 1], sampled on a sorted grid that starts
/// at 0 and ends at 1. Between samples the profile is the quintic Hermite
/// interpolant of (value, derivative, curvature), where the curvature comes
/// from the profile's own radial equation.
class RadialProfile {
public:
    RadialProfile() = default;
    RadialProfile(Variable variable, RadialEquation equation, int m,
                  std::optional<ProblemParams> params, std::vector<double> nodes,
                  std::vector<double> values, std::vector<double> derivs,
                  std::vector<double> zeros, std::vector<double> extrema_locs,
                  std::vector<double> extrema_vals);

    Variable variable() const { return variable_; }
    const RadialEquation& equation() const { return equation_; }
    int nodal_sets() const { return m_; }
    const std::optional<ProblemParams>& params() const { return params_; }

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& derivs() const { return derivs_; }
    const std::vector<double>& curvatures() const { return curv_; }
    /// Zeros in (0, 1]; the last entry is the boundary zero 1.
    const std::vector<double>& zeros() const { return zeros_; }
    /// Location and signed value of the extremum of each nodal set.
    const std::vector<double>& extrema_locs() const { return extrema_locs_; }
    const std::vector<double>& extrema_vals() const { return extrema_vals_; }
    double amplitude() const { return values_.front(); }

    ProfileSample evaluate(double x) const;

    /// Cell index k with nodes[k] <= x <= nodes[k+1].
    std::size_t cell_of(double x) const;

private:
    Variable variable_ = Variable::t_variable;
    RadialEquation equation_;
    int m_ = 1;
    std::optional<ProblemParams> params_;
    std::vector<double> nodes_;
    std::vector<double> values_;
    std::vector<double> derivs_;
    std::vector<double> curv_;
    std::vector<double> zeros_;
    std::vector<double> extrema_locs_;
    std::vector<double> extrema_vals_;
};

/// Sorted grid on [0, 1] with n points: node 0, then a sequence that is
/// geometric with the given ratio near 0 and uniform near 1. Nodes are
/// equispaced in s = t + c log t, with c chosen from the ratio.
std::vector<double> graded_unit_grid(int n, double ratio, double first_positive);

/// Sup over samples of |a - b| after evaluating both on the union of their nodes.
double sup_distance(const RadialProfile& a, const RadialProfile& b);
/// Same for the derivatives.
double sup_distance_deriv(const RadialProfile& a, const RadialProfile& b);

/// Cell-averaged residual of  -(x^{d-1} y')' - x^{d-1+a} |y|^{p-1} y  over
/// [lo, 1]; with `divide_weight` the averages are divided by x^{d-1} so the
/// result is the residual of the non-divergence form.
double ode_residual(const RadialProfile& profile, double lo, bool divide_weight = false);

} // namespace henon
