#include "henon/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "henon/errors.hpp"

namespace henon {

double alpha_to_M(double alpha, int N)
{
    return 2.0 * (alpha + N) / (alpha + 2.0);
}

double critical_alpha(double p, int N)
{
    return std::max(0.0, (p * (N - 2) - (N + 2)) / 2.0);
}

bool is_subcritical_M(double M, double p)
{
    return p * (M - 2.0) < M + 2.0;
}

void ProblemParams::validate() const
{
    if (!(p > 1.0) || !std::isfinite(p))
        throw InvalidArgs("exponent p must be finite and > 1, got " + std::to_string(p));
    if (N < 2)
        throw InvalidArgs("dimension N must be >= 2, got " + std::to_string(N));
    if (m < 1)
        throw InvalidArgs("nodal-set count m must be >= 1, got " + std::to_string(m));
    if (!std::isfinite(alpha) || alpha < 0.0)
        throw InvalidArgs("alpha must be finite and >= 0, got " + std::to_string(alpha));
    const double ap = alpha_p();
    if (!(alpha > ap))
        throw Subcritical("alpha = " + std::to_string(alpha) + " must exceed alpha_p = "
                          + std::to_string(ap) + " (p < 2*_alpha - 1 violated)");
}

void SolverConfig::validate() const
{
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw InvalidArgs("integrator tolerances must be positive");
    if (!(t_seed > 0.0) || !(t_seed < 1e-2))
        throw InvalidArgs("t_seed must lie in (0, 1e-2)");
    if (max_horizon && !(*max_horizon > 0.0))
        throw InvalidArgs("max_horizon must be positive");
    if (dense_nodes < 64)
        throw InvalidArgs("dense_nodes must be >= 64");
    if (!(grading_ratio > 1.0))
        throw InvalidArgs("grading_ratio must exceed 1");
}

} // namespace henon
