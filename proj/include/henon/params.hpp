#pragma once

#include <optional>

namespace henon {

/// M_alpha = 2(alpha+N)/(alpha+2), the effective dimension of the
/// t-variable equation.
double alpha_to_M(double alpha, int N);

/// alpha_p = max{0, (p(N-2)-(N+2))/2}; solutions exist only for alpha > alpha_p.
double critical_alpha(double p, int N);

/// True when p(M-2) < M+2, i.e. p+1 is below the critical exponent in dimension M.
bool is_subcritical_M(double M, double p);

/// The quadruple (p, N, alpha, m) that identifies one radial Henon problem.
struct ProblemParams {
    double p = 3.0;
    int N = 3;
    double alpha = 1.0;
    int m = 1;

    double M_alpha() const { return alpha_to_M(alpha, N); }
    double alpha_p() const { return critical_alpha(p, N); }

    /// Throws Subcritical / InvalidArgs when the quadruple admits no solve.
    void validate() const;
};

/// Integrator and output-grid settings shared by every radial solve.
struct SolverConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    double t_seed = 1e-6;
    // Integration horizon for the m-th zero; unset means 10*m.
    std::optional<double> max_horizon;
    int dense_nodes = 2001;
    double grading_ratio = 1.05;

    void validate() const;
};

} // namespace henon
