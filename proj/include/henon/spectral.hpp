#pragma once

#include <functional>
#include <vector>

#include "henon/mesh.hpp"
#include "henon/params.hpp"
#include "henon/profile.hpp"

namespace henon {

/// Piecewise-linear discretization of
///   -(t^{M-1} psi')' - V(t) t^{M-1} psi = lambda t^{M-3} psi   on (t_min, 1),
/// psi(1) = 0, natural condition at t_min. Both matrices are symmetric
/// tridiagonal over the n-1 free nodes; B is positive definite.
struct EigenPencil {
    std::vector<double> a_diag, a_off;
    std::vector<double> b_diag, b_off;
    std::vector<double> nodes;  // full mesh including the pinned node t = 1
    double M = 2.0;
    double potential_sup = 0.0;

    std::size_t dof() const { return a_diag.size(); }

    /// Number of eigenvalues strictly below sigma (inertia of A - sigma B).
    std::size_t count_below(double sigma) const;
    /// Rayleigh quotient x^T A x / x^T B x of a free-node vector.
    double rayleigh_quotient(const std::vector<double>& x) const;
};

/// Closed-form hat-function moments of t^k over one cell [a, b]:
/// {int phi_a^2 t^k, int phi_a phi_b t^k, int phi_b^2 t^k}.
struct HatMoments {
    double left;
    double cross;
    double right;
};
HatMoments hat_moments(double a, double b, double k);

EigenPencil assemble_pencil(const std::function<double(double)>& potential, double M,
                            const GradedMesh& mesh);

/// Potential p |v|^{p-1} from a t-variable profile, sampled at cell midpoints.
/// Throws MeshTooCoarse when a nodal set holds fewer than 8 cells.
EigenPencil assemble_pencil(const RadialProfile& profile, double M, double p,
                            const GradedMesh& mesh);

struct EigenResult {
    std::vector<double> eigenvalues;                 // sorted, all < 0
    std::vector<std::vector<double>> eigenfunctions; // on pencil.nodes, psi(1) = 0
    std::vector<double> nodes;
    double M = 2.0;
    std::size_t dof = 0;
    int requested = 0;
    bool complete = true;  // false when fewer than `requested` negatives exist
};

/// The `count` smallest negative eigenvalues by Sturm-count bisection with
/// inverse-iteration eigenvectors normalized to int psi^2 t^{M-3} = 1 and
/// positive next to t = 1.
EigenResult negative_eigenvalues(const EigenPencil& pencil, int count);

/// Interior sign changes of a sampled function, ignoring exact zeros.
int sign_changes(const std::vector<double>& samples);

struct SingularSpectrum {
    std::vector<double> Lambda_hat;    // ((alpha+2)/2)^2 lambda_small
    std::vector<double> lambda_small;  // eigenvalues of the t-variable problem at M_alpha
    double alpha = 0.0;
    EigenResult eigen;
};

SingularSpectrum singular_spectrum_henon(const ProblemParams& params,
                                         const RadialProfile& profile_t, const GradedMesh& mesh);

struct MuCurve {
    std::vector<double> M_values;
    std::vector<std::vector<double>> mu;  // mu[row][i]
    std::vector<double> lambda;           // mu_i(2)
    std::vector<double> mu_prime_2;       // one-sided difference at M = 2
    std::vector<double> c;                // (N-2) mu_i'(2)/2 + lambda_i
    double h = 1e-3;
};

/// mu_i(M) for every requested M, plus mu_i'(2) from M in {2, 2+h, 2+2h}
/// and the linear coefficients c_i.
MuCurve eigenvalue_curve_mu(double p, int m, int N, const std::vector<double>& M_values,
                            const GradedMesh& mesh, const SolverConfig& config,
                            double h = 1e-3);

/// The m negative eigenvalues of the transformed problem at a given M.
std::vector<double> mu_at(double M, double p, int m, const GradedMesh& mesh,
                          const SolverConfig& config);

} // namespace henon
