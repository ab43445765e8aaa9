#pragma once

#include <vector>

#include "henon/profile.hpp"

namespace henon {

/// Surface area of the unit sphere S^{N-1}, 2 pi^{N/2} / Gamma(N/2).
double sphere_area(int N);

struct PieceEnergy {
    double lo;
    double hi;
    double dirichlet;
    double weighted_Lp;
    double phi;
};

/// Full N-dimensional energies of an r-variable profile (sphere area included).
struct EnergyBreakdown {
    double dirichlet;    // int |grad u|^2
    double weighted_Lp;  // int |x|^alpha |u|^{p+1}
    double phi;          // 1/2 dirichlet - weighted_Lp/(p+1)
    double level;        // C_{alpha,m} = phi(u_alpha)
    std::vector<PieceEnergy> per_nodal;

    double nehari_residual() const;
};

EnergyBreakdown energy_breakdown(const RadialProfile& u);

/// Restriction of an r-variable profile to [lo, hi], multiplied by `scale`.
struct NodalPiece {
    const RadialProfile& profile;
    double lo;
    double hi;
    double scale = 1.0;
};

/// The scalar t > 0 with t * u_i on the Nehari set:
/// t = (int |grad u_i|^2 / int |x|^alpha |u_i|^{p+1})^{1/(p-1)}.
double nehari_projection(const NodalPiece& piece, double alpha, double p);
double nehari_projection(double dirichlet, double weighted_Lp, double p);

/// phi(t u_i) at the Nehari projection.
double projected_energy(const NodalPiece& piece, double alpha, double p);

/// S^R_{alpha,p} = (int |grad u_pos|^2)^{(p-1)/(p+1)} from the positive solution.
double best_constant_radial(const ProblemParams& params, const RadialProfile& u_pos);

/// The same constant via the Rayleigh quotient int|grad u|^2 / (int |x|^alpha |u|^{p+1})^{2/(p+1)}.
double rayleigh_quotient_radial(const RadialProfile& u);

/// S_p = (2 pi int_0^1 |w'|^2 t dt)^{(p-1)/(p+1)} from the positive Lane-Emden profile.
double best_constant_2d(double p, const RadialProfile& w_pos);

/// (2/(alpha+2))^{(p+3)/(p+1)} S^R_{alpha,p}
double scaled_best_constant(double alpha, double p, double S_R);

/// (omega_{N-1} / 2 pi)^{(p-1)/(p+1)} S_p, the alpha -> infinity limit of the scaled constant.
double best_constant_limit(double p, int N, double S_p);

} // namespace henon
