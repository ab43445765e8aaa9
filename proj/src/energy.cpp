#include "henon/energy.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "henon/errors.hpp"
#include "henon/quadrature.hpp"

namespace henon {

namespace {

constexpr double pi = std::numbers::pi;

struct PieceIntegrals {
    double dirichlet;
    double weighted;
};

PieceIntegrals radial_integrals(const RadialProfile& u, double lo, double hi, double scale)
{
    if (u.variable() != Variable::r_variable)
        throw VariableMismatch("energies are defined for r-variable profiles");
    const auto& eq = u.equation();
    const int N = static_cast<int>(std::lround(eq.dim));
    const double omega = sphere_area(N);
    const double dir = composite_power_integral(u.nodes(), lo, hi, eq.dim - 1.0, [&](double r) {
        const double d = scale * u.evaluate(r).deriv;
        return d * d;
    });
    const double wlp =
        composite_power_integral(u.nodes(), lo, hi, eq.weight + eq.dim - 1.0, [&](double r) {
            return std::pow(std::abs(scale * u.evaluate(r).value), eq.p + 1.0);
        });
    return {omega * dir, omega * wlp};
}

} // namespace

double sphere_area(int N)
{
    static constexpr std::array<double, 11> table{
        0.0,
        2.0,                     // N = 1: two points
        2.0 * pi,                // S^1
        4.0 * pi,                // S^2
        2.0 * pi * pi,           // S^3
        8.0 * pi * pi / 3.0,     // S^4
        pi * pi * pi,            // S^5
        16.0 * pi * pi * pi / 15.0,
        pi * pi * pi * pi / 3.0,
        32.0 * pi * pi * pi * pi / 105.0,
        pi * pi * pi * pi * pi / 12.0,
    };
    if (N < 1)
        throw InvalidArgs("sphere_area needs N >= 1");
    if (N < static_cast<int>(table.size()))
        return table[static_cast<std::size_t>(N)];
    return 2.0 * std::pow(pi, N / 2.0) / std::tgamma(N / 2.0);
}

double EnergyBreakdown::nehari_residual() const
{
    return std::abs(dirichlet - weighted_Lp) / std::abs(dirichlet);
}

EnergyBreakdown energy_breakdown(const RadialProfile& u)
{
    const double p = u.equation().p;
    EnergyBreakdown out{};
    double lo = 0.0;
    for (double z : u.zeros()) {
        const PieceIntegrals pi_ = radial_integrals(u, lo, z, 1.0);
        out.per_nodal.push_back(
            {lo, z, pi_.dirichlet, pi_.weighted, 0.5 * pi_.dirichlet - pi_.weighted / (p + 1.0)});
        lo = z;
    }
    const PieceIntegrals all = radial_integrals(u, 0.0, 1.0, 1.0);
    out.dirichlet = all.dirichlet;
    out.weighted_Lp = all.weighted;
    out.phi = 0.5 * all.dirichlet - all.weighted / (p + 1.0);
    out.level = out.phi;
    return out;
}

double nehari_projection(double dirichlet, double weighted_Lp, double p)
{
    if (!(dirichlet > 0.0) || !(weighted_Lp > 0.0))
        throw ZeroPiece("Nehari projection of a vanishing piece");
    return std::pow(dirichlet / weighted_Lp, 1.0 / (p - 1.0));
}

double nehari_projection(const NodalPiece& piece, double alpha, double p)
{
    if (std::abs(piece.profile.equation().weight - alpha) > 1e-12 * (1.0 + alpha))
        throw InvalidArgs("piece profile weight does not match alpha");
    const PieceIntegrals in = radial_integrals(piece.profile, piece.lo, piece.hi, piece.scale);
    return nehari_projection(in.dirichlet, in.weighted, p);
}

double projected_energy(const NodalPiece& piece, double alpha, double p)
{
    const double t = nehari_projection(piece, alpha, p);
    const PieceIntegrals in = radial_integrals(piece.profile, piece.lo, piece.hi, piece.scale);
    return (0.5 - 1.0 / (p + 1.0)) * t * t * in.dirichlet;
}

double best_constant_radial(const ProblemParams& params, const RadialProfile& u_pos)
{
    if (u_pos.nodal_sets() != 1 || u_pos.zeros().size() != 1)
        throw NotPositiveSolution("best constant needs the positive (m = 1) solution");
    if (std::abs(u_pos.equation().weight - params.alpha) > 1e-12 * (1.0 + params.alpha))
        throw InvalidArgs("profile alpha does not match params");
    const PieceIntegrals in = radial_integrals(u_pos, 0.0, 1.0, 1.0);
    return std::pow(in.dirichlet, (params.p - 1.0) / (params.p + 1.0));
}

double rayleigh_quotient_radial(const RadialProfile& u)
{
    const PieceIntegrals in = radial_integrals(u, 0.0, 1.0, 1.0);
    return in.dirichlet / std::pow(in.weighted, 2.0 / (u.equation().p + 1.0));
}

double best_constant_2d(double p, const RadialProfile& w_pos)
{
    if (w_pos.nodal_sets() != 1 || w_pos.zeros().size() != 1)
        throw NotPositiveSolution("S_p needs the positive Lane-Emden solution");
    if (w_pos.variable() != Variable::t_variable)
        throw VariableMismatch("S_p needs a t-variable profile");
    if (w_pos.equation().dim != 2.0)
        throw InvalidArgs("S_p needs the two-dimensional profile (M = 2)");
    const double dir = composite_power_integral(w_pos.nodes(), 0.0, 1.0, 1.0, [&](double t) {
        const double d = w_pos.evaluate(t).deriv;
        return d * d;
    });
    return std::pow(2.0 * pi * dir, (p - 1.0) / (p + 1.0));
}

double scaled_best_constant(double alpha, double p, double S_R)
{
    return std::pow(2.0 / (alpha + 2.0), (p + 3.0) / (p + 1.0)) * S_R;
}

double best_constant_limit(double p, int N, double S_p)
{
    return std::pow(sphere_area(N) / (2.0 * pi), (p - 1.0) / (p + 1.0)) * S_p;
}

} // namespace henon
