#pragma once

#include <cmath>
#include <span>
#include <utility>
#include <vector>

namespace henon {

struct QuadratureRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n);

/// The fixed 5-point rule used for the per-cell composite integrals.
const QuadratureRule& gauss_legendre_5();
/// 8-point rule used for element matrices.
const QuadratureRule& gauss_legendre_8();

template <class F>
double gauss_legendre_integrate(double a, double b, F&& f, const QuadratureRule& rule)
{
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

template <class F>
double gauss_legendre_integrate(double a, double b, F&& f)
{
    return gauss_legendre_integrate(a, b, std::forward<F>(f), gauss_legendre_5());
}

/// Integral of x^k g(x) over [0, b], k > -1, with the power weight absorbed
/// by the substitution x = b s^{1/(k+1)}.
template <class G>
double power_weighted_from_zero(double b, double k, G&& g)
{
    const double scale = std::pow(b, k + 1.0) / (k + 1.0);
    const double inv = 1.0 / (k + 1.0);
    return scale * gauss_legendre_integrate(0.0, 1.0, [&](double s) {
        return g(b * std::pow(s, inv));
    });
}

/// Composite rule for  int_lo^hi x^k g(x) dx  over the cells of `grid`:
/// 5-point Gauss-Legendre per (clipped) cell, and the substitution above on a
/// cell that starts at 0.
template <class G>
double composite_power_integral(std::span<const double> grid, double lo, double hi, double k,
                                G&& g)
{
    double total = 0.0;
    for (std::size_t c = 0; c + 1 < grid.size(); ++c) {
        const double a = std::max(grid[c], lo);
        const double b = std::min(grid[c + 1], hi);
        if (!(b > a))
            continue;
        if (a == 0.0) {
            total += power_weighted_from_zero(b, k, g);
        } else {
            total += gauss_legendre_integrate(a, b, [&](double x) { return std::pow(x, k) * g(x); });
        }
    }
    return total;
}

/// int_a^b x^k dx, evaluated without cancellation for b close to a.
double power_integral(double a, double b, double k);

} // namespace henon
