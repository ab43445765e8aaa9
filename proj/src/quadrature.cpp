#include "henon/quadrature.hpp"

#include <numbers>

#include "henon/errors.hpp"

namespace henon {

QuadratureRule gauss_legendre(int n)
{
    if (n < 1)
        throw InvalidArgs("Gauss-Legendre rule needs n >= 1");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            if (n == 1) {
                p1 = x;
                p0 = 1.0;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = pk;
        }
        dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1)
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    return rule;
}

const QuadratureRule& gauss_legendre_5()
{
    static const QuadratureRule rule = gauss_legendre(5);
    return rule;
}

const QuadratureRule& gauss_legendre_8()
{
    static const QuadratureRule rule = gauss_legendre(8);
    return rule;
}

double power_integral(double a, double b, double k)
{
    if (a == b)
        return 0.0;
    if (a == 0.0)
        return std::pow(b, k + 1.0) / (k + 1.0);
    // b^{k+1} - a^{k+1} = a^{k+1} expm1((k+1) log1p((b-a)/a))
    const double q = k + 1.0;
    const double lr = std::log1p((b - a) / a);
    if (q == 0.0)
        return lr;
    return std::pow(a, q) * std::expm1(q * lr) / q;
}

} // namespace henon
