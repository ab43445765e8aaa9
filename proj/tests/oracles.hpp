#pragma once

#include <array>
#include <cmath>
#include <vector>

// Test-side reference computations, independent of the library.
namespace oracle {

/// Zeros of the unit solution of y'' + ((M-1)/x) y' + |y|^{p-1} y = 0 by
/// fixed-step classical RK4 with step h, located by cubic Hermite
/// interpolation of each bracketing step.
inline std::vector<double> rk4_unit_zeros(double M, double p, int count, double h = 1e-5)
{
    using S = std::array<double, 2>;
    auto f = [&](double x, const S& y) {
        return S{y[1], -(M - 1.0) / x * y[1] - std::pow(std::abs(y[0]), p - 1.0) * y[0]};
    };
    double x = 1e-4;
    S y{1.0 - x * x / (2.0 * M), -x / M};
    std::vector<double> zeros;
    while (static_cast<int>(zeros.size()) < count && x < 200.0) {
        const S k1 = f(x, y);
        const S k2 = f(x + h / 2, {y[0] + h / 2 * k1[0], y[1] + h / 2 * k1[1]});
        const S k3 = f(x + h / 2, {y[0] + h / 2 * k2[0], y[1] + h / 2 * k2[1]});
        const S k4 = f(x + h, {y[0] + h * k3[0], y[1] + h * k3[1]});
        const S yn{y[0] + h / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
                   y[1] + h / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])};
        if ((y[0] > 0) != (yn[0] > 0)) {
            // cubic Hermite on [x, x+h], Newton for the root
            double s = y[0] / (y[0] - yn[0]);
            for (int it = 0; it < 30; ++it) {
                const double h00 = 2 * s * s * s - 3 * s * s + 1, h10 = s * s * s - 2 * s * s + s;
                const double h01 = -2 * s * s * s + 3 * s * s, h11 = s * s * s - s * s;
                const double val = h00 * y[0] + h10 * h * y[1] + h01 * yn[0] + h11 * h * yn[1];
                const double d00 = 6 * s * s - 6 * s, d10 = 3 * s * s - 4 * s + 1;
                const double d01 = -6 * s * s + 6 * s, d11 = 3 * s * s - 2 * s;
                const double der = d00 * y[0] + d10 * h * y[1] + d01 * yn[0] + d11 * h * yn[1];
                s -= val / der;
            }
            zeros.push_back(x + s * h);
        }
        y = yn;
        x += h;
    }
    return zeros;
}

} // namespace oracle
