#include "henon/ode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "henon/errors.hpp"

namespace henon {

namespace {

constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0, c5 = 8.0 / 9.0;

constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
// b - b_hat
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

int sign_of(double v)
{
    return (v > 0.0) - (v < 0.0);
}

// Bisection on the partial-step extension over (x0, x0 + h) for a sign
// change of component `comp`, run until the bracket cannot shrink (well below 1e-12).
double locate_sign_change(const RadialEquation& eq, double x0, const State& y0, double h,
                          int comp)
{
    double lo = 0.0;
    double hi = h;
    const int s_lo = sign_of(y0[comp]);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break;
        const State ym = dormand_prince_step(eq, x0, y0, mid);
        if (sign_of(ym[comp]) == s_lo && ym[comp] != 0.0)
            lo = mid;
        else
            hi = mid;
    }
    // Pick the endpoint with the smaller residual.
    const double f_lo = std::abs(lo > 0.0 ? dormand_prince_step(eq, x0, y0, lo)[comp] : y0[comp]);
    const double f_hi = std::abs(dormand_prince_step(eq, x0, y0, hi)[comp]);
    return x0 + (f_lo < f_hi ? lo : hi);
}

} // namespace

State RadialEquation::rhs(double x, const State& y) const
{
    const double nonlin = std::pow(std::abs(y[0]), p - 1.0) * y[0];
    const double w = weight == 0.0 ? 1.0 : std::pow(x, weight);
    return {y[1], -(dim - 1.0) / x * y[1] - w * nonlin};
}

double RadialEquation::curvature(double x, double y, double dy) const
{
    const double nonlin = std::pow(std::abs(y), p - 1.0) * y;
    if (x == 0.0) {
        // y' ~ -x^{a+1} f / (a+d) near 0, so y'' -> -f/d when a = 0 and 0 when a > 0.
        return weight == 0.0 ? -nonlin / dim : 0.0;
    }
    const double w = weight == 0.0 ? 1.0 : std::pow(x, weight);
    return -(dim - 1.0) / x * dy - w * nonlin;
}

State RadialEquation::unit_seed(double x) const
{
    // y = 1 - x^{a+2} / ((a+2)(a+d)) + O(x^{2a+4})
    const double denom = weight + dim;
    const double xa1 = std::pow(x, weight + 1.0);
    return {1.0 - xa1 * x / ((weight + 2.0) * denom), -xa1 / denom};
}

Trajectory::Trajectory(RadialEquation eq, std::vector<double> x, std::vector<State> y)
    : eq_(eq), x_(std::move(x)), y_(std::move(y))
{
}

State Trajectory::evaluate(double x) const
{
    if (x <= x_.front()) {
        // Inside the seed interval the series is accurate to O(x^{2a+4}).
        return eq_.unit_seed(std::max(x, 0.0));
    }
    auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t k = static_cast<std::size_t>(it - x_.begin()) - 1;
    if (k >= x_.size() - 1) {
        k = x_.size() - 2;
    }
    const double h = x - x_[k];
    if (h == 0.0)
        return y_[k];
    return dormand_prince_step(eq_, x_[k], y_[k], h);
}

State dormand_prince_step(const RadialEquation& eq, double x, const State& y, double h,
                          State* error)
{
    auto axpy = [](const State& base, std::initializer_list<std::pair<double, const State*>> terms,
                   double hh) {
        State out = base;
        for (const auto& [c, k] : terms) {
            out[0] += hh * c * (*k)[0];
            out[1] += hh * c * (*k)[1];
        }
        return out;
    };
    const State k1 = eq.rhs(x, y);
    const State k2 = eq.rhs(x + c2 * h, axpy(y, {{a21, &k1}}, h));
    const State k3 = eq.rhs(x + c3 * h, axpy(y, {{a31, &k1}, {a32, &k2}}, h));
    const State k4 = eq.rhs(x + c4 * h, axpy(y, {{a41, &k1}, {a42, &k2}, {a43, &k3}}, h));
    const State k5 =
        eq.rhs(x + c5 * h, axpy(y, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}, h));
    const State k6 = eq.rhs(
        x + h, axpy(y, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}, h));
    const State y5 = axpy(y, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}}, h);
    if (error) {
        const State k7 = eq.rhs(x + h, y5);
        for (int i = 0; i < 2; ++i) {
            (*error)[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i]
                               + e7 * k7[i]);
        }
    }
    return y5;
}

IvpResult integrate_radial_ivp(const RadialEquation& eq, int zero_target,
                               const SolverConfig& config)
{
    config.validate();
    if (zero_target < 1)
        throw InvalidArgs("zero_target must be >= 1");
    if (!(eq.p > 1.0))
        throw InvalidArgs("exponent p must exceed 1");
    if (!(eq.dim >= 2.0) || eq.weight < 0.0)
        throw InvalidArgs("radial equation needs dim >= 2 and weight >= 0");

    double horizon = config.max_horizon.value_or(10.0 * zero_target);
    int doublings = 0;

    std::vector<double> xs{config.t_seed};
    std::vector<State> ys{eq.unit_seed(config.t_seed)};
    IvpResult out;

    const double h_max = 0.05;
    double h = 1e-3;
    double x = xs.back();
    State y = ys.back();

    while (static_cast<int>(out.zeros.size()) < zero_target) {
        if (x >= horizon) {
            if (doublings == 2) {
                throw HorizonExceeded("zero " + std::to_string(out.zeros.size() + 1)
                                      + " of the unit IVP not found before t = "
                                      + std::to_string(horizon));
            }
            horizon *= 2.0;
            ++doublings;
        }
        h = std::min({h, h_max, horizon - x});
        State err{};
        const State y_new = dormand_prince_step(eq, x, y, h, &err);
        double norm = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double sc =
                config.abs_tol + config.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
            norm += (err[i] / sc) * (err[i] / sc);
        }
        norm = std::sqrt(norm / 2.0);
        if (!std::isfinite(norm)) {
            h *= 0.1;
            ++out.rejected_steps;
            continue;
        }
        const double factor =
            norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
        if (norm > 1.0) {
            h *= std::max(factor, 0.1);
            ++out.rejected_steps;
            if (h < 1e-14 * std::max(1.0, x))
                throw NotConverged("step size underflow at x = " + std::to_string(x));
            continue;
        }

        // Events inside [x, x + h].
        if (sign_of(y_new[1]) != sign_of(y[1]) && y[1] != 0.0) {
            out.critical_points.push_back(locate_sign_change(eq, x, y, h, 1));
        }
        if (sign_of(y_new[0]) != sign_of(y[0]) && y[0] != 0.0) {
            out.zeros.push_back(locate_sign_change(eq, x, y, h, 0));
        }
        x += h;
        y = y_new;
        xs.push_back(x);
        ys.push_back(y);
        h *= factor;
    }

    // Drop critical points found after the last requested zero.
    const double last_zero = out.zeros.back();
    std::erase_if(out.critical_points, [&](double c) { return c >= last_zero; });
    out.trajectory = Trajectory(eq, std::move(xs), std::move(ys));
    return out;
}

} // namespace henon
