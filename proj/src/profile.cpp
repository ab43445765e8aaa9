#include "henon/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "henon/errors.hpp"
#include "henon/quadrature.hpp"

namespace henon {

const char* to_string(Variable v)
{
    return v == Variable::r_variable ? "r" : "t";
}

RadialProfile::RadialProfile(Variable variable, RadialEquation equation, int m,
                             std::optional<ProblemParams> params, std::vector<double> nodes,
                             std::vector<double> values, std::vector<double> derivs,
                             std::vector<double> zeros, std::vector<double> extrema_locs,
                             std::vector<double> extrema_vals)
    : variable_(variable), equation_(equation), m_(m), params_(params),
      nodes_(std::move(nodes)), values_(std::move(values)), derivs_(std::move(derivs)),
      zeros_(std::move(zeros)), extrema_locs_(std::move(extrema_locs)),
      extrema_vals_(std::move(extrema_vals))
{
    if (nodes_.size() < 2 || nodes_.size() != values_.size() || nodes_.size() != derivs_.size())
        throw InvalidArgs("profile samples must have matching sizes >= 2");
    if (nodes_.front() != 0.0)
        throw InvalidArgs("profile grid must start at 0");
    curv_.resize(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k)
        curv_[k] = equation_.curvature(nodes_[k], values_[k], derivs_[k]);
}

std::size_t RadialProfile::cell_of(double x) const
{
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    if (it == nodes_.begin())
        return 0;
    const std::size_t k = static_cast<std::size_t>(it - nodes_.begin()) - 1;
    return std::min(k, nodes_.size() - 2);
}

ProfileSample RadialProfile::evaluate(double x) const
{
    x = std::clamp(x, nodes_.front(), nodes_.back());
    const std::size_t k = cell_of(x);
    const double x0 = nodes_[k];
    const double h = nodes_[k + 1] - x0;
    const double s = (x - x0) / h;
    if (s == 0.0)
        return {values_[k], derivs_[k]};
    if (s == 1.0)
        return {values_[k + 1], derivs_[k + 1]};
    const double s2 = s * s, s3 = s2 * s, s4 = s3 * s, s5 = s4 * s;

    const double h0 = 1.0 - 10.0 * s3 + 15.0 * s4 - 6.0 * s5;
    const double h1 = s - 6.0 * s3 + 8.0 * s4 - 3.0 * s5;
    const double h2 = 0.5 * s2 - 1.5 * s3 + 1.5 * s4 - 0.5 * s5;
    const double h3 = 10.0 * s3 - 15.0 * s4 + 6.0 * s5;
    const double h4 = -4.0 * s3 + 7.0 * s4 - 3.0 * s5;
    const double h5 = 0.5 * s3 - s4 + 0.5 * s5;

    const double d0 = -30.0 * s2 + 60.0 * s3 - 30.0 * s4;
    const double d1 = 1.0 - 18.0 * s2 + 32.0 * s3 - 15.0 * s4;
    const double d2 = s - 4.5 * s2 + 6.0 * s3 - 2.5 * s4;
    const double d3 = 30.0 * s2 - 60.0 * s3 + 30.0 * s4;
    const double d4 = -12.0 * s2 + 28.0 * s3 - 15.0 * s4;
    const double d5 = 1.5 * s2 - 4.0 * s3 + 2.5 * s4;

    const double f0 = values_[k], f1 = values_[k + 1];
    const double g0 = h * derivs_[k], g1 = h * derivs_[k + 1];
    const double c0 = h * h * curv_[k], c1 = h * h * curv_[k + 1];

    return {f0 * h0 + g0 * h1 + c0 * h2 + f1 * h3 + g1 * h4 + c1 * h5,
            (f0 * d0 + g0 * d1 + c0 * d2 + f1 * d3 + g1 * d4 + c1 * d5) / h};
}

std::vector<double> graded_unit_grid(int n, double ratio, double first_positive)
{
    if (n < 3)
        throw InvalidArgs("graded grid needs at least 3 nodes");
    if (!(ratio > 1.0) || !(first_positive > 0.0) || !(first_positive < 1.0))
        throw InvalidArgs("graded grid needs ratio > 1 and first node in (0, 1)");

    const int cells = n - 2;  // between first_positive and 1
    const double L = -std::log(first_positive);
    const double denom = std::log(ratio) * cells - L;

    std::vector<double> nodes(static_cast<std::size_t>(n));
    nodes[0] = 0.0;
    if (!(denom > 0.0)) {
        // Too few nodes to reach uniform spacing: purely geometric grid.
        for (int i = 0; i <= cells; ++i)
            nodes[static_cast<std::size_t>(i + 1)] =
                std::exp(-L * (1.0 - static_cast<double>(i) / cells));
        nodes.back() = 1.0;
        return nodes;
    }
    const double c = (1.0 - first_positive) / denom;
    const double s0 = first_positive - c * L;
    const double ds = (1.0 - s0) / cells;

    // Solve exp(u) + c u = s for u = log t by safeguarded Newton.
    auto invert = [c](double s, double u_lo, double u_hi) {
        double u = 0.5 * (u_lo + u_hi);
        for (int it = 0; it < 100; ++it) {
            const double g = std::exp(u) + c * u - s;
            if (g > 0.0)
                u_hi = u;
            else
                u_lo = u;
            double next = u - g / (std::exp(u) + c);
            if (!(next > u_lo && next < u_hi))
                next = 0.5 * (u_lo + u_hi);
            if (std::abs(next - u) <= 1e-15 * std::max(1.0, std::abs(u)))
                return next;
            u = next;
        }
        return u;
    };

    nodes[1] = first_positive;
    double u_prev = -L;
    for (int i = 1; i < cells; ++i) {
        const double s = s0 + ds * i;
        u_prev = invert(s, u_prev, 0.0);
        nodes[static_cast<std::size_t>(i + 1)] = std::exp(u_prev);
    }
    nodes.back() = 1.0;
    return nodes;
}

namespace {

std::vector<double> merged_nodes(const RadialProfile& a, const RadialProfile& b)
{
    std::vector<double> xs;
    xs.reserve(a.nodes().size() + b.nodes().size());
    std::merge(a.nodes().begin(), a.nodes().end(), b.nodes().begin(), b.nodes().end(),
               std::back_inserter(xs));
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

} // namespace

double sup_distance(const RadialProfile& a, const RadialProfile& b)
{
    double sup = 0.0;
    for (double x : merged_nodes(a, b))
        sup = std::max(sup, std::abs(a.evaluate(x).value - b.evaluate(x).value));
    return sup;
}

double sup_distance_deriv(const RadialProfile& a, const RadialProfile& b)
{
    double sup = 0.0;
    for (double x : merged_nodes(a, b))
        sup = std::max(sup, std::abs(a.evaluate(x).deriv - b.evaluate(x).deriv));
    return sup;
}

double ode_residual(const RadialProfile& profile, double lo, bool divide_weight)
{
    const auto& eq = profile.equation();
    const auto& xs = profile.nodes();
    const auto& dys = profile.derivs();
    double sup = 0.0;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        const double a = xs[k];
        const double b = xs[k + 1];
        if (a < lo)
            continue;
        const double flux_a = std::pow(a, eq.dim - 1.0) * dys[k];
        const double flux_b = std::pow(b, eq.dim - 1.0) * dys[k + 1];
        const double source = gauss_legendre_integrate(a, b, [&](double x) {
            const double y = profile.evaluate(x).value;
            return std::pow(x, eq.dim - 1.0 + eq.weight) * std::pow(std::abs(y), eq.p - 1.0) * y;
        });
        double avg = -(flux_b - flux_a + source) / (b - a);
        if (divide_weight)
            avg /= std::pow(0.5 * (a + b), eq.dim - 1.0);
        sup = std::max(sup, std::abs(avg));
    }
    return sup;
}

} // namespace henon
