#include "henon/transforms.hpp"

#include <cmath>
#include <string>

#include "henon/errors.hpp"
#include "henon/quadrature.hpp"

namespace henon {

RescaleMap make_rescale_map(double alpha, double p)
{
    if (!(alpha >= 0.0) || !(p > 1.0))
        throw InvalidArgs("rescale map needs alpha >= 0 and p > 1");
    return {alpha, p, std::pow(2.0 / (alpha + 2.0), 2.0 / (p - 1.0)), (alpha + 2.0) / 2.0};
}

std::vector<double> map_zeros(std::span<const double> r_zeros, double alpha)
{
    const double e = (alpha + 2.0) / 2.0;
    std::vector<double> out;
    out.reserve(r_zeros.size());
    for (double r : r_zeros) {
        if (!(r > 0.0 && r <= 1.0))
            throw DomainError("zero " + std::to_string(r) + " outside (0, 1]");
        out.push_back(r == 1.0 ? 1.0 : std::pow(r, e));
    }
    return out;
}

RadialProfile rescale_u_to_v(const RadialProfile& u, const RescaleMap& map)
{
    if (u.variable() != Variable::r_variable)
        throw VariableMismatch("rescale_u_to_v expects an r-variable profile");
    const double e = map.exponent;
    const double N = u.equation().dim;
    const double M = 2.0 * (map.alpha + N) / (map.alpha + 2.0);

    std::vector<double> nodes{0.0};
    std::vector<double> values{map.factor * u.values()[0]};
    std::vector<double> derivs{0.0};
    const auto& rs = u.nodes();
    for (std::size_t k = 1; k < rs.size(); ++k) {
        const double r = rs[k];
        const double t = (r == 1.0) ? 1.0 : std::pow(r, e);
        if (!(t > nodes.back()))
            continue;  // collapsed by underflow near r = 0
        nodes.push_back(t);
        values.push_back(map.factor * u.values()[k]);
        // dv/dt = factor u'(r) dr/dt,  dr/dt = r / (e t)
        derivs.push_back(map.factor * (u.derivs()[k] * r) / t / e);
    }

    std::vector<double> ext_locs;
    for (double r : u.extrema_locs())
        ext_locs.push_back(r == 0.0 ? 0.0 : std::pow(r, e));
    std::vector<double> ext_vals;
    for (double val : u.extrema_vals())
        ext_vals.push_back(map.factor * val);

    return RadialProfile(Variable::t_variable, RadialEquation{M, 0.0, map.p}, u.nodal_sets(),
                         u.params(), std::move(nodes), std::move(values), std::move(derivs),
                         map_zeros(u.zeros(), map.alpha), std::move(ext_locs),
                         std::move(ext_vals));
}

RadialProfile rescale_v_to_u(const RadialProfile& v, const RescaleMap& map, int N)
{
    if (v.variable() != Variable::t_variable)
        throw VariableMismatch("rescale_v_to_u expects a t-variable profile");
    const double expected_M = 2.0 * (map.alpha + N) / (map.alpha + 2.0);
    if (std::abs(v.equation().dim - expected_M) > 1e-12 * expected_M)
        throw InvalidArgs("profile dimension " + std::to_string(v.equation().dim)
                          + " does not match M_alpha = " + std::to_string(expected_M));
    const double e = map.exponent;
    const double inv_e = 1.0 / e;

    const auto& ts = v.nodes();
    std::vector<double> nodes(ts.size());
    std::vector<double> values(ts.size());
    std::vector<double> derivs(ts.size());
    for (std::size_t k = 0; k < ts.size(); ++k) {
        const double t = ts[k];
        const double r = (t == 0.0 || t == 1.0) ? t : std::pow(t, inv_e);
        nodes[k] = r;
        values[k] = v.values()[k] / map.factor;
        // du/dr = v'(t) dt/dr / factor,  dt/dr = e t / r
        derivs[k] = r == 0.0 ? 0.0 : v.derivs()[k] * e * (t / r) / map.factor;
    }

    std::vector<double> zeros;
    for (double t : v.zeros())
        zeros.push_back(t == 1.0 ? 1.0 : std::pow(t, inv_e));
    std::vector<double> ext_locs;
    for (double t : v.extrema_locs())
        ext_locs.push_back(t == 0.0 ? 0.0 : std::pow(t, inv_e));
    std::vector<double> ext_vals;
    for (double val : v.extrema_vals())
        ext_vals.push_back(val / map.factor);

    return RadialProfile(Variable::r_variable,
                         RadialEquation{static_cast<double>(N), map.alpha, map.p},
                         v.nodal_sets(), v.params(), std::move(nodes), std::move(values),
                         std::move(derivs), std::move(zeros), std::move(ext_locs),
                         std::move(ext_vals));
}

std::vector<double> scaled_extrema(const RadialProfile& u, const RescaleMap& map)
{
    std::vector<double> out;
    for (double val : u.extrema_vals())
        out.push_back(map.factor * std::abs(val));
    return out;
}

double gradient_identity_residual(const RadialProfile& u, const RadialProfile& v,
                                  const RescaleMap& map)
{
    if (u.variable() != Variable::r_variable || v.variable() != Variable::t_variable)
        throw VariableMismatch("gradient identity needs (r-variable u, t-variable v)");
    const double N = u.equation().dim;
    const double M = 2.0 * (map.alpha + N) / (map.alpha + 2.0);

    const double lhs = composite_power_integral(v.nodes(), 0.0, 1.0, M - 1.0, [&](double t) {
        const double d = v.evaluate(t).deriv;
        return d * d;
    });
    const double rhs_raw = composite_power_integral(u.nodes(), 0.0, 1.0, N - 1.0, [&](double r) {
        const double d = u.evaluate(r).deriv;
        return d * d;
    });
    const double rhs = std::pow(2.0 / (map.alpha + 2.0), (map.p + 3.0) / (map.p - 1.0)) * rhs_raw;
    return std::abs(lhs - rhs) / std::abs(rhs);
}

} // namespace henon
