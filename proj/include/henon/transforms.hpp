#pragma once

#include <span>
#include <vector>

#include "henon/profile.hpp"

namespace henon {

/// Change of variables t = r^{(alpha+2)/2},  v(t) = factor * u(r),
/// factor = (2/(alpha+2))^{2/(p-1)}.
struct RescaleMap {
    double alpha;
    double p;
    double factor;
    double exponent;
};

RescaleMap make_rescale_map(double alpha, double p);

/// r-variable u_alpha -> t-variable v_alpha. Derivatives follow the chain rule.
RadialProfile rescale_u_to_v(const RadialProfile& u, const RescaleMap& map);

/// t-variable v -> r-variable u in dimension N, u(r) = v(r^{exponent}) / factor.
RadialProfile rescale_v_to_u(const RadialProfile& v, const RescaleMap& map, int N);

/// t_i = r_i^{(alpha+2)/2}; throws DomainError outside (0, 1].
std::vector<double> map_zeros(std::span<const double> r_zeros, double alpha);

/// Scaled extrema factor * |M_i| of an r-variable profile.
std::vector<double> scaled_extrema(const RadialProfile& u, const RescaleMap& map);

/// Relative defect of
///   int_0^1 |v'|^2 t^{M_alpha-1} dt = (2/(alpha+2))^{(p+3)/(p-1)} int_0^1 |u'|^2 r^{N-1} dr,
/// each side computed by quadrature in its own variable.
double gradient_identity_residual(const RadialProfile& u, const RadialProfile& v,
                                  const RescaleMap& map);

} // namespace henon
