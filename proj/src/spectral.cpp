#include "henon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "henon/errors.hpp"
#include "henon/quadrature.hpp"
#include "henon/radial_solver.hpp"

namespace henon {

namespace {

// Sum_n binom(k, n) x^n / denom(n) for |x| <= 1/2.
template <class Denom>
double binomial_series(double k, double x, Denom denom)
{
    double coeff = 1.0;  // binom(k, n)
    double xn = 1.0;
    double sum = 0.0;
    for (int n = 0; n < 200; ++n) {
        const double term = coeff * xn / denom(n);
        sum += term;
        if (n > 2 && std::abs(term) <= 1e-17 * std::abs(sum))
            break;
        coeff *= (k - n) / (n + 1.0);
        xn *= x;
        if (coeff == 0.0)
            break;
    }
    return sum;
}

HatMoments hat_moments_quadrature(double a, double b, double k)
{
    static const QuadratureRule rule = gauss_legendre(24);
    const double h = b - a;
    auto integrate = [&](auto f) { return gauss_legendre_integrate(a, b, f, rule); };
    return {integrate([&](double t) { return (b - t) * (b - t) / (h * h) * std::pow(t, k); }),
            integrate([&](double t) { return (b - t) * (t - a) / (h * h) * std::pow(t, k); }),
            integrate([&](double t) { return (t - a) * (t - a) / (h * h) * std::pow(t, k); })};
}

void ldl_solve(const std::vector<double>& diag, const std::vector<double>& off,
               std::vector<double>& x)
{
    const std::size_t n = diag.size();
    std::vector<double> d(n);
    std::vector<double> l(n, 0.0);
    d[0] = diag[0];
    if (d[0] == 0.0)
        d[0] = std::numeric_limits<double>::epsilon() * (std::abs(diag[0]) + 1.0);
    for (std::size_t k = 1; k < n; ++k) {
        l[k] = off[k - 1] / d[k - 1];
        d[k] = diag[k] - l[k] * off[k - 1];
        if (d[k] == 0.0)
            d[k] = std::numeric_limits<double>::epsilon() * (std::abs(diag[k]) + 1.0);
    }
    for (std::size_t k = 1; k < n; ++k)
        x[k] -= l[k] * x[k - 1];
    for (std::size_t k = 0; k < n; ++k)
        x[k] /= d[k];
    for (std::size_t k = n - 1; k-- > 0;)
        x[k] -= l[k + 1] * x[k + 1];
}

std::vector<double> apply_tridiag(const std::vector<double>& diag, const std::vector<double>& off,
                                  const std::vector<double>& x)
{
    const std::size_t n = diag.size();
    std::vector<double> y(n);
    for (std::size_t k = 0; k < n; ++k) {
        double s = diag[k] * x[k];
        if (k > 0)
            s += off[k - 1] * x[k - 1];
        if (k + 1 < n)
            s += off[k] * x[k + 1];
        y[k] = s;
    }
    return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
        s += a[k] * b[k];
    return s;
}

} // namespace

HatMoments hat_moments(double a, double b, double k)
{
    if (!(a > 0.0) || !(b > a))
        throw InvalidArgs("hat_moments needs 0 < a < b");
    const double h = b - a;
    const double rho = h / a;
    if (rho > 0.5)
        return hat_moments_quadrature(a, b, k);
    const double rho_b = h / b;
    const double ak = std::pow(a, k);
    const double bk = std::pow(b, k);
    return {bk * h * binomial_series(k, -rho_b, [](int n) { return n + 3.0; }),
            ak * h * binomial_series(k, rho, [](int n) { return (n + 2.0) * (n + 3.0); }),
            ak * h * binomial_series(k, rho, [](int n) { return n + 3.0; })};
}

std::size_t EigenPencil::count_below(double sigma) const
{
    const std::size_t n = a_diag.size();
    std::size_t count = 0;
    double d = a_diag[0] - sigma * b_diag[0];
    if (d == 0.0)
        d = -std::numeric_limits<double>::min();
    if (d < 0.0)
        ++count;
    for (std::size_t k = 1; k < n; ++k) {
        const double e = a_off[k - 1] - sigma * b_off[k - 1];
        d = (a_diag[k] - sigma * b_diag[k]) - e * e / d;
        if (d == 0.0)
            d = -std::numeric_limits<double>::min();
        if (d < 0.0)
            ++count;
    }
    return count;
}

double EigenPencil::rayleigh_quotient(const std::vector<double>& x) const
{
    return dot(x, apply_tridiag(a_diag, a_off, x)) / dot(x, apply_tridiag(b_diag, b_off, x));
}

EigenPencil assemble_pencil(const std::function<double(double)>& potential, double M,
                            const GradedMesh& mesh)
{
    if (!(M >= 2.0))
        throw InvalidArgs("pencil needs M >= 2");
    const auto& xs = mesh.nodes;
    if (xs.size() < 3 || xs.back() != 1.0)
        throw InvalidArgs("mesh must end at t = 1 with at least 2 cells");
    const std::size_t dof = xs.size() - 1;

    EigenPencil pen;
    pen.M = M;
    pen.nodes = xs;
    pen.a_diag.assign(dof, 0.0);
    pen.b_diag.assign(dof, 0.0);
    pen.a_off.assign(dof - 1, 0.0);
    pen.b_off.assign(dof - 1, 0.0);

    for (std::size_t c = 0; c + 1 < xs.size(); ++c) {
        const double a = xs[c];
        const double b = xs[c + 1];
        const double h = b - a;
        const double stiff = power_integral(a, b, M - 1.0) / (h * h);
        const double v_mid = potential(0.5 * (a + b));
        pen.potential_sup = std::max(pen.potential_sup, std::abs(v_mid));
        const HatMoments pm = hat_moments(a, b, M - 1.0);
        const HatMoments mm = hat_moments(a, b, M - 3.0);

        const double a_ll = stiff - v_mid * pm.left;
        const double a_lr = -stiff - v_mid * pm.cross;
        const double a_rr = stiff - v_mid * pm.right;

        pen.a_diag[c] += a_ll;
        pen.b_diag[c] += mm.left;
        if (c + 1 < dof) {
            pen.a_diag[c + 1] += a_rr;
            pen.b_diag[c + 1] += mm.right;
            pen.a_off[c] += a_lr;
            pen.b_off[c] += mm.cross;
        }
    }
    return pen;
}

EigenPencil assemble_pencil(const RadialProfile& profile, double M, double p,
                            const GradedMesh& mesh)
{
    if (profile.variable() != Variable::t_variable)
        throw VariableMismatch("pencil potential needs a t-variable profile");

    // Each nodal set must be resolved by the mesh.
    double lo = mesh.nodes.front();
    for (double z : profile.zeros()) {
        const auto first = std::lower_bound(mesh.nodes.begin(), mesh.nodes.end(), lo);
        const auto last = std::upper_bound(mesh.nodes.begin(), mesh.nodes.end(), z);
        const auto cells = std::distance(first, last) - 1;
        if (cells < 8) {
            throw MeshTooCoarse("nodal set (" + std::to_string(lo) + ", " + std::to_string(z)
                                + ") holds " + std::to_string(cells) + " cells, need >= 8");
        }
        lo = z;
    }
    return assemble_pencil(
        [&](double t) {
            const double v = profile.evaluate(t).value;
            return p * std::pow(std::abs(v), p - 1.0);
        },
        M, mesh);
}

int sign_changes(const std::vector<double>& samples)
{
    int changes = 0;
    int last = 0;
    for (double s : samples) {
        const int sg = (s > 0.0) - (s < 0.0);
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++changes;
        last = sg;
    }
    return changes;
}

EigenResult negative_eigenvalues(const EigenPencil& pencil, int count)
{
    if (count < 1)
        throw InvalidArgs("eigenvalue count must be >= 1");
    EigenResult out;
    out.nodes = pencil.nodes;
    out.M = pencil.M;
    out.dof = pencil.dof();
    out.requested = count;

    const std::size_t negatives = pencil.count_below(0.0);
    const std::size_t wanted = std::min<std::size_t>(static_cast<std::size_t>(count), negatives);
    out.complete = wanted == static_cast<std::size_t>(count);
    if (wanted == 0)
        return out;

    double floor_ = -4.0 * pencil.potential_sup - 1.0;
    for (int it = 0; pencil.count_below(floor_) > 0; ++it) {
        if (it > 60)
            throw NotConverged("no lower bound found for the spectrum");
        floor_ *= 2.0;
    }

    for (std::size_t k = 1; k <= wanted; ++k) {
        double lo = floor_;
        double hi = 0.0;
        for (int it = 0; it < 300; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            if (pencil.count_below(mid) >= k)
                hi = mid;
            else
                lo = mid;
        }
        const double lambda = 0.5 * (lo + hi);
        if (hi - lo > 1e-10 * (1.0 + std::abs(lambda)))
            throw NotConverged("bisection for eigenvalue " + std::to_string(k)
                               + " stalled at width " + std::to_string(hi - lo));
        out.eigenvalues.push_back(lambda);
    }

    const std::size_t n = pencil.dof();
    for (double lambda : out.eigenvalues) {
        const double shift = lambda - 1e-9 * (1.0 + std::abs(lambda));
        std::vector<double> diag(n), off(n - 1);
        for (std::size_t i = 0; i < n; ++i)
            diag[i] = pencil.a_diag[i] - shift * pencil.b_diag[i];
        for (std::size_t i = 0; i + 1 < n; ++i)
            off[i] = pencil.a_off[i] - shift * pencil.b_off[i];

        std::vector<double> x(n, 1.0);
        for (int it = 0; it < 4; ++it) {
            std::vector<double> rhs = apply_tridiag(pencil.b_diag, pencil.b_off, x);
            ldl_solve(diag, off, rhs);
            const double norm = std::sqrt(dot(rhs, apply_tridiag(pencil.b_diag, pencil.b_off, rhs)));
            for (auto& v : rhs)
                v /= norm;
            x = std::move(rhs);
        }
        if (x.back() < 0.0) {
            for (auto& v : x)
                v = -v;
        }
        x.push_back(0.0);  // pinned at t = 1
        out.eigenfunctions.push_back(std::move(x));
    }
    return out;
}

SingularSpectrum singular_spectrum_henon(const ProblemParams& params,
                                         const RadialProfile& profile_t, const GradedMesh& mesh)
{
    params.validate();
    const double M = params.M_alpha();
    if (std::abs(profile_t.equation().dim - M) > 1e-12 * M)
        throw InvalidArgs("profile does not solve the transformed problem at M_alpha");
    const EigenPencil pencil = assemble_pencil(profile_t, M, params.p, mesh);

    SingularSpectrum out;
    out.alpha = params.alpha;
    out.eigen = negative_eigenvalues(pencil, params.m);
    out.lambda_small = out.eigen.eigenvalues;
    const double scale = (params.alpha + 2.0) / 2.0;
    for (double l : out.lambda_small)
        out.Lambda_hat.push_back(scale * scale * l);
    return out;
}

std::vector<double> mu_at(double M, double p, int m, const GradedMesh& mesh,
                          const SolverConfig& config)
{
    const RadialProfile profile = solve_transformed(M, p, m, config);
    const EigenResult eig = negative_eigenvalues(assemble_pencil(profile, M, p, mesh), m);
    if (!eig.complete)
        throw NotConverged("found " + std::to_string(eig.eigenvalues.size())
                           + " negative eigenvalues at M = " + std::to_string(M) + ", expected "
                           + std::to_string(m));
    return eig.eigenvalues;
}

MuCurve eigenvalue_curve_mu(double p, int m, int N, const std::vector<double>& M_values,
                            const GradedMesh& mesh, const SolverConfig& config, double h)
{
    if (N < 2)
        throw InvalidArgs("N must be >= 2");
    for (double M : M_values) {
        if (!is_subcritical_M(M, p))
            throw Subcritical("p(M-2) < M+2 violated at M = " + std::to_string(M));
    }
    MuCurve out;
    out.M_values = M_values;
    out.h = h;
    for (double M : M_values)
        out.mu.push_back(mu_at(M, p, m, mesh, config));

    const auto mu0 = mu_at(2.0, p, m, mesh, config);
    const auto mu1 = mu_at(2.0 + h, p, m, mesh, config);
    const auto mu2 = mu_at(2.0 + 2.0 * h, p, m, mesh, config);
    out.lambda = mu0;
    for (int i = 0; i < m; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double d = (-3.0 * mu0[k] + 4.0 * mu1[k] - mu2[k]) / (2.0 * h);
        out.mu_prime_2.push_back(d);
        out.c.push_back((N - 2) * d / 2.0 + mu0[k]);
    }
    return out;
}

} // namespace henon
