#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "henon/errors.hpp"
#include "henon/quadrature.hpp"
#include "henon/radial_solver.hpp"
#include "henon/spectral.hpp"

using namespace henon;

namespace {

constexpr double kJ11 = 3.8317059702075123;

double b_norm(const EigenPencil& pen, const std::vector<double>& x)
{
    double s = 0.0;
    for (std::size_t k = 0; k < pen.dof(); ++k) {
        s += pen.b_diag[k] * x[k] * x[k];
        if (k + 1 < pen.dof())
            s += 2.0 * pen.b_off[k] * x[k] * x[k + 1];
    }
    return s;
}

} // namespace

TEST_CASE("hat moments match high-order quadrature")
{
    const QuadratureRule rule = gauss_legendre(40);
    for (double k : {-1.0, -0.99, 0.0, 1.0, 2.37, 5.0}) {
        for (auto [a, b] : {std::pair{1e-8, 1.05e-8}, std::pair{0.3, 0.3001}, std::pair{0.5, 0.9},
                            std::pair{1e-3, 5e-3}}) {
            const double h = b - a;
            auto q = [&](auto f) { return gauss_legendre_integrate(a, b, f, rule); };
            const double left = q([&](double t) { return (b - t) * (b - t) / (h * h) * std::pow(t, k); });
            const double cross = q([&](double t) { return (b - t) * (t - a) / (h * h) * std::pow(t, k); });
            const double right = q([&](double t) { return (t - a) * (t - a) / (h * h) * std::pow(t, k); });
            const HatMoments hm = hat_moments(a, b, k);
            CHECK(hm.left == doctest::Approx(left).epsilon(1e-13));
            CHECK(hm.cross == doctest::Approx(cross).epsilon(1e-13));
            CHECK(hm.right == doctest::Approx(right).epsilon(1e-13));
        }
    }
    CHECK_THROWS_AS(hat_moments(0.0, 1.0, 1.0), InvalidArgs);
}

TEST_CASE("mesh layout")
{
    const GradedMesh mesh = GradedMesh::build(4000, 1e-8);
    CHECK(mesh.nodes.front() == doctest::Approx(1e-8));
    CHECK(mesh.nodes.back() == 1.0);
    CHECK(mesh.nodes.size() == 4000);
    CHECK(mesh.cells() == 3999);
    CHECK(std::is_sorted(mesh.nodes.begin(), mesh.nodes.end()));
    CHECK(std::adjacent_find(mesh.nodes.begin(), mesh.nodes.end()) == mesh.nodes.end());
    CHECK_THROWS_AS(GradedMesh::build(8), InvalidArgs);
    CHECK_THROWS_AS(GradedMesh::build(100, 0.5), InvalidArgs);
}

TEST_CASE("mass matrix is positive definite")
{
    for (double M : {2.0, 2.5, 3.0}) {
        EigenPencil pen = assemble_pencil([](double) { return 0.0; }, M, GradedMesh::build(500));
        pen.a_diag = pen.b_diag;
        pen.a_off = pen.b_off;
        CHECK(pen.count_below(0.0) == 0);
        CHECK(pen.count_below(1.0 - 1e-9) == 0);
        CHECK(pen.count_below(1.0 + 1e-9) == pen.dof());
    }
}

TEST_CASE("zero potential: no negative eigenvalues and the Hardy floor")
{
    for (int n : {64, 1000, 16000}) {
        const GradedMesh mesh = GradedMesh::build(n);
        for (double M : {2.0, 2.1, 2.5, 3.0, 3.5}) {
            const EigenPencil pen = assemble_pencil([](double) { return 0.0; }, M, mesh);
            CHECK(pen.count_below(0.0) == 0);
            const double hardy = (M - 2.0) * (M - 2.0) / 4.0;
            CHECK(pen.count_below(hardy) == 0);
            CHECK(negative_eigenvalues(pen, 2).eigenvalues.empty());
            CHECK_FALSE(negative_eigenvalues(pen, 2).complete);
        }
    }
}

TEST_CASE("constant potential Bessel oracle")
{
    const GradedMesh mesh = GradedMesh::build(16000);
    const EigenPencil pen = assemble_pencil([](double) { return kJ11 * kJ11; }, 2.0, mesh);
    CHECK(pen.count_below(0.0) == 1);
    const EigenResult res = negative_eigenvalues(pen, 3);
    REQUIRE(res.eigenvalues.size() == 1);
    CHECK_FALSE(res.complete);
    CHECK(std::abs(res.eigenvalues[0] + 1.0) < 1e-4);

    // eigenfunction is proportional to J1(j11 t)
    const auto& psi = res.eigenfunctions[0];
    REQUIRE(psi.size() == mesh.nodes.size());
    double scale = 0.0, jmax = 0.0;
    for (std::size_t k = 0; k < psi.size(); ++k) {
        scale = std::max(scale, std::abs(psi[k]));
        jmax = std::max(jmax, std::cyl_bessel_j(1.0, kJ11 * mesh.nodes[k]));
    }
    double err = 0.0;
    for (std::size_t k = 0; k < psi.size(); ++k)
        err = std::max(err, std::abs(psi[k] / scale - std::cyl_bessel_j(1.0, kJ11 * mesh.nodes[k]) / jmax));
    CHECK(err < 1e-4);
    CHECK(psi.back() == 0.0);
    CHECK(psi[psi.size() - 2] > 0.0);
    CHECK(b_norm(pen, psi) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(pen.rayleigh_quotient(psi) == doctest::Approx(res.eigenvalues[0]).epsilon(1e-9));
}

TEST_CASE("Lane-Emden pencils have exactly m negative eigenvalues")
{
    const SolverConfig cfg;
    const GradedMesh mesh = GradedMesh::build(16000);
    for (int m : {1, 2, 3}) {
        const RadialProfile w = solve_lane_emden(3.0, m, cfg);
        const EigenPencil pen = assemble_pencil(w, 2.0, 3.0, mesh);
        CHECK(pen.count_below(0.0) == static_cast<std::size_t>(m));
        const EigenResult res = negative_eigenvalues(pen, m);
        REQUIRE(res.eigenvalues.size() == static_cast<std::size_t>(m));
        CHECK(res.complete);
        for (int i = 0; i < m; ++i) {
            const auto k = static_cast<std::size_t>(i);
            if (i > 0)
                CHECK(res.eigenvalues[k] > res.eigenvalues[k - 1]);
            CHECK(res.eigenvalues[k] < 0.0);
            // Sturm oscillation
            std::vector<double> interior(res.eigenfunctions[k].begin(), res.eigenfunctions[k].end() - 1);
            CHECK(sign_changes(interior) == i);
            CHECK(b_norm(pen, res.eigenfunctions[k]) == doctest::Approx(1.0).epsilon(1e-10));
        }
        if (m >= 2) {
            // -lambda_{m-1} > 1
            CHECK(-res.eigenvalues[static_cast<std::size_t>(m - 2)] > 1.0);
        }
    }
}

TEST_CASE("mesh refinement and t_min sensitivity")
{
    const SolverConfig cfg;
    const RadialProfile v = solve_henon_transformed({3.0, 3, 40.0, 2}, cfg);
    const double M = alpha_to_M(40.0, 3);
    auto eig = [&](int n, double t_min) {
        return negative_eigenvalues(assemble_pencil(v, M, 3.0, GradedMesh::build(n, t_min)), 2).eigenvalues;
    };
    const auto base = eig(16000, 1e-8);
    const auto fine = eig(32000, 1e-8);
    const auto low = eig(16000, 5e-9);
    const auto coarse = eig(8000, 1e-8);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(fine[i] <= base[i] + 1e-8);
        CHECK(base[i] <= coarse[i] + 1e-8);
        CHECK(std::abs(fine[i] - base[i]) < 1e-6);
        CHECK(std::abs(low[i] - base[i]) < 1e-6);
    }
}

TEST_CASE("under-resolved nodal sets are rejected")
{
    const SolverConfig cfg;
    const RadialProfile w = solve_lane_emden(3.0, 4, cfg);
    CHECK_THROWS_AS(assemble_pencil(w, 2.0, 3.0, GradedMesh::build(16)), MeshTooCoarse);
    const RadialProfile u = solve_henon_radial({3.0, 3, 4.0, 1}, cfg);
    CHECK_THROWS_AS(assemble_pencil(u, 2.0, 3.0, GradedMesh::build(200)), VariableMismatch);
}

TEST_CASE("singular spectrum of the Henon profile")
{
    const SolverConfig cfg;
    const GradedMesh mesh = GradedMesh::build(16000);
    const ProblemParams params{3.0, 3, 60.0, 2};
    const RadialProfile v = solve_henon_transformed(params, cfg);
    const SingularSpectrum s = singular_spectrum_henon(params, v, mesh);
    REQUIRE(s.Lambda_hat.size() == 2);
    CHECK(s.Lambda_hat[0] < s.Lambda_hat[1]);
    CHECK(s.Lambda_hat[1] < 0.0);
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(s.lambda_small[i] == doctest::Approx(s.Lambda_hat[i] * std::pow(2.0 / 62.0, 2)).epsilon(1e-14));
    const RadialProfile other = solve_henon_transformed({3.0, 3, 20.0, 2}, cfg);
    CHECK_THROWS_AS(singular_spectrum_henon(params, other, mesh), InvalidArgs);
}

TEST_CASE("mu curve")
{
    const SolverConfig cfg;
    const GradedMesh mesh = GradedMesh::build(16000);
    const MuCurve curve = eigenvalue_curve_mu(3.0, 2, 3, {2.0, 2.2, 2.5}, mesh, cfg);
    REQUIRE(curve.mu.size() == 3);
    const auto lambda = negative_eigenvalues(assemble_pencil(solve_lane_emden(3.0, 2, cfg), 2.0, 3.0, mesh), 2).eigenvalues;
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(curve.mu[0][i] == doctest::Approx(lambda[i]).epsilon(1e-12));
        CHECK(curve.lambda[i] == doctest::Approx(lambda[i]).epsilon(1e-12));
        CHECK(curve.c[i] == doctest::Approx(curve.mu_prime_2[i] / 2.0 + lambda[i]));
        // continuity: |mu(2+h) - mu(2)| = O(h)
        const double step = std::abs(mu_at(2.0 + 1e-3, 3.0, 2, mesh, cfg)[i] - lambda[i]);
        CHECK(step < 20.0 * 1e-3);
        CHECK(std::abs(mu_at(2.0 + 1e-4, 3.0, 2, mesh, cfg)[i] - lambda[i]) < 0.2 * step);
    }
    CHECK_THROWS_AS(eigenvalue_curve_mu(3.0, 2, 3, {4.5}, mesh, cfg), Subcritical);
}

TEST_CASE("sign change counter")
{
    CHECK(sign_changes({1.0, 0.0, -1.0, 0.0, 2.0}) == 2);
    CHECK(sign_changes({0.0, 0.0}) == 0);
    CHECK(sign_changes({-1.0, -2.0}) == 0);
}
