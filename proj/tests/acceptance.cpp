// Acceptance run: one PASS/FAIL line per criterion at the published tolerances.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "henon/energy.hpp"
#include "henon/morse.hpp"
#include "henon/radial_solver.hpp"
#include "henon/spectral.hpp"
#include "henon/sweep.hpp"
#include "henon/transforms.hpp"

using namespace henon;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string num(double x)
{
    std::ostringstream os;
    os.precision(4);
    os << x;
    return os.str();
}

bool strictly_decreasing(const std::vector<double>& v)
{
    for (std::size_t k = 1; k < v.size(); ++k) {
        if (!(v[k] < v[k - 1]))
            return false;
    }
    return v.size() >= 2;
}

std::string list(const std::vector<double>& v)
{
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? ", " : "") + num(v[k]);
    return s + "]";
}

template <class F>
std::vector<double> col(const SweepReport& rep, F get)
{
    std::vector<double> out;
    for (const auto& row : rep.rows)
        out.push_back(get(row));
    return out;
}

Outcome decreasing_below(const std::string& what, const std::vector<double>& v, double thr)
{
    const bool dec = strictly_decreasing(v);
    const bool below = !v.empty() && v.back() < thr;
    return {dec && below, what + " " + list(v) + (dec ? " decreasing" : " NOT decreasing") + ", final "
                              + (below ? "< " : ">= ") + num(thr)};
}

Outcome both(const Outcome& a, const Outcome& b)
{
    return {a.pass && b.pass, a.detail + "; " + b.detail};
}

constexpr double kJ11 = 3.8317059702075123;

} // namespace

int main()
{
    const SolverConfig cfg;
    SweepConfig sc;  // p = 3, N = 3, m = 2, alpha = 10 * 2^k, k = 0..5
    sc.theta = 1.1;
    const SweepReport full = run_sweep(sc);
    const SweepReport upto160 = full.restricted(160.0);
    const GradedMesh mesh = GradedMesh::build(sc.mesh_n, sc.t_min, sc.grading);

    std::vector<std::pair<int, std::function<Outcome()>>> criteria;

    criteria.emplace_back(1, [&] {
        double worst = 0.0;
        for (int m : {1, 2}) {
            const RadialProfile w = solve_lane_emden(3.0, m, cfg);
            for (double alpha : {3.0, 7.0, 21.0})
                worst = std::max(worst, sup_distance(solve_henon_transformed({3.0, 2, alpha, m}, cfg), w));
        }
        return Outcome{worst < 1e-6, "max |v - w| over N=2 cases " + num(worst)};
    });

    criteria.emplace_back(2, [&] {
        return both(decreasing_below("|v-w|", col(upto160, [](const SweepRow& r) { return r.sup_gap; }), 1e-2),
                    decreasing_below("|v'-w'|", col(upto160, [](const SweepRow& r) { return r.sup_gap_deriv; }), 5e-2));
    });

    criteria.emplace_back(3, [&] {
        return decreasing_below("|alpha(1-r_1) + 2 log t_1|",
                                col(upto160, [](const SweepRow& r) { return r.zero_limit_error.empty() ? NAN : r.zero_limit_error[0]; }),
                                5e-2);
    });

    criteria.emplace_back(4, [&] {
        return decreasing_below("plateau gap", col(upto160, [](const SweepRow& r) { return r.plateau_gap; }), 1e-2);
    });

    criteria.emplace_back(5, [&] {
        const ExtremaEnvelope e = check_extrema_rate(upto160);
        return Outcome{e.passed, e.detail};
    });

    criteria.emplace_back(6, [&] {
        double neh = 0.0, grad = 0.0, ode = 0.0;
        bool ok = true;
        for (const auto& row : full.rows) {
            ok = ok && row.ok();
            neh = std::max(neh, row.nehari_residual);
            grad = std::max(grad, row.gradient_residual);
            ode = std::max(ode, row.ode_residual);
        }
        for (int m : {1, 2, 3}) {
            for (double alpha : {0.5, 5.0, 50.0, 400.0}) {
                const ProblemParams params{3.0, 3, alpha, m};
                const RescaleMap map = make_rescale_map(alpha, 3.0);
                const RadialProfile v = solve_henon_transformed(params, cfg);
                const RadialProfile u = solve_henon_radial(params, cfg);
                neh = std::max(neh, energy_breakdown(u).nehari_residual());
                grad = std::max(grad, gradient_identity_residual(u, v, map));
                ode = std::max(ode, ode_residual(v, 1e-3, true));
            }
        }
        ok = ok && neh < 1e-6 && grad < 1e-8 && ode < 1e-6;
        return Outcome{ok, "max Nehari " + num(neh) + ", gradient identity " + num(grad) + ", ODE " + num(ode)};
    });

    criteria.emplace_back(7, [&] {
        const EigenResult bessel =
            negative_eigenvalues(assemble_pencil([](double) { return kJ11 * kJ11; }, 2.0, mesh), 1);
        const double err = bessel.eigenvalues.empty() ? INFINITY : std::abs(bessel.eigenvalues[0] + 1.0);
        std::size_t negatives = 0;
        for (double M : {2.0, 2.5, 3.0})
            negatives += assemble_pencil([](double) { return 0.0; }, M, mesh).count_below(0.0);
        const std::size_t below_hardy = assemble_pencil([](double) { return 0.0; }, 3.0, mesh).count_below(0.25);
        const bool ok = err < 1e-4 && negatives == 0 && below_hardy == 0;
        return Outcome{ok, "Bessel |lambda + 1| " + num(err) + ", zero-potential negatives " + std::to_string(negatives)
                               + ", eigenvalues below Hardy floor " + std::to_string(below_hardy)};
    });

    criteria.emplace_back(8, [&] {
        bool ok = true;
        std::string d;
        const auto& top = full.rows.back();
        for (std::size_t i = 0; i < 2; ++i) {
            const double lam = full.limit.lambda[i];
            const double gap = i < top.lambda.size() ? std::abs(top.lambda[i] - lam) : INFINITY;
            const double ratio = fit_expansion(full, static_cast<int>(i) + 1).quad_coeff / (lam / 4.0);
            ok = ok && gap < 5e-2 && std::abs(ratio - 1.0) <= 0.05;
            d += "i=" + std::to_string(i + 1) + ": gap at alpha " + num(top.alpha) + " " + num(gap)
                 + ", quad/(lambda/4) " + num(ratio) + "; ";
        }
        return Outcome{ok, d};
    });

    criteria.emplace_back(9, [&] {
        bool ok = true;
        std::string d;
        for (std::size_t i = 0; i < 2; ++i) {
            const double lin = fit_expansion(full, static_cast<int>(i) + 1).lin_coeff;
            const double c = full.limit.mu.c[i];
            const double rel = std::abs(lin - c) / std::abs(c);
            ok = ok && rel <= 0.15;
            d += "i=" + std::to_string(i + 1) + ": fit " + num(lin) + " vs c " + num(c) + " (rel " + num(rel) + "); ";
        }
        return Outcome{ok, d};
    });

    criteria.emplace_back(10, [&] {
        bool ok = true;
        std::string d;
        const std::size_t n = full.rows.size();
        for (std::size_t k = n - 3; k < n; ++k) {
            const auto& row = full.rows[k];
            const bool b = row.ok() && row.morse_total >= row.bound_J && row.bound_K && row.morse_total >= *row.bound_K;
            ok = ok && b;
            d += "alpha " + num(row.alpha) + ": index " + std::to_string(row.morse_total) + " vs J-bound "
                 + std::to_string(row.bound_J) + ", K-bound " + (row.bound_K ? std::to_string(*row.bound_K) : "-") + "; ";
        }
        const MonotonicityFlags f = monotonicity_report(full);
        const bool lam = std::all_of(f.lambda_decreasing_tail.begin(), f.lambda_decreasing_tail.end(), [](bool b) { return b; });
        ok = ok && f.morse_nondecreasing_tail && lam && f.level_increasing;
        d += std::string("index nondecreasing on tail ") + (f.morse_nondecreasing_tail ? "yes" : "no")
             + ", Lambda_hat decreasing on tail " + (lam ? "yes" : "no") + ", level increasing "
             + (f.level_increasing ? "yes" : "no");
        return Outcome{ok, d};
    });

    criteria.emplace_back(11, [&] {
        const ConstantsTable t = constants_limit(full, sc.p, sc.N);
        std::vector<double> gaps;
        for (const auto& r : t.rows)
            gaps.push_back(r.gap);
        return decreasing_below("scaled constant gap", gaps, 2e-2);
    });

    criteria.emplace_back(12, [&] {
        const GradedMesh fine = GradedMesh::build(2 * sc.mesh_n, sc.t_min, sc.grading);
        const GradedMesh low = GradedMesh::build(sc.mesh_n, sc.t_min / 2.0, sc.grading);
        double worst_n = 0.0, worst_t = 0.0;
        auto compare = [&](const RadialProfile& v, double M, int m) {
            const auto base = negative_eigenvalues(assemble_pencil(v, M, sc.p, mesh), m).eigenvalues;
            const auto a = negative_eigenvalues(assemble_pencil(v, M, sc.p, fine), m).eigenvalues;
            const auto b = negative_eigenvalues(assemble_pencil(v, M, sc.p, low), m).eigenvalues;
            if (a.size() != base.size() || b.size() != base.size()) {
                worst_n = INFINITY;
                return;
            }
            for (std::size_t i = 0; i < base.size(); ++i) {
                worst_n = std::max(worst_n, std::abs(a[i] - base[i]));
                worst_t = std::max(worst_t, std::abs(b[i] - base[i]));
            }
        };
        compare(full.limit.w, 2.0, sc.m);
        for (double alpha : sc.alphas) {
            const ProblemParams params{sc.p, sc.N, alpha, sc.m};
            compare(solve_henon_transformed(params, cfg), params.M_alpha(), sc.m);
        }
        return Outcome{worst_n < 1e-6 && worst_t < 1e-6,
                       "max eigenvalue shift: doubled mesh " + num(worst_n) + ", halved t_min " + num(worst_t)};
    });

    int failed = 0;
    for (const auto& [id, fn] : criteria) {
        Outcome o{false, ""};
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("criterion %2d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
