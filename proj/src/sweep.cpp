#include "henon/sweep.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "henon/energy.hpp"
#include "henon/errors.hpp"
#include "henon/morse.hpp"
#include "henon/radial_solver.hpp"
#include "henon/transforms.hpp"

namespace henon {

namespace {

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

std::size_t tail_start(std::size_t n)
{
    const std::size_t len = std::max<std::size_t>(std::min<std::size_t>(3, n), n - n / 2);
    return n - len;
}

bool strictly_decreasing(const std::vector<double>& v, std::size_t from = 0)
{
    for (std::size_t k = from + 1; k < v.size(); ++k) {
        if (!(v[k] < v[k - 1]))
            return false;
    }
    return true;
}

std::vector<double> column(const SweepReport& report, const auto& get)
{
    std::vector<double> out;
    out.reserve(report.rows.size());
    for (const auto& row : report.rows)
        out.push_back(get(row));
    return out;
}

double at_or_nan(const std::vector<double>& v, std::size_t i)
{
    return i < v.size() ? v[i] : kNaN;
}

bool has_check(const std::vector<std::string>& names, const std::string& name)
{
    return std::find(names.begin(), names.end(), name) != names.end();
}

} // namespace

void SweepConfig::validate() const
{
    if (alphas.empty())
        throw InvalidArgs("alpha list is empty");
    solver.validate();
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        ProblemParams{p, N, alphas[k], m}.validate();
        if (k > 0 && !(alphas[k] > alphas[k - 1]))
            throw InvalidArgs("alphas must be strictly increasing");
    }
    if (!(R0 > 0.0 && R0 < 1.0))
        throw InvalidArgs("R0 must lie in (0, 1)");
    if (theta && m >= 2 && !(*theta > 1.0))
        throw InvalidArgs("theta must be > 1");
    if (mesh_n < 16)
        throw InvalidArgs("mesh size must be >= 16");
    if (jobs < 0)
        throw InvalidArgs("jobs must be >= 0");
    for (const auto& c : checks) {
        if (!has_check(known_checks(), c))
            throw InvalidArgs("unknown check '" + c + "'");
    }
}

std::vector<double> geometric_alphas(double a, double b, int n)
{
    if (n < 1)
        throw InvalidArgs("alpha count must be >= 1");
    if (!(a > 0.0) || !(b >= a))
        throw InvalidArgs("geometric range needs 0 < a <= b");
    if (n == 1)
        return {a};
    std::vector<double> out;
    const double q = std::log(b / a) / (n - 1);
    for (int k = 0; k < n; ++k)
        out.push_back(k == n - 1 ? b : a * std::exp(q * k));
    return out;
}

bool SweepReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

SweepReport SweepReport::restricted(double max_alpha) const
{
    SweepReport out;
    out.config = config;
    out.limit = limit;
    for (const auto& row : rows) {
        if (row.alpha <= max_alpha) {
            out.rows.push_back(row);
        }
    }
    out.config.alphas.clear();
    for (const auto& row : out.rows)
        out.config.alphas.push_back(row.alpha);
    return out;
}

LimitObjects compute_limit_objects(const SweepConfig& config, const GradedMesh& mesh)
{
    LimitObjects lim;
    lim.w = solve_lane_emden(config.p, config.m, config.solver);
    lim.w_pos = solve_lane_emden(config.p, 1, config.solver);
    lim.S_p = best_constant_2d(config.p, lim.w_pos);
    lim.constant_limit = best_constant_limit(config.p, config.N, lim.S_p);
    lim.mu = eigenvalue_curve_mu(config.p, config.m, config.N, {}, mesh, config.solver);
    lim.lambda = lim.mu.lambda;
    return lim;
}

SweepRow compute_row(double alpha, const SweepConfig& config, const LimitObjects& limit,
                     const GradedMesh& mesh)
{
    SweepRow row;
    row.alpha = alpha;
    try {
        if (limit.w.nodes().empty() || limit.lambda.size() != static_cast<std::size_t>(config.m))
            throw InvalidArgs("limit objects are missing");
        const ProblemParams params{config.p, config.N, alpha, config.m};
        params.validate();
        row.M = params.M_alpha();
        const RescaleMap map = make_rescale_map(alpha, config.p);
        const RadialProfile v = solve_henon_transformed(params, config.solver);
        const RadialProfile u = solve_henon_radial(params, config.solver);

        row.sup_gap = sup_distance(v, limit.w);
        row.sup_gap_deriv = sup_distance_deriv(v, limit.w);

        row.t_zeros.assign(v.zeros().begin(), v.zeros().end() - 1);
        row.r_zeros.assign(u.zeros().begin(), u.zeros().end() - 1);
        for (std::size_t i = 0; i < row.t_zeros.size(); ++i) {
            const double one_minus_r =
                -std::expm1(std::log(row.t_zeros[i]) * 2.0 / (alpha + 2.0));
            const double t_lim = limit.w.zeros()[i];
            row.zero_limit_error.push_back(std::abs(alpha * one_minus_r + 2.0 * std::log(t_lim)));
        }

        const double w0 = limit.w.amplitude();
        double plateau = std::abs(map.factor * u.evaluate(config.R0).value - w0);
        for (std::size_t k = 0; k < u.nodes().size() && u.nodes()[k] <= config.R0; ++k)
            plateau = std::max(plateau, std::abs(map.factor * u.values()[k] - w0));
        row.plateau_gap = plateau;
        row.scaled_extrema = scaled_extrema(u, map);

        const EnergyBreakdown energy = energy_breakdown(u);
        row.level = energy.level;
        row.nehari_residual = energy.nehari_residual();
        row.gradient_residual = gradient_identity_residual(u, v, map);
        row.ode_residual = ode_residual(v, 1e-3, true);

        const ProblemParams pos{config.p, config.N, alpha, 1};
        const RadialProfile u_pos =
            config.m == 1 ? u : solve_henon_radial(pos, config.solver);
        row.scaled_constant =
            scaled_best_constant(alpha, config.p, best_constant_radial(pos, u_pos));
        row.constant_gap =
            std::abs(row.scaled_constant - limit.constant_limit) / limit.constant_limit;

        const SingularSpectrum spec = singular_spectrum_henon(params, v, mesh);
        if (!spec.eigen.complete) {
            throw NotConverged("found " + std::to_string(spec.lambda_small.size())
                               + " negative eigenvalues, expected " + std::to_string(config.m));
        }
        row.lambda = spec.lambda_small;
        row.Lambda_hat = spec.Lambda_hat;
        for (double L : row.Lambda_hat)
            row.Lambda_hat_over_alpha2.push_back(L / (alpha * alpha));

        const MorseReport morse = morse_index(row.Lambda_hat, config.N, alpha);
        row.morse_total = morse.total_index;
        const BoundJ bj = lower_bound_J(alpha, config.N, limit.lambda.back(), config.m);
        row.J = bj.J;
        row.bound_J = bj.bound;
        if (config.m >= 2 && config.theta) {
            const BoundK bk = lower_bound_K(alpha, config.N, limit.lambda[limit.lambda.size() - 2],
                                            config.m, *config.theta);
            row.K = bk.K;
            row.bound_K = bk.bound;
        }
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

SweepReport run_sweep(const SweepConfig& config)
{
    config.validate();
    SweepReport report;
    report.config = config;
    const GradedMesh mesh = GradedMesh::build(config.mesh_n, config.t_min, config.grading);
    report.limit = compute_limit_objects(config, mesh);

    const std::size_t n = config.alphas.size();
    report.rows.resize(n);
    unsigned workers = config.jobs > 0 ? static_cast<unsigned>(config.jobs)
                                       : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < n; k = next++)
            report.rows[k] = compute_row(config.alphas[k], config, report.limit, mesh);
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back(work);
    }

    report.checks = evaluate_checks(report, config.checks);
    return report;
}

TrendResult converging_trend(const std::vector<double>& values, double threshold)
{
    if (values.size() < 2)
        return {false, "insufficient rows"};
    for (double v : values) {
        if (std::isnan(v))
            return {false, "missing values"};
    }
    const bool dec = strictly_decreasing(values, 0) || strictly_decreasing(values, 1);
    const bool below = values.back() < threshold;
    std::string detail = "final " + fmt(values.back()) + (below ? " < " : " >= ") + fmt(threshold);
    if (!dec)
        detail += "; not strictly decreasing";
    return {dec && below, detail};
}

ExtremaEnvelope check_extrema_rate(const SweepReport& report)
{
    ExtremaEnvelope out;
    if (report.rows.size() < 3) {
        out.detail = "insufficient rows";
        return out;
    }
    out.min = std::numeric_limits<double>::infinity();
    out.max = 0.0;
    out.decreasing_in_i = true;
    for (const auto& row : report.rows) {
        if (!row.ok() || row.scaled_extrema.empty()) {
            out.detail = "row at alpha " + fmt(row.alpha) + " has no extrema";
            out.decreasing_in_i = false;
            return out;
        }
        for (double x : row.scaled_extrema) {
            out.min = std::min(out.min, x);
            out.max = std::max(out.max, x);
        }
        if (!strictly_decreasing(row.scaled_extrema))
            out.decreasing_in_i = false;
    }
    const double ratio = out.max / out.min;
    out.passed = out.min > 0.0 && ratio < 10.0 && out.decreasing_in_i;
    out.detail = "envelope [" + fmt(out.min) + ", " + fmt(out.max) + "], ratio " + fmt(ratio)
                 + (out.decreasing_in_i ? "" : "; not decreasing in i");
    return out;
}

ExpansionFit fit_expansion(const SweepReport& report, int i)
{
    if (i < 1)
        throw InvalidArgs("eigenvalue index is 1-based");
    const auto k = static_cast<std::size_t>(i - 1);
    std::vector<double> as, ls;
    for (const auto& row : report.rows) {
        if (row.ok() && k < row.Lambda_hat.size()) {
            as.push_back(row.alpha);
            ls.push_back(row.Lambda_hat[k]);
        }
    }
    if (as.size() < 4)
        throw InvalidArgs("expansion fit needs >= 4 rows with Lambda_hat_" + std::to_string(i));
    const std::size_t start = tail_start(as.size());
    ExpansionFit fit;
    fit.alphas_used.assign(as.begin() + static_cast<long>(start), as.end());
    const double lo = fit.alphas_used.front();
    const double hi = fit.alphas_used.back();
    if (!(hi >= 2.0 * lo))
        throw IllConditioned("fit range [" + fmt(lo) + ", " + fmt(hi) + "] spans less than one doubling");

    const auto rows = static_cast<Eigen::Index>(fit.alphas_used.size());
    Eigen::MatrixXd A(rows, 3);
    Eigen::VectorXd b(rows);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const double s = fit.alphas_used[static_cast<std::size_t>(r)] / hi;
        A(r, 0) = s * s;
        A(r, 1) = s;
        A(r, 2) = 1.0;
        b(r) = ls[start + static_cast<std::size_t>(r)];
    }
    const Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
    fit.quad_coeff = c(0) / (hi * hi);
    fit.lin_coeff = c(1) / hi;
    fit.const_coeff = c(2);
    return fit;
}

MonotonicityFlags monotonicity_report(const SweepReport& report)
{
    MonotonicityFlags out;
    const std::size_t n = report.rows.size();
    if (n < 2) {
        out.flags.push_back("insufficient rows");
        return out;
    }
    const std::size_t start = tail_start(n);

    std::size_t stable = n - 1;
    while (stable > 0 && report.rows[stable - 1].ok() && report.rows[stable].ok()
           && report.rows[stable].morse_total >= report.rows[stable - 1].morse_total)
        --stable;
    out.morse_stable_from = report.rows[stable].alpha;
    out.morse_nondecreasing_tail = stable <= start;
    if (!out.morse_nondecreasing_tail)
        out.flags.push_back("Morse index decreases on the tail");

    const auto level = column(report, [](const SweepRow& r) { return r.level; });
    out.level_increasing = true;
    for (std::size_t k = 1; k < n; ++k) {
        if (!(level[k] > level[k - 1]))
            out.level_increasing = false;
    }
    if (!out.level_increasing)
        out.flags.push_back("level not strictly increasing");

    for (int i = 0; i < report.config.m; ++i) {
        const auto L = column(report, [&](const SweepRow& r) {
            return at_or_nan(r.Lambda_hat, static_cast<std::size_t>(i));
        });
        const bool dec = strictly_decreasing(L, start);
        out.lambda_decreasing_tail.push_back(dec);
        bool any_decrease = false;
        for (std::size_t k = start + 1; k < n; ++k) {
            if (L[k] < L[k - 1])
                any_decrease = true;
        }
        if (!any_decrease)
            out.flags.push_back("Lambda_hat_" + std::to_string(i + 1) + ": no strict decrease detected");
        else if (!dec)
            out.flags.push_back("Lambda_hat_" + std::to_string(i + 1) + ": not strictly decreasing on the tail");
    }
    return out;
}

ConstantsTable constants_limit(const SweepReport& report, double p, int N)
{
    ConstantsTable out;
    out.target = best_constant_limit(p, N, report.limit.S_p);
    std::vector<double> gaps;
    for (const auto& row : report.rows) {
        const double gap = std::abs(row.scaled_constant - out.target) / out.target;
        out.rows.push_back({row.alpha, row.scaled_constant, gap});
        gaps.push_back(gap);
    }
    out.gap_decreasing = strictly_decreasing(gaps);
    const TrendResult t = converging_trend(gaps, 0.02);
    out.passed = t.passed;
    out.detail = "gap " + t.detail;
    return out;
}

std::vector<CheckResult> evaluate_checks(const SweepReport& report,
                                         const std::vector<std::string>& names)
{
    std::vector<CheckResult> out;
    const int m = report.config.m;
    auto push = [&](const std::string& name, bool passed, std::string detail) {
        out.push_back({name, passed, std::move(detail)});
    };
    auto failed_rows = [&] {
        std::string s;
        for (const auto& row : report.rows) {
            if (!row.ok())
                s += "; alpha " + fmt(row.alpha) + ": " + row.error;
        }
        return s;
    };

    for (const auto& name : names) {
        try {
            if (name == "convergence") {
                const auto a = converging_trend(column(report, [](const SweepRow& r) { return r.sup_gap; }), 1e-2);
                const auto b = converging_trend(column(report, [](const SweepRow& r) { return r.sup_gap_deriv; }), 5e-2);
                push(name, a.passed && b.passed, "|v-w|: " + a.detail + "; |v'-w'|: " + b.detail + failed_rows());
            } else if (name == "zeros") {
                bool ok = m >= 2;
                std::string detail = ok ? "" : "no interior zeros (m = 1)";
                for (int i = 0; i + 1 < m; ++i) {
                    const auto t = converging_trend(column(report, [&](const SweepRow& r) {
                        return at_or_nan(r.zero_limit_error, static_cast<std::size_t>(i));
                    }), 5e-2);
                    ok = ok && t.passed;
                    detail += (i ? "; " : "") + std::string("zero ") + std::to_string(i + 1) + ": " + t.detail;
                }
                push(name, ok, detail + failed_rows());
            } else if (name == "plateau") {
                const auto t = converging_trend(column(report, [](const SweepRow& r) { return r.plateau_gap; }), 1e-2);
                push(name, t.passed, t.detail + failed_rows());
            } else if (name == "extrema") {
                const auto e = check_extrema_rate(report);
                push(name, e.passed, e.detail);
            } else if (name == "identities") {
                bool ok = !report.rows.empty();
                double neh = 0.0, grad = 0.0, ode = 0.0;
                for (const auto& row : report.rows) {
                    ok = ok && row.ok() && row.nehari_residual < 1e-6 && row.gradient_residual < 1e-8
                         && row.ode_residual < 1e-6;
                    neh = std::max(neh, row.nehari_residual);
                    grad = std::max(grad, row.gradient_residual);
                    ode = std::max(ode, row.ode_residual);
                }
                push(name, ok, "max Nehari " + fmt(neh) + ", gradient " + fmt(grad) + ", ODE " + fmt(ode) + failed_rows());
            } else if (name == "eigen_limit") {
                bool ok = true;
                std::string detail;
                for (int i = 0; i < m; ++i) {
                    const auto k = static_cast<std::size_t>(i);
                    const double lam = report.limit.lambda.at(k);
                    const auto t = converging_trend(column(report, [&](const SweepRow& r) {
                        return std::abs(at_or_nan(r.lambda, k) - lam);
                    }), 5e-2);
                    const ExpansionFit fit = fit_expansion(report, i + 1);
                    const double ratio = fit.quad_coeff / (lam / 4.0);
                    const bool q = ratio >= 0.95 && ratio <= 1.05;
                    ok = ok && t.passed && q;
                    detail += (i ? "; " : "") + std::string("i=") + std::to_string(i + 1) + " gap " + t.detail
                              + ", quad/(lambda/4) " + fmt(ratio);
                }
                push(name, ok, detail + failed_rows());
            } else if (name == "linear_coeff") {
                bool ok = true;
                std::string detail;
                for (int i = 0; i < m; ++i) {
                    const auto k = static_cast<std::size_t>(i);
                    const ExpansionFit fit = fit_expansion(report, i + 1);
                    const double c = report.limit.mu.c.at(k);
                    const double rel = std::abs(fit.lin_coeff - c) / std::abs(c);
                    ok = ok && rel <= 0.15;
                    detail += (i ? "; " : "") + std::string("i=") + std::to_string(i + 1) + " fit " + fmt(fit.lin_coeff)
                              + " vs c " + fmt(c) + " (rel " + fmt(rel) + ")";
                }
                push(name, ok, detail);
            } else if (name == "morse") {
                const std::size_t n = report.rows.size();
                bool ok = n >= 2;
                std::string detail = ok ? "" : "insufficient rows";
                for (std::size_t k = n >= 3 ? n - 3 : 0; k < n; ++k) {
                    const auto& row = report.rows[k];
                    const bool bj = row.ok() && row.morse_total >= row.bound_J;
                    const bool bk = !row.bound_K || row.morse_total >= *row.bound_K;
                    ok = ok && bj && bk;
                    if (!bj || !bk)
                        detail += "alpha " + fmt(row.alpha) + ": index " + std::to_string(row.morse_total)
                                  + " below bound; ";
                }
                const MonotonicityFlags mf = monotonicity_report(report);
                const bool lam_dec = std::all_of(mf.lambda_decreasing_tail.begin(), mf.lambda_decreasing_tail.end(),
                                                 [](bool b) { return b; });
                ok = ok && mf.morse_nondecreasing_tail && mf.level_increasing && lam_dec;
                for (const auto& f : mf.flags)
                    detail += f + "; ";
                if (mf.morse_stable_from)
                    detail += "index nondecreasing from alpha " + fmt(*mf.morse_stable_from);
                push(name, ok, detail + failed_rows());
            } else if (name == "constants") {
                const auto t = constants_limit(report, report.config.p, report.config.N);
                push(name, t.passed, t.detail + failed_rows());
            } else {
                push(name, false, "unknown check");
            }
        } catch (const std::exception& e) {
            push(name, false, e.what());
        }
    }
    return out;
}

} // namespace henon
