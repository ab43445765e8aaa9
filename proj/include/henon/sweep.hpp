#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "henon/mesh.hpp"
#include "henon/params.hpp"
#include "henon/profile.hpp"
#include "henon/spectral.hpp"

namespace henon {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// Check names accepted by run_sweep / evaluate_checks.
inline const std::vector<std::string>& known_checks()
{
    static const std::vector<std::string> names = {
        "convergence", "zeros", "plateau", "extrema", "identities",
        "eigen_limit", "linear_coeff", "morse", "constants"};
    return names;
}

struct SweepConfig {
    double p = 3.0;
    int N = 3;
    int m = 2;
    std::vector<double> alphas = {10, 20, 40, 80, 160, 320};
    double R0 = 0.5;
    std::optional<double> theta = 1.1;  // only used when m >= 2
    SolverConfig solver;
    int mesh_n = 16000;
    double t_min = 1e-8;
    double grading = 1.05;
    std::vector<std::string> checks = known_checks();
    int jobs = 0;  // 0: hardware concurrency

    /// Throws InvalidParams for unsorted or subcritical alphas, unknown checks, bad R0.
    void validate() const;
};

/// Geometric list a, a q, ..., b with n entries (n >= 2), or {a} when n == 1.
std::vector<double> geometric_alphas(double a, double b, int n);

struct SweepRow {
    double alpha = kNaN;
    double M = kNaN;
    double sup_gap = kNaN;        // |v - w|_inf
    double sup_gap_deriv = kNaN;  // |v' - w'|_inf
    std::vector<double> r_zeros;  // interior zeros of u, increasing
    std::vector<double> t_zeros;  // interior zeros of v
    std::vector<double> zero_limit_error;  // |alpha (1 - r_i) + 2 log t_i|, t_i zeros of w
    double plateau_gap = kNaN;
    std::vector<double> scaled_extrema;
    std::vector<double> lambda;
    std::vector<double> Lambda_hat;
    std::vector<double> Lambda_hat_over_alpha2;
    std::uint64_t morse_total = 0;
    int J = 0;
    std::uint64_t bound_J = 0;
    std::optional<int> K;
    std::optional<std::uint64_t> bound_K;
    double level = kNaN;
    double nehari_residual = kNaN;
    double gradient_residual = kNaN;
    double ode_residual = kNaN;
    double scaled_constant = kNaN;
    double constant_gap = kNaN;
    std::string error;

    bool ok() const { return error.empty(); }
};

/// Objects of the alpha -> infinity limit, computed once per sweep.
struct LimitObjects {
    RadialProfile w;
    RadialProfile w_pos;
    std::vector<double> lambda;
    double S_p = kNaN;
    double constant_limit = kNaN;
    MuCurve mu;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SweepReport {
    SweepConfig config;
    LimitObjects limit;
    std::vector<SweepRow> rows;
    std::vector<CheckResult> checks;

    bool all_passed() const;
    /// Copy keeping only rows with alpha <= max_alpha (checks cleared).
    SweepReport restricted(double max_alpha) const;
};

LimitObjects compute_limit_objects(const SweepConfig& config, const GradedMesh& mesh);

/// One row; errors are caught and stored in row.error.
SweepRow compute_row(double alpha, const SweepConfig& config, const LimitObjects& limit,
                     const GradedMesh& mesh);

/// Rows in parallel (order-stable), then the requested checks.
SweepReport run_sweep(const SweepConfig& config);

struct TrendResult {
    bool passed = false;
    std::string detail;
};

/// Strictly decreasing after discarding at most the first value, and the last
/// value below `threshold`. Fewer than 2 values gives "insufficient rows".
TrendResult converging_trend(const std::vector<double>& values, double threshold);

struct ExtremaEnvelope {
    bool passed = false;
    double min = kNaN;
    double max = kNaN;
    bool decreasing_in_i = false;
    std::string detail;
};
ExtremaEnvelope check_extrema_rate(const SweepReport& report);

struct ExpansionFit {
    double quad_coeff = kNaN;
    double lin_coeff = kNaN;
    double const_coeff = kNaN;
    std::vector<double> alphas_used;
};
/// Least squares of Lambda_hat_i(alpha) on (alpha^2, alpha, 1) over the upper
/// half of the rows (1-based i). Needs >= 4 valid rows; IllConditioned when
/// the used alphas span less than one doubling.
ExpansionFit fit_expansion(const SweepReport& report, int i);

struct MonotonicityFlags {
    bool morse_nondecreasing_tail = false;
    std::optional<double> morse_stable_from;  // first alpha after which no decrease occurs
    bool level_increasing = false;
    std::vector<bool> lambda_decreasing_tail;  // per i
    std::vector<std::string> flags;
};
MonotonicityFlags monotonicity_report(const SweepReport& report);

struct ConstantsRow {
    double alpha;
    double scaled_constant;
    double gap;
};
struct ConstantsTable {
    std::vector<ConstantsRow> rows;
    double target = kNaN;
    bool gap_decreasing = false;
    bool passed = false;
    std::string detail;
};
ConstantsTable constants_limit(const SweepReport& report, double p, int N);

std::vector<CheckResult> evaluate_checks(const SweepReport& report,
                                         const std::vector<std::string>& names);

} // namespace henon
