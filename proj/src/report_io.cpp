#include "henon/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>

namespace henon::io {

using nlohmann::json;

namespace {

json number_or_null(double x)
{
    return std::isfinite(x) ? json(x) : json(nullptr);
}

json numbers(const std::vector<double>& xs)
{
    json out = json::array();
    for (double x : xs)
        out.push_back(number_or_null(x));
    return out;
}

std::string csv_quote(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

void append_indexed(std::vector<std::string>& cols, const char* stem, int count)
{
    for (int i = 1; i <= count; ++i)
        cols.push_back(std::string(stem) + "_" + std::to_string(i));
}

void append_values(std::vector<std::string>& cells, const std::vector<double>& xs, int count)
{
    for (int i = 0; i < count; ++i) {
        const auto k = static_cast<std::size_t>(i);
        cells.push_back(k < xs.size() ? format_double(xs[k]) : "nan");
    }
}

} // namespace

std::string format_double(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string fnv1a_hex(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json manifest(const std::string& command, const json& config, double wall_time_s)
{
    return {{"command", command},
            {"config", config},
            {"version", kToolVersion},
            {"wall_time_s", wall_time_s},
            {"config_hash", fnv1a_hex(config.dump())}};
}

json to_json(const SolverConfig& c)
{
    return {{"rel_tol", c.rel_tol},
            {"abs_tol", c.abs_tol},
            {"t_seed", c.t_seed},
            {"max_horizon", c.max_horizon ? json(*c.max_horizon) : json(nullptr)},
            {"dense_nodes", c.dense_nodes},
            {"grading_ratio", c.grading_ratio}};
}

json to_json(const SweepConfig& c)
{
    return {{"p", c.p},
            {"N", c.N},
            {"m", c.m},
            {"alphas", c.alphas},
            {"R0", c.R0},
            {"theta", c.theta ? json(*c.theta) : json(nullptr)},
            {"solver", to_json(c.solver)},
            {"mesh_n", c.mesh_n},
            {"t_min", c.t_min},
            {"grading", c.grading},
            {"checks", c.checks}};
}

json to_json(const RadialProfile& profile)
{
    const auto& eq = profile.equation();
    json j = {{"variable", to_string(profile.variable())},
              {"equation", {{"dim", eq.dim}, {"weight", eq.weight}, {"p", eq.p}}},
              {"m", profile.nodal_sets()},
              {"amplitude", profile.amplitude()},
              {"zeros", numbers(profile.zeros())},
              {"extrema", {{"locations", numbers(profile.extrema_locs())},
                           {"values", numbers(profile.extrema_vals())}}},
              {"nodes", numbers(profile.nodes())},
              {"values", numbers(profile.values())},
              {"derivs", numbers(profile.derivs())}};
    if (const auto& pp = profile.params()) {
        j["params"] = {{"p", pp->p}, {"N", pp->N}, {"alpha", pp->alpha}, {"m", pp->m}};
    }
    return j;
}

json to_json(const EigenResult& eig)
{
    json fns = json::array();
    for (const auto& f : eig.eigenfunctions)
        fns.push_back(numbers(f));
    return {{"eigenvalues", numbers(eig.eigenvalues)},
            {"M", eig.M},
            {"dof", eig.dof},
            {"requested", eig.requested},
            {"complete", eig.complete},
            {"nodes", numbers(eig.nodes)},
            {"eigenfunctions", fns}};
}

json to_json(const MorseReport& report)
{
    json pairs = json::array();
    for (const auto& pr : report.pairs)
        pairs.push_back({{"i", pr.i}, {"j", pr.j}, {"multiplicity", pr.multiplicity}});
    json degenerate = json::array();
    for (const auto& pr : report.degenerate)
        degenerate.push_back({{"i", pr.i}, {"j", pr.j}, {"multiplicity", pr.multiplicity}});
    json j = {{"alpha", report.alpha},
              {"N", report.N},
              {"Lambda_hat", numbers(report.Lambda_hat)},
              {"pairs", pairs},
              {"degenerate", degenerate},
              {"total_index", report.total_index},
              {"bound_J", nullptr},
              {"bound_K", nullptr}};
    if (report.bound_J)
        j["bound_J"] = {{"J", report.bound_J->J}, {"bound", report.bound_J->bound}};
    if (report.bound_K)
        j["bound_K"] = {{"theta", report.bound_K->theta},
                        {"K", report.bound_K->K},
                        {"bound", report.bound_K->bound}};
    return j;
}

json to_json(const SweepRow& row)
{
    return {{"alpha", row.alpha},
            {"M", number_or_null(row.M)},
            {"sup_gap", number_or_null(row.sup_gap)},
            {"sup_gap_deriv", number_or_null(row.sup_gap_deriv)},
            {"r_zeros", numbers(row.r_zeros)},
            {"t_zeros", numbers(row.t_zeros)},
            {"zero_limit_error", numbers(row.zero_limit_error)},
            {"plateau_gap", number_or_null(row.plateau_gap)},
            {"scaled_extrema", numbers(row.scaled_extrema)},
            {"lambda", numbers(row.lambda)},
            {"Lambda_hat", numbers(row.Lambda_hat)},
            {"morse_total", row.morse_total},
            {"J", row.J},
            {"bound_J", row.bound_J},
            {"K", row.K ? json(*row.K) : json(nullptr)},
            {"bound_K", row.bound_K ? json(*row.bound_K) : json(nullptr)},
            {"level", number_or_null(row.level)},
            {"scaled_constant", number_or_null(row.scaled_constant)},
            {"constant_gap", number_or_null(row.constant_gap)},
            {"error", row.error}};
}

json summary_json(const SweepReport& report)
{
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    const auto& lim = report.limit;
    return {{"limit",
             {{"w_amplitude", lim.w.nodes().empty() ? json(nullptr) : json(lim.w.amplitude())},
              {"lambda", numbers(lim.lambda)},
              {"mu_prime_2", numbers(lim.mu.mu_prime_2)},
              {"c", numbers(lim.mu.c)},
              {"S_p", number_or_null(lim.S_p)},
              {"constant_limit", number_or_null(lim.constant_limit)}}},
            {"checks", checks},
            {"all_passed", report.all_passed()}};
}

std::vector<std::string> sweep_csv_header(int m)
{
    std::vector<std::string> cols = {"alpha", "M", "sup_gap", "sup_gap_deriv"};
    append_indexed(cols, "r_zero", m - 1);
    append_indexed(cols, "t_zero", m - 1);
    append_indexed(cols, "zero_limit_error", m - 1);
    cols.push_back("plateau_gap");
    append_indexed(cols, "scaled_extremum", m);
    append_indexed(cols, "lambda", m);
    append_indexed(cols, "Lambda_hat", m);
    append_indexed(cols, "Lambda_hat_over_alpha2", m);
    for (const char* c : {"morse_total", "J", "bound_J", "K", "bound_K", "level", "nehari_residual",
                          "gradient_residual", "ode_residual", "scaled_constant", "constant_gap",
                          "error"})
        cols.push_back(c);
    return cols;
}

void write_sweep_csv(std::ostream& os, const SweepReport& report, const json& manifest_obj)
{
    const int m = report.config.m;
    os << "# schema: " << kSweepSchema << '\n';
    os << "# manifest: " << manifest_obj.dump() << '\n';
    const auto header = sweep_csv_header(m);
    for (std::size_t k = 0; k < header.size(); ++k)
        os << (k ? "," : "") << header[k];
    os << '\n';
    for (const auto& row : report.rows) {
        std::vector<std::string> cells = {format_double(row.alpha), format_double(row.M),
                                          format_double(row.sup_gap),
                                          format_double(row.sup_gap_deriv)};
        append_values(cells, row.r_zeros, m - 1);
        append_values(cells, row.t_zeros, m - 1);
        append_values(cells, row.zero_limit_error, m - 1);
        cells.push_back(format_double(row.plateau_gap));
        append_values(cells, row.scaled_extrema, m);
        append_values(cells, row.lambda, m);
        append_values(cells, row.Lambda_hat, m);
        append_values(cells, row.Lambda_hat_over_alpha2, m);
        cells.push_back(std::to_string(row.morse_total));
        cells.push_back(std::to_string(row.J));
        cells.push_back(std::to_string(row.bound_J));
        cells.push_back(row.K ? std::to_string(*row.K) : "");
        cells.push_back(row.bound_K ? std::to_string(*row.bound_K) : "");
        for (double x : {row.level, row.nehari_residual, row.gradient_residual, row.ode_residual,
                         row.scaled_constant, row.constant_gap})
            cells.push_back(format_double(x));
        cells.push_back(csv_quote(row.error));
        for (std::size_t k = 0; k < cells.size(); ++k)
            os << (k ? "," : "") << cells[k];
        os << '\n';
    }
}

} // namespace henon::io
