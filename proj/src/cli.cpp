#include "henon/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "henon/errors.hpp"
#include "henon/morse.hpp"
#include "henon/radial_solver.hpp"
#include "henon/report_io.hpp"
#include "henon/spectral.hpp"
#include "henon/sweep.hpp"

namespace henon::cli {

using nlohmann::json;

namespace {

struct Common {
    double p = 3.0;
    int N = 3;
    double alpha = 0.0;
    int m = 1;
    std::string out = "-";
};

struct SpectrumOpts {
    int mesh_n = 16000;
    double t_min = 1e-8;
    bool zero_potential = false;
};

double parse_number(const std::string& s)
{
    double x = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    while (first < last && *first == ' ')
        ++first;
    while (last > first && last[-1] == ' ')
        --last;
    const auto res = std::from_chars(first, last, x);
    if (res.ec != std::errc() || res.ptr != last || first == last)
        throw InvalidArgs("malformed number '" + s + "'");
    return x;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        parts.push_back(cur);
    if (!s.empty() && s.back() == sep)
        parts.emplace_back();
    return parts;
}

// "10,20,40" or "a:b:n" (n geometric points from a to b)
std::vector<double> parse_alphas(const std::string& spec)
{
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3)
            throw InvalidArgs("geometric alpha range must be a:b:n, got '" + spec + "'");
        const double n = parse_number(parts[2]);
        if (n != std::floor(n) || n < 1 || n > 10000)
            throw InvalidArgs("alpha count must be a positive integer, got '" + parts[2] + "'");
        return geometric_alphas(parse_number(parts[0]), parse_number(parts[1]), static_cast<int>(n));
    }
    std::vector<double> out;
    for (const auto& part : split(spec, ','))
        out.push_back(parse_number(part));
    if (out.empty())
        throw InvalidArgs("empty alpha list");
    return out;
}

std::vector<std::string> parse_checks(const std::string& spec)
{
    if (spec == "all")
        return known_checks();
    std::vector<std::string> out;
    for (const auto& part : split(spec, ',')) {
        if (!part.empty())
            out.push_back(part);
    }
    return out;
}

void emit(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw InvalidArgs("cannot open '" + path + "' for writing");
    f << text;
}

json params_json(const Common& c)
{
    return {{"p", c.p}, {"N", c.N}, {"alpha", c.alpha}, {"m", c.m}};
}

void add_common(CLI::App* sub, Common& c, bool with_alpha)
{
    sub->add_option("--p", c.p, "Exponent p > 1")->capture_default_str();
    sub->add_option("--N", c.N, "Space dimension N >= 2")->capture_default_str();
    if (with_alpha)
        sub->add_option("--alpha", c.alpha, "Weight exponent alpha")->required();
    sub->add_option("--m", c.m, "Number of nodal sets")->capture_default_str();
    sub->add_option("--out", c.out, "Output path ('-' for stdout)")->capture_default_str();
}

void add_spectrum(CLI::App* sub, SpectrumOpts& s)
{
    sub->add_option("--mesh-n", s.mesh_n, "Spectral mesh cells")->capture_default_str();
    sub->add_option("--tmin", s.t_min, "Left end of the spectral mesh")->capture_default_str();
    sub->add_flag("--zero-potential", s.zero_potential, "Drop the potential (positive operator)");
}

struct SpectrumOutcome {
    ProblemParams params;
    EigenResult eigen;
    std::vector<double> Lambda_hat;
    GradedMesh mesh;
};

SpectrumOutcome compute_spectrum(const Common& c, const SpectrumOpts& s, const SolverConfig& solver)
{
    SpectrumOutcome o{ProblemParams{c.p, c.N, c.alpha, c.m}, {}, {}, {}};
    o.params.validate();
    o.mesh = GradedMesh::build(s.mesh_n, s.t_min);
    const double M = o.params.M_alpha();
    if (s.zero_potential) {
        o.eigen = negative_eigenvalues(assemble_pencil([](double) { return 0.0; }, M, o.mesh), c.m);
        const double scale = (c.alpha + 2.0) / 2.0;
        for (double l : o.eigen.eigenvalues)
            o.Lambda_hat.push_back(scale * scale * l);
    } else {
        const RadialProfile v = solve_henon_transformed(o.params, solver);
        const SingularSpectrum spec = singular_spectrum_henon(o.params, v, o.mesh);
        o.eigen = spec.eigen;
        o.Lambda_hat = spec.Lambda_hat;
    }
    return o;
}

json spectrum_config(const Common& c, const SpectrumOpts& s, const SolverConfig& solver)
{
    json j = params_json(c);
    j["mesh_n"] = s.mesh_n;
    j["t_min"] = s.t_min;
    j["zero_potential"] = s.zero_potential;
    j["solver"] = io::to_json(solver);
    return j;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Radial nodal solutions of the Henon equation, their limit profiles, "
                 "singular spectra and Morse indices."};
    app.require_subcommand(1);
    app.set_version_flag("--version", io::kToolVersion);

    Common common;
    SpectrumOpts spec_opts;
    std::string var = "r";
    std::optional<double> theta;

    auto* solve = app.add_subcommand("solve", "Solve for the radial m-nodal profile");
    add_common(solve, common, true);
    solve->add_option("--var", var, "Variable of the output profile")
        ->check(CLI::IsMember({"r", "t"}))
        ->capture_default_str();

    auto* spectrum = app.add_subcommand("spectrum", "Negative singular eigenvalues");
    add_common(spectrum, common, true);
    add_spectrum(spectrum, spec_opts);

    auto* morse = app.add_subcommand("morse", "Morse index and closed-form lower bounds");
    add_common(morse, common, true);
    add_spectrum(morse, spec_opts);
    morse->add_option("--theta", theta, "theta > 1 for the K bound (needs m >= 2)");

    SweepConfig sweep_cfg;
    std::string alphas_spec = "10,20,40,80,160,320";
    std::string checks_spec = "all";
    std::string summary_path;
    std::optional<int> jobs;
    double sweep_theta = 1.1;
    Common sweep_common;
    sweep_common.m = sweep_cfg.m;
    auto* sweep = app.add_subcommand("sweep", "Alpha sweep with convergence checks");
    add_common(sweep, sweep_common, false);
    sweep->add_option("--alphas", alphas_spec, "Comma list or a:b:n geometric range")
        ->capture_default_str();
    sweep->add_option("--checks", checks_spec, "Comma list of checks, or 'all'")
        ->capture_default_str();
    sweep->add_option("--summary", summary_path, "Write the check summary (JSON) here");
    sweep->add_option("--R0", sweep_cfg.R0, "Plateau radius")->capture_default_str();
    sweep->add_option("--theta", sweep_theta, "theta > 1 for the K bound")->capture_default_str();
    sweep->add_option("--mesh-n", sweep_cfg.mesh_n, "Spectral mesh cells")->capture_default_str();
    sweep->add_option("--tmin", sweep_cfg.t_min, "Left end of the spectral mesh")->capture_default_str();
    sweep->add_option("--jobs", jobs, "Worker threads (default: HENON_LAB_JOBS or all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const SolverConfig solver;
    try {
        if (solve->parsed()) {
            const ProblemParams params{common.p, common.N, common.alpha, common.m};
            params.validate();
            const RadialProfile prof = var == "t" ? solve_henon_transformed(params, solver)
                                                  : solve_henon_radial(params, solver);
            json cfg = params_json(common);
            cfg["var"] = var;
            cfg["solver"] = io::to_json(solver);
            json doc = {{"schema", io::kProfileSchema},
                        {"manifest", io::manifest("solve", cfg, seconds_since(t0))},
                        {"profile", io::to_json(prof)}};
            emit(common.out, doc.dump(1) + "\n", out);
            return kSuccess;
        }

        if (spectrum->parsed()) {
            const SpectrumOutcome o = compute_spectrum(common, spec_opts, solver);
            json doc = {{"schema", io::kSpectrumSchema},
                        {"manifest", io::manifest("spectrum", spectrum_config(common, spec_opts, solver),
                                                  seconds_since(t0))},
                        {"lambda", o.eigen.eigenvalues},
                        {"Lambda_hat", o.Lambda_hat},
                        {"complete", o.eigen.complete},
                        {"eigen", io::to_json(o.eigen)}};
            emit(common.out, doc.dump(1) + "\n", out);
            return kSuccess;
        }

        if (morse->parsed()) {
            if (theta && common.m < 2) {
                err << "warning: --theta ignored, the K bound needs m >= 2\n";
                theta.reset();
            }
            if (theta && !(*theta > 1.0))
                throw InvalidArgs("--theta must be > 1, got " + std::to_string(*theta));
            const SpectrumOutcome o = compute_spectrum(common, spec_opts, solver);
            if (!o.eigen.complete)
                throw NotConverged("found " + std::to_string(o.eigen.eigenvalues.size())
                                   + " negative eigenvalues, expected " + std::to_string(common.m));
            MorseReport report = morse_index(o.Lambda_hat, common.N, common.alpha);
            const std::vector<double> lam = mu_at(2.0, common.p, common.m, o.mesh, solver);
            report.bound_J = lower_bound_J(common.alpha, common.N, lam.back(), common.m);
            if (theta)
                report.bound_K = lower_bound_K(common.alpha, common.N, lam[lam.size() - 2], common.m, *theta);
            json cfg = spectrum_config(common, spec_opts, solver);
            cfg["theta"] = theta ? json(*theta) : json(nullptr);
            json doc = {{"schema", io::kMorseSchema},
                        {"manifest", io::manifest("morse", cfg, seconds_since(t0))},
                        {"limit_lambda", lam},
                        {"report", io::to_json(report)}};
            emit(common.out, doc.dump(1) + "\n", out);
            return kSuccess;
        }

        if (sweep->parsed()) {
            sweep_cfg.p = sweep_common.p;
            sweep_cfg.N = sweep_common.N;
            sweep_cfg.m = sweep_common.m;
            sweep_cfg.alphas = parse_alphas(alphas_spec);
            sweep_cfg.checks = parse_checks(checks_spec);
            sweep_cfg.theta = sweep_theta;
            if (jobs) {
                sweep_cfg.jobs = *jobs;
            } else if (const char* env = std::getenv("HENON_LAB_JOBS")) {
                sweep_cfg.jobs = static_cast<int>(parse_number(env));
            }
            const SweepReport report = run_sweep(sweep_cfg);
            const json manifest = io::manifest("sweep", io::to_json(sweep_cfg), seconds_since(t0));
            std::ostringstream csv;
            io::write_sweep_csv(csv, report, manifest);
            emit(sweep_common.out, csv.str(), out);

            for (const auto& c : report.checks)
                err << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
            if (!summary_path.empty()) {
                json doc = io::summary_json(report);
                doc["schema"] = io::kSummarySchema;
                doc["manifest"] = manifest;
                emit(summary_path, doc.dump(1) + "\n", out);
            }
            return report.all_passed() ? kSuccess : kCheckFailed;
        }
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NumericFailure& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    } catch (const std::exception& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    }
    return kUsage;
}

int run(int argc, const char* const* argv)
{
    return run(argc, argv, std::cout, std::cerr);
}

} // namespace henon::cli
