// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

// bergman-zeros: command line front end for the zero-statistics library.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical diagnostic failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bergman/basis.hpp"
#include "bergman/counts.hpp"
#include "bergman/experiment.hpp"
#include "bergman/intensity.hpp"

namespace {

using bergman::BasisSpec;
using bergman::CountEstimate;
using bergman::CountMethod;
using json = nlohmann::ordered_json;

constexpr int kExitValidation = 2;
constexpr int kExitDiagnostic = 3;

// Writes to the named file, or to stdout for "" and "-".
class Output
{
  public:
    explicit Output(const std::string& path)
    {
        if (path.empty() || path == "-")
            return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_)
            throw bergman::ParameterError("cannot open " + path + " for writing");
    }
    std::ostream& stream() { return file_ ? *file_ : std::cout; }

  private:
    std::unique_ptr<std::ofstream> file_;
};

json config_json(const bergman::ExperimentConfig& config)
{
    json j = json::object();
    for (const auto& [key, value] : config_entries(config))
        j[key] = value;
    return j;
}

void write_json(const std::string& path, const json& j)
{
    Output out(path);
    out.stream() << j.dump(2) << '\n';
}

json estimate_json(const CountEstimate& e)
{
    json j{{"method", bergman::to_string(e.method)}, {"n", e.n}, {"r", e.radius}, {"value", e.value}};
    if (e.std_error)
        j["stderr"] = *e.std_error;
    if (e.closed_form_value)
        j["closed_form_value"] = *e.closed_form_value;
    if (e.imaginary_residual)
        j["imaginary_residual"] = *e.imaginary_residual;
    return j;
}

// Reference value used to judge a Monte Carlo mean: the closed forms for the
// scaled-monomial family, the contour route otherwise.
CountEstimate analytic_count(const BasisSpec& spec, int n, double r)
{
    if (spec.family() == bergman::Family::ScaledMonomial)
        return r < 1.0 ? bergman::expected_count_disk(n, r) : bergman::expected_count_unit_disk(n);
    return bergman::expected_count_contour(spec, n, r);
}

// ---------------------------------------------------------------- mc-run

struct McOptions
{
    std::string config_path;
    std::optional<std::string> basis, degree, radii, samples, seed, workers, bins, hist_max;
    std::string dump_roots, histogram, out, summary;
};

int run_mc_command(const McOptions& opt)
{
    bergman::ExperimentConfig config;
    if (!opt.config_path.empty())
        config = bergman::load_config(opt.config_path);
    auto apply = [&](const char* key, const std::optional<std::string>& value) {
        if (value)
            bergman::apply_config_entry(config, key, *value);
    };
    apply("basis", opt.basis);
    apply("degree", opt.degree);
    apply("radii", opt.radii);
    apply("samples", opt.samples);
    apply("seed", opt.seed);
    apply("workers", opt.workers);
    apply("histogram_bins", opt.bins);
    apply("histogram_max", opt.hist_max);
    if (!opt.dump_roots.empty())
        config.collect_roots = true;
    config.validate();

    json summary{{"command", "mc-run"}, {"config", config_json(config)}};
    bergman::MCResult result;
    try
    {
        result = bergman::run_mc(config);
    }
    catch (const bergman::DiagnosticError& e)
    {
        summary["diagnostics"] = {{"error", e.what()}};
        if (!opt.summary.empty())
            write_json(opt.summary, summary);
        throw;
    }

    std::vector<CountEstimate> rows;
    json per_radius = json::array();
    for (double r : config.radii)
    {
        CountEstimate mc = result.estimate(r);
        CountEstimate exact = analytic_count(config.basis, config.degree, r);
        rows.push_back(mc);
        rows.push_back(exact);
        const auto& s = result.at_radius(r);
        json entry{{"r", r},
                   {"mean", s.mean},
                   {"sd", s.sd},
                   {"stderr", s.std_error},
                   {"analytic", estimate_json(exact)}};
        if (s.std_error > 0.0)
            entry["z_score"] = (s.mean - exact.value) / s.std_error;
        per_radius.push_back(entry);
    }

    Output out(opt.out);
    bergman::write_counts_csv(out.stream(), rows);

    if (!opt.histogram.empty())
    {
        Output h(opt.histogram);
        bergman::write_histogram_csv(h.stream(), result.histogram);
    }
    if (!opt.dump_roots.empty())
    {
        Output d(opt.dump_roots);
        bergman::write_root_dump(d.stream(), result);
    }

    json results{{"radii", per_radius}, {"total_roots", result.total_roots}};
    if (config.radii.back() == 1.0)
    {
        auto f = bergman::fraction_inside(result);
        results["fraction_inside"] = f.degenerate
                                         ? json(nullptr)
                                         : json{{"value", f.value}, {"stderr", f.std_error}};
    }
    summary["results"] = results;
    summary["diagnostics"] = {{"samples_used", result.samples_used},
                              {"discarded", result.discarded},
                              {"discard_fraction", result.discard_fraction()},
                              {"discarded_indices", result.discarded_indices},
                              {"trimmed_events", result.trimmed_events}};
    if (!opt.summary.empty())
        write_json(opt.summary, summary);
    return 0;
}

// ---------------------------------------------------------------- orthocheck

int run_orthocheck(const std::string& basis, int degree, std::optional<int> radial,
                   std::optional<int> angular, double tolerance, const std::string& out_path)
{
    auto spec = BasisSpec::parse(basis);
    std::optional<bergman::QuadratureOrders> orders;
    if (radial || angular)
    {
        auto d = bergman::default_gram_orders(spec, degree);
        orders = bergman::QuadratureOrders{radial.value_or(d.radial), angular.value_or(d.angular)};
    }
    auto gram = bergman::gram_matrix(spec, degree, orders);
    double deviation = gram.max_identity_deviation();
    json report{{"command", "orthocheck"},
                {"basis", spec.name()},
                {"degree", degree},
                {"radial_order", gram.orders.radial},
                {"angular_order", gram.orders.angular},
                {"max_identity_deviation", deviation},
                {"tolerance", tolerance},
                {"approximate", gram.approximate},
                {"under_resolved", gram.under_resolved},
                {"pass", deviation <= tolerance}};
    write_json(out_path, report);
    return deviation <= tolerance ? 0 : kExitDiagnostic;
}

// ---------------------------------------------------------------- counts

int run_expected_count(const std::string& basis, int degree, const std::vector<double>& radii,
                       const std::string& method, std::optional<int> nodes,
                       const std::string& out_path)
{
    auto spec = BasisSpec::parse(basis);
    const bool monomial = spec.family() == bergman::Family::ScaledMonomial;
    if (method == "closed" && !monomial)
        throw bergman::ParameterError("--method closed is only available for scaled-monomial");

    std::vector<CountEstimate> rows;
    for (double r : radii)
    {
        if (!(r > 0.0 && r <= 1.0))
            throw bergman::DomainError("radius must lie in (0, 1]");
        if ((method == "closed" || method == "all") && monomial)
            rows.push_back(r < 1.0 ? bergman::expected_count_disk(degree, r)
                                   : bergman::expected_count_unit_disk(degree));
        if (method == "contour" || method == "all")
            rows.push_back(nodes ? bergman::expected_count_contour(spec, degree, r, *nodes)
                                 : bergman::expected_count_contour(spec, degree, r));
        if ((method == "area" || method == "all") && r < 1.0)
            rows.push_back(bergman::expected_count_area(spec, degree, r));
        if (method == "area" && r == 1.0)
            throw bergman::DomainError("the area route needs r < 1");
    }
    Output out(out_path);
    bergman::write_counts_csv(out.stream(), rows);
    return 0;
}

int run_scaling_limit(const std::vector<double>& ts, const std::vector<int>& degrees,
                      const std::string& out_path)
{
    Output out(out_path);
    auto& os = out.stream();
    os.precision(17);
    os << "method,n,r,value,stderr,t\n";
    for (double t : ts)
    {
        double limit = bergman::scaling_limit(t);
        os << bergman::to_string(CountMethod::LimitFormula) << ",,," << limit << ",," << t << '\n';
        for (int n : degrees)
        {
            if (n < 1)
                throw bergman::ParameterError("--degrees must be positive");
            double r = std::exp(-t / (2.0 * n));
            auto e = bergman::expected_count_disk(n, r);
            os << bergman::to_string(e.method) << ',' << n << ',' << r << ',' << e.value / n << ",,"
               << t << '\n';
        }
    }
    return 0;
}

int run_boundary_ratio(const std::string& basis, int degree, const std::vector<double>& thetas,
                       const std::string& out_path)
{
    auto spec = BasisSpec::parse(basis);
    Output out(out_path);
    auto& os = out.stream();
    os.precision(17);
    os << "theta,n,re,im,modulus,phase\n";
    for (double theta : thetas)
    {
        auto ratio = bergman::boundary_ratio(spec, degree, theta);
        os << theta << ',' << degree << ',' << ratio.real() << ',' << ratio.imag() << ','
           << std::abs(ratio) << ',' << std::arg(ratio) << '\n';
    }
    return 0;
}

int run_convergence(const std::string& basis, const std::vector<int>& degrees, double radius,
                    const std::string& out_path, const std::string& summary_path)
{
    auto spec = BasisSpec::parse(basis);
    auto report = bergman::convergence_report(spec, degrees, radius);
    Output out(out_path);
    bergman::write_convergence_csv(out.stream(), report);
    if (!summary_path.empty())
    {
        json rows = json::array();
        for (const auto& row : report.rows)
            rows.push_back({{"n", row.n},
                            {"method", bergman::to_string(row.method)},
                            {"count", row.count},
                            {"target", row.target},
                            {"gap", row.gap}});
        write_json(summary_path, {{"command", "convergence"},
                                  {"config", {{"basis", spec.name()}, {"r", radius}, {"degrees", degrees}}},
                                  {"results", rows},
                                  {"diagnostics",
                                   {{"tail_monotone", report.tail_monotone},
                                    {"fully_monotone", report.fully_monotone},
                                    {"gap_floor", bergman::kGapFloor}}}});
    }
    return 0;
}

int run_intensity_grid(const std::string& basis, int degree, const std::vector<double>& window,
                       int resolution, const std::string& out_path)
{
    if (window.size() != 4)
        throw bergman::ParameterError("--window expects xmin,xmax,ymin,ymax");
    auto spec = BasisSpec::parse(basis);
    auto grid = bergman::intensity_grid(spec, degree, {window[0], window[1], window[2], window[3]},
                                        resolution);
    Output out(out_path);
    bergman::write_csv(out.stream(), grid);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zero statistics of random polynomials spanned by Bergman polynomials"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "bergman-zeros 0.1.0");

    const std::string basis_help =
        "scaled-monomial | weighted-power:j=<real> | z-minus-one-squared | custom:<path>";

    McOptions mc;
    auto* mc_cmd = app.add_subcommand("mc-run", "Monte Carlo ensemble of random polynomials");
    mc_cmd->add_option("--config", mc.config_path, "key = value config file")->check(CLI::ExistingFile);
    mc_cmd->add_option("--basis", mc.basis, basis_help);
    mc_cmd->add_option("--degree", mc.degree, "polynomial degree n");
    mc_cmd->add_option("--radii", mc.radii, "comma separated radii in (0, 1], ascending");
    mc_cmd->add_option("--samples", mc.samples, "number of polynomials");
    mc_cmd->add_option("--seed", mc.seed, "master seed");
    mc_cmd->add_option("--workers", mc.workers, "worker threads (0 = all cores)");
    mc_cmd->add_option("--bins", mc.bins, "radial histogram bins");
    mc_cmd->add_option("--histogram-max", mc.hist_max, "upper edge of the radial histogram");
    mc_cmd->add_option("--dump-roots", mc.dump_roots, "write every root to this CSV");
    mc_cmd->add_option("--histogram", mc.histogram, "write the radial histogram to this CSV");
    mc_cmd->add_option("--out", mc.out, "counts CSV (default stdout)");
    mc_cmd->add_option("--summary", mc.summary, "JSON summary path");

    std::string basis = "scaled-monomial";
    int degree = 25;
    std::string out_path;

    std::optional<int> radial, angular;
    double tolerance = 1e-9;
    auto* ortho_cmd = app.add_subcommand("orthocheck", "Gram matrix of p_0..p_n against the identity");
    ortho_cmd->add_option("--basis", basis, basis_help);
    ortho_cmd->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
    ortho_cmd->add_option("--radial-order", radial);
    ortho_cmd->add_option("--angular-order", angular);
    ortho_cmd->add_option("--tolerance", tolerance);
    ortho_cmd->add_option("--out", out_path, "JSON report (default stdout)");

    std::vector<double> window{-1.2, 1.2, -1.2, 1.2};
    int resolution = 201;
    auto* grid_cmd = app.add_subcommand("intensity-grid", "Zero intensity on a rectangular grid");
    grid_cmd->add_option("--basis", basis, basis_help);
    grid_cmd->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
    grid_cmd->add_option("--window", window, "xmin,xmax,ymin,ymax")->delimiter(',');
    grid_cmd->add_option("--resolution", resolution)->check(CLI::PositiveNumber);
    grid_cmd->add_option("--out", out_path, "CSV path (default stdout)");

    std::vector<double> radii{0.5};
    std::string method = "all";
    std::optional<int> nodes;
    auto* count_cmd = app.add_subcommand("expected-count", "Expected number of zeros in D(0, r)");
    count_cmd->add_option("--basis", basis, basis_help);
    count_cmd->add_option("--degree", degree)->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--radius", radii, "radius or comma separated radii")->delimiter(',');
    count_cmd->add_option("--method", method)->check(CLI::IsMember({"closed", "contour", "area", "all"}));
    count_cmd->add_option("--nodes", nodes, "contour nodes");
    count_cmd->add_option("--out", out_path, "CSV path (default stdout)");

    std::vector<double> ts{0.5, 1.0, 2.0};
    std::vector<int> degrees{250, 500, 1000, 2000};
    auto* scaling_cmd = app.add_subcommand("scaling-limit", "Count in D(0, e^{-t/2n}) divided by n");
    scaling_cmd->add_option("--t", ts)->delimiter(',');
    scaling_cmd->add_option("--degrees", degrees)->delimiter(',');
    scaling_cmd->add_option("--out", out_path, "CSV path (default stdout)");

    std::vector<double> thetas{1.0471975511965976};
    int ratio_degree = 1000;
    auto* ratio_cmd = app.add_subcommand("boundary-ratio", "conj(K01) / (n K00) on the unit circle");
    ratio_cmd->add_option("--basis", basis, basis_help);
    ratio_cmd->add_option("--degree", ratio_degree)->check(CLI::PositiveNumber);
    ratio_cmd->add_option("--theta", thetas)->delimiter(',');
    ratio_cmd->add_option("--out", out_path, "CSV path (default stdout)");

    std::vector<int> conv_degrees{25, 50, 100, 200};
    double conv_radius = 0.5;
    std::string conv_summary;
    auto* conv_cmd = app.add_subcommand("convergence", "Gap to the large-n limit as n grows");
    conv_cmd->add_option("--basis", basis, basis_help);
    conv_cmd->add_option("--degrees", conv_degrees)->delimiter(',');
    conv_cmd->add_option("--radius", conv_radius);
    conv_cmd->add_option("--out", out_path, "CSV path (default stdout)");
    conv_cmd->add_option("--summary", conv_summary, "JSON summary path");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try
    {
        if (*mc_cmd)
            return run_mc_command(mc);
        if (*ortho_cmd)
            return run_orthocheck(basis, degree, radial, angular, tolerance, out_path);
        if (*grid_cmd)
            return run_intensity_grid(basis, degree, window, resolution, out_path);
        if (*count_cmd)
            return run_expected_count(basis, degree, radii, method, nodes, out_path);
        if (*scaling_cmd)
            return run_scaling_limit(ts, degrees, out_path);
        if (*ratio_cmd)
            return run_boundary_ratio(basis, ratio_degree, thetas, out_path);
        if (*conv_cmd)
            return run_convergence(basis, conv_degrees, conv_radius, out_path, conv_summary);
    }
    catch (const bergman::ParameterError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const bergman::DomainError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    catch (const bergman::ConditioningError& e)
    {
        std::cerr << "numerical diagnostic: " << e.what() << '\n';
        return kExitDiagnostic;
    }
    catch (const bergman::DiagnosticError& e)
    {
        std::cerr << "numerical diagnostic: " << e.what() << '\n';
        return kExitDiagnostic;
    }
    return 0;
}
