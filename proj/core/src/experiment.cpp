// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include "bergman/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "parallel.hpp"

namespace bergman {
namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text)
{
    std::istringstream in(text);
    T value{};
    in >> value;
    if (in.fail() || !in.eof())
        throw ParameterError("config: cannot parse value '" + text + "' for key '" + key + "'");
    return value;
}

std::vector<double> parse_list(const std::string& key, const std::string& text)
{
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
    {
        item = trim(item);
        if (!item.empty())
            out.push_back(parse_number<double>(key, item));
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& text)
{
    if (text == "true" || text == "1" || text == "yes")
        return true;
    if (text == "false" || text == "0" || text == "no")
        return false;
    throw ParameterError("config: '" + key + "' expects true/false, got '" + text + "'");
}

struct Accumulator
{
    std::vector<std::int64_t> sum;
    std::vector<std::int64_t> sum_sq;
    std::vector<std::int64_t> bins;
    std::int64_t overflow = 0;
    std::int64_t used = 0;
    std::int64_t trimmed = 0;
    std::int64_t roots = 0;
    std::vector<std::int64_t> discarded;
};

} // namespace

void ExperimentConfig::validate() const
{
    if (degree < 0)
        throw ParameterError("config: degree must be non-negative");
    if (degree > basis.max_degree())
        throw ParameterError("config: basis " + basis.name() + " only provides degree up to "
                             + std::to_string(basis.max_degree()));
    if (samples < 1)
        throw ParameterError("config: samples must be at least 1");
    if (radii.empty())
        throw ParameterError("config: at least one radius is required");
    for (std::size_t i = 0; i < radii.size(); ++i)
    {
        if (!(radii[i] > 0.0 && radii[i] <= 1.0))
            throw ParameterError("config: radii must lie in (0, 1]");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw ParameterError("config: radii must be strictly ascending");
    }
    if (histogram_bins < 1 || !(histogram_max > 0.0))
        throw ParameterError("config: histogram needs positive bins and range");
    if (!(solver_tolerance > 0.0) || solver_max_iterations < 1)
        throw ParameterError("config: invalid solver settings");
    if (!(max_discard_fraction >= 0.0 && max_discard_fraction <= 1.0))
        throw ParameterError("config: max_discard_fraction must lie in [0, 1]");
}

void apply_config_entry(ExperimentConfig& config, const std::string& key, const std::string& raw)
{
    const std::string value = trim(raw);
    if (key == "basis")
        config.basis = BasisSpec::parse(value);
    else if (key == "degree")
        config.degree = parse_number<int>(key, value);
    else if (key == "radii")
        config.radii = parse_list(key, value);
    else if (key == "samples")
        config.samples = parse_number<std::int64_t>(key, value);
    else if (key == "seed" || key == "master_seed")
        config.master_seed = parse_number<std::uint64_t>(key, value);
    else if (key == "workers")
        config.workers = parse_number<unsigned>(key, value);
    else if (key == "histogram_bins")
        config.histogram_bins = parse_number<int>(key, value);
    else if (key == "histogram_max")
        config.histogram_max = parse_number<double>(key, value);
    else if (key == "solver_tolerance")
        config.solver_tolerance = parse_number<double>(key, value);
    else if (key == "solver_max_iterations")
        config.solver_max_iterations = parse_number<int>(key, value);
    else if (key == "max_discard_fraction")
        config.max_discard_fraction = parse_number<double>(key, value);
    else if (key == "collect_roots")
        config.collect_roots = parse_bool(key, value);
    else
        throw ParameterError("config: unknown key '" + key + "'");
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw ParameterError("config: cannot open " + path.string());
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParameterError("config: line " + std::to_string(line_no) + " is not key = value");
        apply_config_entry(base, trim(line.substr(0, eq)), line.substr(eq + 1));
    }
    return base;
}

std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& config)
{
    std::string radii;
    for (std::size_t i = 0; i < config.radii.size(); ++i)
        radii += (i ? "," : "") + format_double(config.radii[i]);
    return {
        {"basis", config.basis.name()},
        {"degree", std::to_string(config.degree)},
        {"radii", radii},
        {"samples", std::to_string(config.samples)},
        {"seed", std::to_string(config.master_seed)},
        {"workers", std::to_string(config.workers)},
        {"histogram_bins", std::to_string(config.histogram_bins)},
        {"histogram_max", format_double(config.histogram_max)},
        {"solver_tolerance", format_double(config.solver_tolerance)},
        {"solver_max_iterations", std::to_string(config.solver_max_iterations)},
        {"max_discard_fraction", format_double(config.max_discard_fraction)},
        {"collect_roots", config.collect_roots ? "true" : "false"},
    };
}

std::int64_t RadialHistogram::total() const
{
    std::int64_t t = overflow;
    for (auto c : counts)
        t += c;
    return t;
}

double MCResult::discard_fraction() const
{
    return samples_requested > 0 ? static_cast<double>(discarded) / samples_requested : 0.0;
}

const RadiusStats& MCResult::at_radius(double r) const
{
    for (const auto& s : radii)
        if (std::abs(s.radius - r) <= 1e-15)
            return s;
    throw ParameterError("MCResult: radius " + format_double(r) + " was not part of the run");
}

CountEstimate MCResult::estimate(double r) const
{
    const auto& s = at_radius(r);
    CountEstimate est;
    est.value = s.mean;
    est.method = CountMethod::MonteCarlo;
    est.n = degree;
    est.radius = r;
    est.std_error = s.std_error;
    return est;
}

MCResult run_mc(const ExperimentConfig& config)
{
    config.validate();

    const BasisExpansion expansion(config.basis, config.degree);
    const std::size_t n_radii = config.radii.size();
    const unsigned workers = detail::resolve_workers(config.workers);

    std::vector<Accumulator> acc(workers);
    for (auto& a : acc)
    {
        a.sum.assign(n_radii, 0);
        a.sum_sq.assign(n_radii, 0);
        a.bins.assign(config.histogram_bins, 0);
    }

    MCResult result;
    result.degree = config.degree;
    result.samples_requested = config.samples;
    if (config.collect_roots)
        result.roots.resize(config.samples);

    const double bin_scale = config.histogram_bins / config.histogram_max;

    detail::parallel_for(config.samples, workers, [&](unsigned worker, std::int64_t index) {
        Accumulator& a = acc[worker];
        CoefficientStream stream(config.master_seed, static_cast<std::uint64_t>(index));
        PolynomialSample sample = sample_polynomial(expansion, stream);
        RootSet roots = find_roots(sample.monomial, config.solver_tolerance,
                                   config.solver_max_iterations);
        if (!roots.converged)
        {
            a.discarded.push_back(index);
            return;
        }
        a.used += 1;
        a.trimmed += roots.trimmed > 0 ? 1 : 0;
        a.roots += static_cast<std::int64_t>(roots.roots.size());
        for (std::size_t i = 0; i < n_radii; ++i)
        {
            std::int64_t c = count_in_disk(roots, config.radii[i]);
            a.sum[i] += c;
            a.sum_sq[i] += c * c;
        }
        for (cplx z : roots.roots)
        {
            double bin = std::abs(z) * bin_scale;
            if (bin >= config.histogram_bins)
                ++a.overflow;
            else
                ++a.bins[static_cast<std::size_t>(bin)];
        }
        if (config.collect_roots)
            result.roots[index] = std::move(roots.roots);
    });

    // Integer reductions are exact, so the combination order is irrelevant.
    std::vector<std::int64_t> sum(n_radii, 0);
    std::vector<std::int64_t> sum_sq(n_radii, 0);
    result.histogram.counts.assign(config.histogram_bins, 0);
    for (const auto& a : acc)
    {
        for (std::size_t i = 0; i < n_radii; ++i)
        {
            sum[i] += a.sum[i];
            sum_sq[i] += a.sum_sq[i];
        }
        for (int b = 0; b < config.histogram_bins; ++b)
            result.histogram.counts[b] += a.bins[b];
        result.histogram.overflow += a.overflow;
        result.samples_used += a.used;
        result.trimmed_events += a.trimmed;
        result.total_roots += a.roots;
        result.discarded_indices.insert(result.discarded_indices.end(), a.discarded.begin(),
                                        a.discarded.end());
    }
    std::sort(result.discarded_indices.begin(), result.discarded_indices.end());
    result.discarded = static_cast<std::int64_t>(result.discarded_indices.size());

    result.histogram.edges.resize(config.histogram_bins + 1);
    for (int b = 0; b <= config.histogram_bins; ++b)
        result.histogram.edges[b] = config.histogram_max * b / config.histogram_bins;

    const double used = static_cast<double>(result.samples_used);
    for (std::size_t i = 0; i < n_radii; ++i)
    {
        RadiusStats s;
        s.radius = config.radii[i];
        if (result.samples_used > 0)
        {
            s.mean = static_cast<double>(sum[i]) / used;
            if (result.samples_used > 1)
            {
                double var = (static_cast<double>(sum_sq[i]) - static_cast<double>(sum[i]) * s.mean)
                             / (used - 1.0);
                s.sd = std::sqrt(std::max(0.0, var));
                s.std_error = s.sd / std::sqrt(used);
            }
        }
        result.radii.push_back(s);
    }

    for (std::size_t i = 1; i < n_radii; ++i)
        if (result.radii[i].mean < result.radii[i - 1].mean)
            throw DiagnosticError("run_mc: mean counts decrease with radius");

    if (result.discard_fraction() > config.max_discard_fraction)
        throw DiagnosticError("run_mc: " + std::to_string(result.discarded) + " of "
                              + std::to_string(config.samples)
                              + " samples failed to converge");
    return result;
}

FractionInside fraction_inside(const MCResult& result)
{
    const auto& s = result.at_radius(1.0);
    FractionInside f;
    if (result.degree == 0)
    {
        f.degenerate = true;
        return f;
    }
    f.value = s.mean / result.degree;
    f.std_error = s.std_error / result.degree;
    return f;
}

ConvergenceReport convergence_report(const BasisSpec& spec, const std::vector<int>& degrees, double r)
{
    if (degrees.empty())
        throw ParameterError("convergence_report: no degrees given");
    for (std::size_t i = 1; i < degrees.size(); ++i)
        if (degrees[i] <= degrees[i - 1])
            throw ParameterError("convergence_report: degrees must be ascending");
    if (!(r > 0.0 && r <= 1.0))
        throw DomainError("convergence_report: radius must lie in (0, 1]");

    ConvergenceReport report;
    report.radius = r;
    for (int n : degrees)
    {
        ConvergenceRow row;
        row.n = n;
        if (r < 1.0)
        {
            row.method = CountMethod::AreaQuadrature;
            row.count = expected_count_area(spec, n, r).value;
            row.target = expected_count_limit(r);
            row.gap = std::abs(row.count - row.target);
        }
        else
        {
            if (n < 1)
                throw ParameterError("convergence_report: r = 1 needs degrees >= 1");
            row.method = CountMethod::Contour;
            row.count = expected_count_contour(spec, n, 1.0).value;
            row.target = 2.0 * n / 3.0;
            row.gap = std::abs(row.count / n - 2.0 / 3.0);
        }
        report.rows.push_back(row);
    }

    auto monotone_from = [&](std::size_t first) {
        for (std::size_t i = first + 1; i < report.rows.size(); ++i)
            if (report.rows[i].gap > report.rows[i - 1].gap + kGapFloor)
                return false;
        return true;
    };
    report.fully_monotone = monotone_from(0);
    report.tail_monotone = monotone_from(report.rows.size() / 2);
    return report;
}

void write_counts_csv(std::ostream& out, const std::vector<CountEstimate>& rows)
{
    auto old = out.precision(17);
    out << "method,n,r,value,stderr\n";
    for (const auto& e : rows)
    {
        out << to_string(e.method) << ',' << e.n << ',' << e.radius << ',' << e.value << ',';
        if (e.std_error)
            out << *e.std_error;
        out << '\n';
    }
    out.precision(old);
}

void write_root_dump(std::ostream& out, const MCResult& result)
{
    auto old = out.precision(17);
    out << "sample_index,re,im\n";
    for (std::size_t i = 0; i < result.roots.size(); ++i)
        for (cplx z : result.roots[i])
            out << i << ',' << z.real() << ',' << z.imag() << '\n';
    out.precision(old);
}

void write_histogram_csv(std::ostream& out, const RadialHistogram& histogram)
{
    auto old = out.precision(17);
    out << "bin_lo,bin_hi,count\n";
    for (std::size_t b = 0; b < histogram.counts.size(); ++b)
        out << histogram.edges[b] << ',' << histogram.edges[b + 1] << ',' << histogram.counts[b]
            << '\n';
    out << histogram.edges.back() << ",inf," << histogram.overflow << '\n';
    out.precision(old);
}

void write_convergence_csv(std::ostream& out, const ConvergenceReport& report)
{
    auto old = out.precision(17);
    out << "n,method,r,count,target,gap\n";
    for (const auto& row : report.rows)
        out << row.n << ',' << to_string(row.method) << ',' << report.radius << ',' << row.count
            << ',' << row.target << ',' << row.gap << '\n';
    out.precision(old);
}

} // namespace bergman
