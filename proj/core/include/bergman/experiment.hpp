// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

//! \file experiment.hpp
//! Monte Carlo ensembles of random polynomials and their zero statistics.

#ifndef BERGMAN_EXPERIMENT_HPP
#define BERGMAN_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "bergman/basis.hpp"
#include "bergman/counts.hpp"
#include "bergman/sampler.hpp"

namespace bergman {

struct ExperimentConfig
{
    BasisSpec basis = BasisSpec::scaled_monomial();
    int degree = 25;
    std::vector<double> radii{1.0};
    std::int64_t samples = 20000;
    std::uint64_t master_seed = 42;
    unsigned workers = 0; // 0: hardware concurrency

    int histogram_bins = 60;
    double histogram_max = 1.5;

    double solver_tolerance = kRootTolerance;
    int solver_max_iterations = kRootMaxIterations;
    double max_discard_fraction = 0.01;

    bool collect_roots = false;

    /// Throws ParameterError when a field is out of range.
    void validate() const;
};

/// Applies one `key = value` setting. Unknown keys throw ParameterError.
void apply_config_entry(ExperimentConfig& config, const std::string& key, const std::string& value);

/// Reads a flat `key = value` file (`#` starts a comment) on top of `base`.
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = {});

/// Fully resolved settings in a stable order, as written into every summary.
std::vector<std::pair<std::string, std::string>> config_entries(const ExperimentConfig& config);

struct RadiusStats
{
    double radius = 0.0;
    double mean = 0.0;
    double sd = 0.0;
    double std_error = 0.0;
};

struct RadialHistogram
{
    std::vector<double> edges;         // bins + 1 edges on [0, max]
    std::vector<std::int64_t> counts;  // per bin
    std::int64_t overflow = 0;         // |root| >= max

    std::int64_t total() const;
};

struct MCResult
{
    int degree = 0;
    std::int64_t samples_requested = 0;
    std::int64_t samples_used = 0;
    std::int64_t discarded = 0;
    std::int64_t trimmed_events = 0;
    std::int64_t total_roots = 0;
    std::vector<RadiusStats> radii;
    RadialHistogram histogram;

    /// Roots of each sample by sample index; empty for discarded samples or
    /// when roots were not collected.
    std::vector<std::vector<cplx>> roots;
    std::vector<std::int64_t> discarded_indices;

    double discard_fraction() const;
    const RadiusStats& at_radius(double r) const;
    CountEstimate estimate(double r) const;
};

/// Runs the ensemble. Results depend only on the config, not on the number
/// of workers. Throws DiagnosticError when more than
/// config.max_discard_fraction of the samples fail to converge.
MCResult run_mc(const ExperimentConfig& config);

struct FractionInside
{
    double value = 0.0;
    double std_error = 0.0;
    bool degenerate = false; // degree 0
};

/// Mean number of zeros in the closed unit disk's interior divided by the
/// degree. The result must include r = 1.
FractionInside fraction_inside(const MCResult& result);

struct ConvergenceRow
{
    int n = 0;
    CountMethod method = CountMethod::AreaQuadrature;
    double count = 0.0;
    double target = 0.0; // 2r^2/(1-r^2), or 2/3 of n at r = 1
    double gap = 0.0;    // |count - target|, divided by n at r = 1
};

struct ConvergenceReport
{
    double radius = 0.0;
    std::vector<ConvergenceRow> rows;
    bool tail_monotone = false; // gaps nonincreasing over the last half
    bool fully_monotone = false;
};

/// Gaps below this level are treated as equal when checking monotonicity;
/// it sits above the quadrature error of the area and contour routes.
inline constexpr double kGapFloor = 1e-10;

ConvergenceReport convergence_report(const BasisSpec& spec, const std::vector<int>& degrees, double r);

/// CSV writers for the experiment outputs.
void write_counts_csv(std::ostream& out, const std::vector<CountEstimate>& rows);
void write_root_dump(std::ostream& out, const MCResult& result);
void write_histogram_csv(std::ostream& out, const RadialHistogram& histogram);
void write_convergence_csv(std::ostream& out, const ConvergenceReport& report);

} // namespace bergman

#endif
