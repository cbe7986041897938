// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

//! \file counts.hpp
//! Expected number of zeros in centred disks, by several independent routes.
//!
//! Every route returns a CountEstimate labelled with how it was obtained so
//! that callers (and the route-agreement checks) can tell them apart.

#ifndef BERGMAN_COUNTS_HPP
#define BERGMAN_COUNTS_HPP

#include <optional>
#include <string>

#include "bergman/basis.hpp"

namespace bergman {

enum class CountMethod
{
    ClosedForm,
    RationalSeries,
    Contour,
    AreaQuadrature,
    MonteCarlo,
    LimitFormula,
};

std::string to_string(CountMethod method);

struct CountEstimate
{
    double value = 0.0;
    CountMethod method = CountMethod::ClosedForm;
    int n = 0;
    double radius = 0.0;
    std::optional<double> std_error; // Monte Carlo only

    // Route-specific diagnostics.
    std::optional<double> closed_form_value;  // expected_count_disk cross-check
    std::optional<double> imaginary_residual; // contour route
};

/// Closed-form count for the scaled-monomial ensemble, 0 < r < 1. The value
/// comes from the rational series; the subtractive closed form is also
/// evaluated away from the guard band and reported as a diagnostic.
CountEstimate expected_count_disk(int n, double r);

/// 2n/3 for the scaled-monomial ensemble.
CountEstimate expected_count_unit_disk(int n);

/// Large-degree limit 2r^2 / (1 - r^2).
double expected_count_limit(double r);

/// Limit of E[N_n(D(0, exp(-t/2n)))] / n, namely 2/t + t/(1 - e^t + t).
double scaling_limit(double t);

/// Default trapezoid node count for the contour route.
int default_contour_nodes(int n);

/// Boundary integral (1/2 pi i) \oint conj(K01)/K00 dz over |z| = r.
/// Throws ConditioningError if K00 nearly vanishes on the circle.
CountEstimate expected_count_contour(const BasisSpec& spec, int n, double r,
                                     std::optional<int> nodes = std::nullopt);

QuadratureOrders default_area_orders(int n);

/// Disk quadrature of the general intensity over D(0, r), 0 < r < 1.
CountEstimate expected_count_area(const BasisSpec& spec, int n, double r,
                                  std::optional<QuadratureOrders> orders = std::nullopt);

/// Expected count for the Kac ensemble sum eta_k z^k, 0 < r <= 1.
double kac_count_disk(int n, double r);

/// Kac scaling limit 1/t + 1/(1 - e^t).
double kac_scaling(double t);

/// conj(K01) / (n K00) at z = e^{i theta}; tends to (2/3) conj(z) for
/// weights that stay positive near the arc.
cplx boundary_ratio(const BasisSpec& spec, int n, double theta);

} // namespace bergman

#endif
