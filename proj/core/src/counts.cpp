// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include "bergman/counts.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bergman/intensity.hpp"
#include "bergman/kernel.hpp"
#include "bergman/quadrature.hpp"

namespace bergman {
namespace {

void require_open_radius(double r, const char* what)
{
    if (!(r > 0.0 && r < 1.0))
        throw DomainError(std::string(what) + ": radius must lie in (0, 1)");
}

void require_degree(int n, const char* what)
{
    if (n < 0)
        throw ParameterError(std::string(what) + ": n must be non-negative");
}

// sum_{k=1}^n k(k+1) s^k / (1 + sum_{k=1}^n (k+1) s^k)
double rational_series_count(int n, double s)
{
    CompensatedSum numerator;
    CompensatedSum denominator;
    denominator += 1.0;
    double power = 1.0;
    for (int k = 1; k <= n; ++k)
    {
        power *= s;
        double kk = k;
        numerator += kk * (kk + 1.0) * power;
        denominator += (kk + 1.0) * power;
    }
    return numerator.value() / denominator.value();
}

double subtractive_closed_count(int n, double s)
{
    const double nn = n;
    const double sn1 = std::pow(s, n + 1);
    return 2.0 * s / (1.0 - s)
           - (nn + 1.0) * (nn + 2.0) * (1.0 - s) * sn1 / (1.0 + sn1 * ((nn + 1.0) * s - (nn + 2.0)));
}

} // namespace

std::string to_string(CountMethod method)
{
    switch (method)
    {
    case CountMethod::ClosedForm:
        return "closed-form";
    case CountMethod::RationalSeries:
        return "rational-series";
    case CountMethod::Contour:
        return "contour";
    case CountMethod::AreaQuadrature:
        return "area-quadrature";
    case CountMethod::MonteCarlo:
        return "monte-carlo";
    case CountMethod::LimitFormula:
        return "limit-formula";
    }
    return "unknown";
}

CountEstimate expected_count_disk(int n, double r)
{
    require_degree(n, "expected_count_disk");
    require_open_radius(r, "expected_count_disk");
    const double s = r * r;

    CountEstimate est;
    est.method = CountMethod::RationalSeries;
    est.n = n;
    est.radius = r;
    est.value = rational_series_count(n, s);
    if (!in_guard_band(n, r))
        est.closed_form_value = subtractive_closed_count(n, s);
    return est;
}

CountEstimate expected_count_unit_disk(int n)
{
    require_degree(n, "expected_count_unit_disk");
    const double nn = n;
    CountEstimate est;
    est.method = CountMethod::RationalSeries;
    est.n = n;
    est.radius = 1.0;
    est.value = (nn * (nn + 1.0) * (nn + 2.0) / 3.0) / ((nn + 1.0) * (nn + 2.0) / 2.0);
    return est;
}

double expected_count_limit(double r)
{
    require_open_radius(r, "expected_count_limit");
    return 2.0 * r * r / (1.0 - r * r);
}

double scaling_limit(double t)
{
    if (!(t > 0.0))
        throw DomainError("scaling_limit: t must be positive");
    if (t >= 1.0)
        return 2.0 / t + t / (1.0 - std::exp(t) + t);

    // With e^t - 1 - t = (t^2/2) u, the value is (2/t)(u - 1)/u and
    // u - 1 = sum_{k>=3} 2 t^{k-2} / k! has no cancellation.
    double term = 2.0 * t / 6.0; // k = 3
    double u_minus_one = 0.0;
    for (int k = 3; k < 60; ++k)
    {
        u_minus_one += term;
        term *= t / (k + 1);
        if (term < 1e-18 * u_minus_one)
            break;
    }
    return (2.0 / t) * u_minus_one / (1.0 + u_minus_one);
}

int default_contour_nodes(int n)
{
    return std::max(64, 8 * (n + 1));
}

CountEstimate expected_count_contour(const BasisSpec& spec, int n, double r, std::optional<int> nodes)
{
    require_degree(n, "expected_count_contour");
    if (!(r > 0.0 && r <= 1.0))
        throw DomainError("expected_count_contour: radius must lie in (0, 1]");
    const int m = nodes.value_or(default_contour_nodes(n));
    if (m < 8)
        throw ParameterError("expected_count_contour: need at least 8 nodes");

    CountEstimate est;
    est.method = CountMethod::Contour;
    est.n = n;
    est.radius = r;

    // With z = r e^{i theta}, dz = i z dtheta, so the integral is the mean of
    // conj(K01) z / K00 over the circle.
    CompensatedSum re;
    CompensatedSum im;
    double k00_min = std::numeric_limits<double>::infinity();
    double k00_max = 0.0;
    BasisValues scratch;
    for (int a = 0; a < m; ++a)
    {
        cplx z = std::polar(r, 2.0 * kPi * a / m);
        KernelTriple kt = kernel_series(spec, n, z, scratch);
        double k00 = kt.k00.real();
        k00_min = std::min(k00_min, k00);
        k00_max = std::max(k00_max, k00);
        cplx term = std::conj(kt.k01) * z / k00;
        re += term.real();
        im += term.imag();
    }
    if (!(k00_min > 1e-12 * k00_max))
        throw ConditioningError("expected_count_contour: K_n nearly vanishes on |z| = "
                                + std::to_string(r));

    est.value = re.value() / m;
    est.imaginary_residual = std::abs(im.value() / m);
    return est;
}

QuadratureOrders default_area_orders(int n)
{
    return QuadratureOrders{std::max(n + 4, 64), 2 * (2 * n + 5)};
}

CountEstimate expected_count_area(const BasisSpec& spec, int n, double r,
                                  std::optional<QuadratureOrders> orders)
{
    require_degree(n, "expected_count_area");
    require_open_radius(r, "expected_count_area");
    const QuadratureOrders q = orders.value_or(default_area_orders(n));
    auto rule = disk_rule(r, q.radial, q.angular);

    BasisValues scratch;
    CountEstimate est;
    est.method = CountMethod::AreaQuadrature;
    est.n = n;
    est.radius = r;
    if (n > 0)
        est.value = rule.integrate([&](cplx z) {
            return intensity_from_kernel(kernel_series(spec, n, z, scratch));
        });
    return est;
}

double kac_count_disk(int n, double r)
{
    require_degree(n, "kac_count_disk");
    if (!(r > 0.0 && r <= 1.0))
        throw DomainError("kac_count_disk: radius must lie in (0, 1]");
    if (r == 1.0)
        return n / 2.0;

    // sum_{k=1}^n k s^k / sum_{k=0}^n s^k, the contour integral for K = sum s^k.
    const double s = r * r;
    CompensatedSum numerator;
    CompensatedSum denominator;
    denominator += 1.0;
    double power = 1.0;
    for (int k = 1; k <= n; ++k)
    {
        power *= s;
        numerator += k * power;
        denominator += power;
    }
    return numerator.value() / denominator.value();
}

double kac_scaling(double t)
{
    if (!(t > 0.0))
        throw DomainError("kac_scaling: t must be positive");
    if (t >= 1.0)
        return 1.0 / t + 1.0 / (1.0 - std::exp(t));

    // e^t - 1 = t v with v - 1 = sum_{k>=2} t^{k-1}/k!; value = (v - 1)/(t v).
    double term = 0.5 * t; // k = 2
    double v_minus_one = 0.0;
    for (int k = 2; k < 60; ++k)
    {
        v_minus_one += term;
        term *= t / (k + 1);
        if (term < 1e-18 * v_minus_one)
            break;
    }
    return v_minus_one / (t * (1.0 + v_minus_one));
}

cplx boundary_ratio(const BasisSpec& spec, int n, double theta)
{
    if (n < 1)
        throw ParameterError("boundary_ratio: n must be at least 1");
    if (std::abs(std::sin(theta)) < 1e-12)
        throw DomainError("boundary_ratio: theta must avoid the real axis");
    KernelTriple kt = kernel_series(spec, n, std::polar(1.0, theta));
    return std::conj(kt.k01) / (static_cast<double>(n) * kt.k00.real());
}

} // namespace bergman
