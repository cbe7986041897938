// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#include "bergman/intensity.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "parallel.hpp"

namespace bergman {
namespace {

void require_inside(cplx z, const char* what)
{
    if (!(std::abs(z) < 1.0))
        throw DomainError(std::string(what) + ": requires |z| < 1");
}

} // namespace

double intensity_from_kernel(const KernelTriple& kernel)
{
    const double k00 = kernel.k00.real();
    const double k11 = kernel.k11.real();
    const double numerator = k11 * k00 - std::norm(kernel.k01);
    // Cauchy-Schwarz makes the numerator non-negative; rounding can leave
    // a tiny negative residue.
    return std::max(0.0, numerator / (kPi * k00 * k00));
}

double intensity_general(const BasisSpec& spec, int n, cplx z)
{
    require_inside(z, "intensity_general");
    if (n < 0)
        throw ParameterError("intensity_general: n must be non-negative");
    return intensity_from_kernel(kernel_series(spec, n, z));
}

double intensity_closed(int n, cplx z)
{
    require_inside(z, "intensity_closed");
    if (n < 0)
        throw ParameterError("intensity_closed: n must be non-negative");
    const double modulus = std::abs(z);
    if (in_guard_band(n, modulus))
        return intensity_general(BasisSpec::scaled_monomial(), n, z);

    const double s = modulus * modulus;
    const double nn = n;
    const double sn = std::pow(s, n);
    const double sn1 = sn * s;
    const double denom = 1.0 + sn1 * ((nn + 1.0) * s - (nn + 2.0));
    const double tail = (nn + 1.0) * (nn + 2.0) * sn * (sn1 * s - (nn + 2.0) * s + nn + 1.0)
                        / (denom * denom);
    const double value = (2.0 / ((1.0 - s) * (1.0 - s)) - tail) / kPi;
    return std::max(0.0, value);
}

double intensity_limit(cplx z)
{
    require_inside(z, "intensity_limit");
    const double one_minus = 1.0 - std::norm(z);
    return 2.0 / (kPi * one_minus * one_minus);
}

double kac_intensity(int n, cplx z)
{
    require_inside(z, "kac_intensity");
    if (n < 0)
        throw ParameterError("kac_intensity: n must be non-negative");
    const double s = std::norm(z);
    const double one_minus = 1.0 - s;
    // |h_{n+1}| = (1 - s)(n + 1)|z|^n / (1 - s^{n+1}); 1 - s^{n+1} via expm1 keeps
    // digits when s is close to 1.
    const double tail = -std::expm1((n + 1.0) * std::log(s));
    const double h = s == 0.0 ? (n == 0 ? 1.0 : 0.0)
                              : one_minus * (n + 1.0) * std::pow(std::sqrt(s), n) / tail;
    return std::max(0.0, (1.0 - h * h) / (kPi * one_minus * one_minus));
}

IntensityGrid intensity_grid(const BasisSpec& spec, int n, const Window& window, int resolution)
{
    if (resolution < 2)
        throw ParameterError("intensity_grid: resolution must be at least 2");
    if (!(window.x_max > window.x_min) || !(window.y_max > window.y_min))
        throw ParameterError("intensity_grid: empty window");

    IntensityGrid grid;
    grid.window = window;
    grid.resolution = resolution;
    grid.n = n;
    grid.x.resize(resolution);
    grid.y.resize(resolution);
    for (int i = 0; i < resolution; ++i)
    {
        double t = static_cast<double>(i) / (resolution - 1);
        grid.x[i] = window.x_min + t * (window.x_max - window.x_min);
        grid.y[i] = window.y_min + t * (window.y_max - window.y_min);
    }
    // Pin the exact centre when the window is symmetric.
    if (resolution % 2 == 1)
    {
        if (window.x_min == -window.x_max)
            grid.x[resolution / 2] = 0.0;
        if (window.y_min == -window.y_max)
            grid.y[resolution / 2] = 0.0;
    }

    const std::size_t total = static_cast<std::size_t>(resolution) * resolution;
    grid.values.assign(total, 0.0);
    std::vector<char> inside(total, 0);

    detail::parallel_for(resolution, 0, [&](unsigned, std::int64_t row) {
        BasisValues scratch;
        for (int col = 0; col < resolution; ++col)
        {
            cplx z{grid.x[col], grid.y[row]};
            std::size_t idx = static_cast<std::size_t>(row) * resolution + col;
            if (std::abs(z) < 1.0)
            {
                inside[idx] = 1;
                grid.values[idx] = intensity_from_kernel(kernel_series(spec, n, z, scratch));
            }
        }
    }, 1);

    grid.inside.assign(inside.begin(), inside.end());
    return grid;
}

void write_csv(std::ostream& out, const IntensityGrid& grid)
{
    auto old_precision = out.precision(17);
    out << "x,y,rho,inside\n";
    for (int row = 0; row < grid.resolution; ++row)
        for (int col = 0; col < grid.resolution; ++col)
        {
            std::size_t idx = static_cast<std::size_t>(row) * grid.resolution + col;
            out << grid.x[col] << ',' << grid.y[row] << ',';
            if (grid.inside[idx])
                out << grid.values[idx] << ",1\n";
            else
                out << ",0\n";
        }
    out.precision(old_precision);
}

} // namespace bergman
