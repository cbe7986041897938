// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BERGMAN_INTENSITY_HPP
#define BERGMAN_INTENSITY_HPP

#include <iosfwd>
#include <vector>

#include "bergman/basis.hpp"
#include "bergman/kernel.hpp"

namespace bergman {

/// Zero density (k11 k00 - |k01|^2) / (pi k00^2) from a kernel triple.
double intensity_from_kernel(const KernelTriple& kernel);

/// General kernel form of the zero intensity. Requires |z| < 1.
double intensity_general(const BasisSpec& spec, int n, cplx z);

/// Closed two-term intensity of the scaled-monomial ensemble.
double intensity_closed(int n, cplx z);

/// Pointwise large-degree limit 2 / (pi (1 - |z|^2)^2).
double intensity_limit(cplx z);

/// Intensity of the unscaled-monomial (Kac) ensemble sum eta_k z^k.
double kac_intensity(int n, cplx z);

struct Window
{
    double x_min = -1.0;
    double x_max = 1.0;
    double y_min = -1.0;
    double y_max = 1.0;
};

/// Intensity sampled on a resolution x resolution lattice, row-major with
/// y varying slowest. Lattice points with |z| >= 1 are marked outside and
/// carry no value.
struct IntensityGrid
{
    Window window;
    int resolution = 0;
    int n = 0;
    std::vector<double> x;      // column coordinates
    std::vector<double> y;      // row coordinates
    std::vector<double> values; // resolution^2, 0 where outside
    std::vector<bool> inside;

    double at(int row, int col) const { return values[row * resolution + col]; }
};

IntensityGrid intensity_grid(const BasisSpec& spec, int n, const Window& window, int resolution);

/// CSV with header `x,y,rho,inside`; outside points leave rho empty.
void write_csv(std::ostream& out, const IntensityGrid& grid);

} // namespace bergman

#endif
