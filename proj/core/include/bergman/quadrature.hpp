// Copyright 2026 The bergman-zeros Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BERGMAN_QUADRATURE_HPP
#define BERGMAN_QUADRATURE_HPP

#include <vector>

#include "bergman/common.hpp"

namespace bergman {

struct GaussLegendreRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre nodes and weights on [-1, 1]; exact for degree 2m - 1.
GaussLegendreRule gauss_legendre(int m);

/// Tensor rule on the disk D(0, radius): Gauss-Legendre in r (weights carry
/// the Jacobian r) times the uniform trapezoid rule in theta.
struct DiskRule
{
    std::vector<double> radii;
    std::vector<double> radial_weights; // includes r dr
    std::vector<double> angles;
    double angular_weight = 0.0; // 2 pi / angular count

    std::size_t size() const { return radii.size() * angles.size(); }

    template <class F>
    double integrate(F&& f) const
    {
        CompensatedSum total;
        for (std::size_t i = 0; i < radii.size(); ++i)
        {
            double ring = 0.0;
            for (double theta : angles)
                ring += f(std::polar(radii[i], theta));
            total += radial_weights[i] * ring * angular_weight;
        }
        return total.value();
    }
};

DiskRule disk_rule(double radius, int radial, int angular);

} // namespace bergman

#endif
